#pragma once

#include <cstdint>

#include "quasigray/bit_state.hpp"
#include "quasigray/counter.hpp"
#include "quasigray/probe.hpp"

namespace quasigray {

/// Position of a string in the binary reflected Gray code cycle that starts
/// at all-zeros.
struct BrgcRank {
  std::uint64_t value = 0;
  friend auto operator<=>(const BrgcRank&, const BrgcRank&) = default;
};

// Successor: read every bit; with even parity flip bit 0, otherwise flip the
// bit just above the lowest set bit (state 10...0 flips its top bit and
// wraps to 00...0). One write per step.
void brgc_next(const SubrangeView& view, ProbeLedger& ledger);
void brgc_prev(const SubrangeView& view, ProbeLedger& ledger);
void brgc_next(BitState& state, ProbeLedger& ledger);
void brgc_prev(BitState& state, ProbeLedger& ledger);

/// Pure rank; requires dim <= 63.
BrgcRank brgc_rank(const BitState& state);
/// Rank computed under the ledger: every bit of the view is charged.
BrgcRank brgc_rank(const SubrangeView& view, ProbeLedger& ledger);

/// The string whose bits are r XOR (r >> 1). Throws UsageError when
/// r >= 2^dim.
BitState brgc_unrank(BrgcRank r, std::size_t dim);

CounterSpec make_brgc_counter(std::size_t dim);

}  // namespace quasigray
