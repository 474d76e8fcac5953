#pragma once

#include "quasigray/counter.hpp"
#include "quasigray/probe.hpp"

namespace quasigray {

// Recursive Partition Gray Code.
//
// A string of even length is split into halves A (low indices) and B. One
// step increments A unless A = B, in which case B is decremented instead.
// Odd lengths use bit 0 as a direction bit x over the remaining bits W: with
// x = 0 W is incremented until it reaches its last state 10...0 (W[0] = 1),
// then x flips; with x = 1 W is decremented back to 00...0, then x flips.
// Every step writes exactly one bit. All probes go through the ledger and
// the read orders below are the ones the average-read bounds rely on.

/// Pairwise scan (A[0],B[0]), (A[1],B[1]), ... up to the first difference.
bool compare_equal(const SubrangeView& a, const SubrangeView& b,
                   ProbeLedger& ledger);

/// True iff `a` equals the RPGC successor of `b`, decided without modifying
/// either. Even lengths follow the half-splitting recursion on (B1 = B2);
/// odd lengths branch on B's direction bit.
bool compare_inc(const SubrangeView& a, const SubrangeView& b,
                 ProbeLedger& ledger);

/// Power-of-two lengths only.
void rpgc_increment_pow2(const SubrangeView& b, ProbeLedger& ledger);
void rpgc_decrement_pow2(const SubrangeView& b, ProbeLedger& ledger);

void rpgc_increment(const SubrangeView& b, ProbeLedger& ledger);
void rpgc_decrement(const SubrangeView& b, ProbeLedger& ledger);
void rpgc_increment(BitState& state, ProbeLedger& ledger);
void rpgc_decrement(BitState& state, ProbeLedger& ledger);

/// True when the view holds 10...0 (index 0 set, the rest clear), the last
/// state of an RPGC cycle. Reads halves alternately: A[0], B[0], A[1], ...
bool rpgc_is_last(const SubrangeView& w, ProbeLedger& ledger);
/// True when the view is all zeros. Reads B's two halves alternately, then
/// A's second half, then A's first half.
bool rpgc_is_first(const SubrangeView& w, ProbeLedger& ledger);

CounterSpec make_rpgc_counter(std::size_t dim);

}  // namespace quasigray
