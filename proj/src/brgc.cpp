#include "quasigray/brgc.hpp"

#include <string>

namespace quasigray {

namespace {

struct Scan {
  std::size_t ones = 0;
  std::size_t lowest_one = 0;
};

Scan read_all(const SubrangeView& view, ProbeLedger& ledger) {
  Scan s;
  bool seen = false;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (view.read(ledger, i) == 1) {
      if (!seen) s.lowest_one = i;
      seen = true;
      ++s.ones;
    }
  }
  return s;
}

void flip(const SubrangeView& view, ProbeLedger& ledger, std::size_t i) {
  // Already read, so consulting it again is free.
  view.write(ledger, i, 1 - view.read(ledger, i));
}

void check_rank_width(std::size_t dim) {
  if (dim > 63) throw UsageError("BRGC rank supports at most 63 bits");
}

}  // namespace

void brgc_next(const SubrangeView& view, ProbeLedger& ledger) {
  const Scan s = read_all(view, ledger);
  const std::size_t top = view.size() - 1;
  if (s.ones % 2 == 0) {
    flip(view, ledger, 0);
  } else if (s.lowest_one == top) {
    flip(view, ledger, top);
  } else {
    flip(view, ledger, s.lowest_one + 1);
  }
}

void brgc_prev(const SubrangeView& view, ProbeLedger& ledger) {
  const Scan s = read_all(view, ledger);
  const std::size_t top = view.size() - 1;
  if (s.ones % 2 == 1) {
    flip(view, ledger, 0);
  } else if (s.ones == 0) {
    flip(view, ledger, top);
  } else {
    flip(view, ledger, s.lowest_one + 1);
  }
}

void brgc_next(BitState& state, ProbeLedger& ledger) {
  brgc_next(SubrangeView(state), ledger);
}

void brgc_prev(BitState& state, ProbeLedger& ledger) {
  brgc_prev(SubrangeView(state), ledger);
}

BrgcRank brgc_rank(const BitState& state) {
  check_rank_width(state.dim());
  std::uint64_t rank = 0;
  int prefix = 0;
  for (std::size_t i = state.dim(); i-- > 0;) {
    prefix ^= state.raw(i);
    rank |= static_cast<std::uint64_t>(prefix) << i;
  }
  return {rank};
}

BrgcRank brgc_rank(const SubrangeView& view, ProbeLedger& ledger) {
  check_rank_width(view.size());
  std::uint64_t rank = 0;
  int prefix = 0;
  for (std::size_t i = view.size(); i-- > 0;) {
    prefix ^= view.read(ledger, i);
    rank |= static_cast<std::uint64_t>(prefix) << i;
  }
  return {rank};
}

BitState brgc_unrank(BrgcRank r, std::size_t dim) {
  check_rank_width(dim);
  if (dim == 0) throw UsageError("dimension must be positive");
  if (r.value >> dim != 0) {
    throw UsageError("rank " + std::to_string(r.value) +
                     " out of range for dimension " + std::to_string(dim));
  }
  return BitState::from_integer(r.value ^ (r.value >> 1), dim);
}

CounterSpec make_brgc_counter(std::size_t dim) {
  if (dim == 0) throw UsageError("brgc requires dim >= 1");
  CounterSpec c;
  c.name = "brgc";
  c.dim = dim;
  c.params = {{"dim", static_cast<std::int64_t>(dim)}};
  c.initial = BitState(dim);
  c.advance = [](BitState& s, ProbeLedger& l) { brgc_next(s, l); };
  return c;
}

}  // namespace quasigray
