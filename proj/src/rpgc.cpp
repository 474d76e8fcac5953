#include "quasigray/rpgc.hpp"

#include <algorithm>
#include <bit>

namespace quasigray {

namespace {

bool is_pow2(std::size_t n) { return std::has_single_bit(n); }

void flip_single(const SubrangeView& b, ProbeLedger& ledger) {
  b.write(ledger, 0, 1 - b.read(ledger, 0));
}

void require_same_length(const SubrangeView& a, const SubrangeView& b) {
  if (a.size() != b.size()) throw UsageError("compared views differ in length");
}

// Reads lo[j], hi[j] alternately; returns false at the first bit that does
// not match `expected(view_index)`. Leftover bits of the longer half follow.
template <typename Expected>
bool interleaved_match(const SubrangeView& lo, const SubrangeView& hi,
                       ProbeLedger& ledger, std::size_t lo_base,
                       std::size_t hi_base, Expected expected) {
  const std::size_t n = std::max(lo.size(), hi.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (j < lo.size() && lo.read(ledger, j) != expected(lo_base + j)) {
      return false;
    }
    if (j < hi.size() && hi.read(ledger, j) != expected(hi_base + j)) {
      return false;
    }
  }
  return true;
}

bool all_zero(const SubrangeView& v, ProbeLedger& ledger, std::size_t from,
              std::size_t to) {
  for (std::size_t j = from; j < to; ++j) {
    if (v.read(ledger, j) != 0) return false;
  }
  return true;
}

}  // namespace

bool compare_equal(const SubrangeView& a, const SubrangeView& b,
                   ProbeLedger& ledger) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.read(ledger, i) != b.read(ledger, i)) return false;
  }
  return true;
}

bool compare_inc(const SubrangeView& a, const SubrangeView& b,
                 ProbeLedger& ledger) {
  require_same_length(a, b);
  const std::size_t n = a.size();
  if (n == 1) return a.read(ledger, 0) != b.read(ledger, 0);

  if (n % 2 == 0) {
    const SubrangeView a1 = a.first_half(), a2 = a.second_half();
    const SubrangeView b1 = b.first_half(), b2 = b.second_half();
    if (compare_equal(b1, b2, ledger)) {
      // B's successor decrements B2 and keeps B1.
      if (!compare_equal(a1, b1, ledger)) return false;
      return compare_inc(b2, a2, ledger);
    }
    // B's successor increments B1 and keeps B2.
    if (!compare_equal(a2, b2, ledger)) return false;
    return compare_inc(a1, b1, ledger);
  }

  // Odd length: B = [x, W]; its successor either flips x at an end of W's
  // cycle or moves W one step in the direction x selects.
  const SubrangeView wa = a.sub(1, n - 1), wb = b.sub(1, n - 1);
  if (b.read(ledger, 0) == 0) {
    if (rpgc_is_last(wb, ledger)) {
      return a.read(ledger, 0) == 1 && compare_equal(wa, wb, ledger);
    }
    return a.read(ledger, 0) == 0 && compare_inc(wa, wb, ledger);
  }
  if (rpgc_is_first(wb, ledger)) {
    return a.read(ledger, 0) == 0 && rpgc_is_first(wa, ledger);
  }
  return a.read(ledger, 0) == 1 && compare_inc(wb, wa, ledger);
}

bool rpgc_is_last(const SubrangeView& w, ProbeLedger& ledger) {
  const auto expected = [](std::size_t i) { return i == 0 ? 1 : 0; };
  if (w.size() == 1) return w.read(ledger, 0) == 1;
  const std::size_t h = w.size() / 2;
  return interleaved_match(w.sub(0, h), w.sub(h, w.size() - h), ledger, 0, h,
                           expected);
}

bool rpgc_is_first(const SubrangeView& w, ProbeLedger& ledger) {
  const auto zero = [](std::size_t) { return 0; };
  if (w.size() == 1) return w.read(ledger, 0) == 0;
  const std::size_t h = w.size() / 2;
  const SubrangeView a = w.sub(0, h);
  const SubrangeView b = w.sub(h, w.size() - h);
  if (b.size() == 1) {
    if (b.read(ledger, 0) != 0) return false;
  } else {
    const std::size_t hb = b.size() / 2;
    if (!interleaved_match(b.sub(0, hb), b.sub(hb, b.size() - hb), ledger, 0,
                           0, zero)) {
      return false;
    }
  }
  return all_zero(a, ledger, h / 2, h) && all_zero(a, ledger, 0, h / 2);
}

void rpgc_increment_pow2(const SubrangeView& b, ProbeLedger& ledger) {
  if (!is_pow2(b.size())) throw UsageError("length must be a power of two");
  if (b.size() == 1) {
    flip_single(b, ledger);
    return;
  }
  const SubrangeView lo = b.first_half(), hi = b.second_half();
  if (compare_equal(lo, hi, ledger)) {
    rpgc_decrement_pow2(hi, ledger);
  } else {
    rpgc_increment_pow2(lo, ledger);
  }
}

void rpgc_decrement_pow2(const SubrangeView& b, ProbeLedger& ledger) {
  if (!is_pow2(b.size())) throw UsageError("length must be a power of two");
  if (b.size() == 1) {
    flip_single(b, ledger);
    return;
  }
  const SubrangeView lo = b.first_half(), hi = b.second_half();
  if (compare_inc(lo, hi, ledger)) {
    rpgc_increment_pow2(hi, ledger);
  } else {
    rpgc_decrement_pow2(lo, ledger);
  }
}

void rpgc_increment(const SubrangeView& b, ProbeLedger& ledger) {
  const std::size_t n = b.size();
  if (n == 1) {
    flip_single(b, ledger);
  } else if (is_pow2(n)) {
    rpgc_increment_pow2(b, ledger);
  } else if (n % 2 == 1) {
    const SubrangeView w = b.sub(1, n - 1);
    if (b.read(ledger, 0) == 0) {
      if (rpgc_is_last(w, ledger)) {
        b.write(ledger, 0, 1);
      } else {
        rpgc_increment(w, ledger);
      }
    } else if (rpgc_is_first(w, ledger)) {
      b.write(ledger, 0, 0);
    } else {
      rpgc_decrement(w, ledger);
    }
  } else {
    const SubrangeView lo = b.first_half(), hi = b.second_half();
    if (compare_equal(lo, hi, ledger)) {
      rpgc_decrement(hi, ledger);
    } else {
      rpgc_increment(lo, ledger);
    }
  }
}

void rpgc_decrement(const SubrangeView& b, ProbeLedger& ledger) {
  const std::size_t n = b.size();
  if (n == 1) {
    flip_single(b, ledger);
  } else if (is_pow2(n)) {
    rpgc_decrement_pow2(b, ledger);
  } else if (n % 2 == 1) {
    const SubrangeView w = b.sub(1, n - 1);
    if (b.read(ledger, 0) == 0) {
      if (rpgc_is_first(w, ledger)) {
        b.write(ledger, 0, 1);
      } else {
        rpgc_decrement(w, ledger);
      }
    } else if (rpgc_is_last(w, ledger)) {
      b.write(ledger, 0, 0);
    } else {
      rpgc_increment(w, ledger);
    }
  } else {
    const SubrangeView lo = b.first_half(), hi = b.second_half();
    if (compare_inc(lo, hi, ledger)) {
      rpgc_increment(hi, ledger);
    } else {
      rpgc_decrement(lo, ledger);
    }
  }
}

void rpgc_increment(BitState& state, ProbeLedger& ledger) {
  rpgc_increment(SubrangeView(state), ledger);
}

void rpgc_decrement(BitState& state, ProbeLedger& ledger) {
  rpgc_decrement(SubrangeView(state), ledger);
}

CounterSpec make_rpgc_counter(std::size_t dim) {
  if (dim == 0) throw UsageError("rpgc requires dim >= 1");
  CounterSpec c;
  c.name = "rpgc";
  c.dim = dim;
  c.params = {{"dim", static_cast<std::int64_t>(dim)}};
  c.initial = BitState(dim);
  c.advance = [](BitState& s, ProbeLedger& l) { rpgc_increment(s, l); };
  return c;
}

}  // namespace quasigray
