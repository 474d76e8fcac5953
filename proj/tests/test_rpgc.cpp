#include <doctest.h>

#include "oracles.hpp"
#include "quasigray/rpgc.hpp"

using namespace quasigray;
using oracle::Bits;

namespace {

struct Pair {
  BitState s;
  SubrangeView a, b;
  explicit Pair(const Bits& x, const Bits& y)
      : s(oracle::to_state([&] {
          Bits j = x;
          j.insert(j.end(), y.begin(), y.end());
          return j;
        }())),
        a(s, 0, x.size()),
        b(s, x.size(), y.size()) {}
};

Bits bits_of(std::uint64_t v, std::size_t d) {
  Bits b(d);
  for (std::size_t j = 0; j < d; ++j) b[j] = (v >> j) & 1;
  return b;
}

template <class F>
std::pair<Bits, StepCost> run(Bits v, F f) {
  BitState s = oracle::to_state(v);
  ProbeLedger l(s.dim());
  l.open_step();
  f(SubrangeView(s), l);
  const StepCost c = l.close_step();
  return {oracle::from_state(s), c};
}

Bits inc(const Bits& v) {
  return run(v, [](const SubrangeView& w, ProbeLedger& l) { rpgc_increment(w, l); }).first;
}

Bits dec(const Bits& v) {
  return run(v, [](const SubrangeView& w, ProbeLedger& l) { rpgc_decrement(w, l); }).first;
}

}  // namespace

TEST_CASE("compare_equal examples") {
  {
    Pair p({0, 1}, {0, 1});
    ProbeLedger l(4);
    l.open_step();
    CHECK(compare_equal(p.a, p.b, l));
    CHECK(l.step_reads() == 4);
  }
  {
    Pair p({1, 0}, {0, 0});
    ProbeLedger l(4);
    l.open_step();
    CHECK_FALSE(compare_equal(p.a, p.b, l));
    CHECK(l.step_reads() == 2);
  }
  {
    Pair p({0, 0}, {0, 1});
    ProbeLedger l(4);
    l.open_step();
    CHECK_FALSE(compare_equal(p.a, p.b, l));
    CHECK(l.step_reads() == 4);
  }
}

TEST_CASE("compare_inc examples") {
  {
    Pair p({1}, {0});
    ProbeLedger l(2);
    l.open_step();
    CHECK(compare_inc(p.a, p.b, l));
  }
  {
    Pair p({0, 1}, {0, 0});
    ProbeLedger l(4);
    l.open_step();
    CHECK(compare_inc(p.a, p.b, l));
  }
  {
    Pair p({1, 1}, {1, 0});
    ProbeLedger l(4);
    l.open_step();
    CHECK_FALSE(compare_inc(p.a, p.b, l));
  }
}

TEST_CASE("compare_inc matches the successor oracle on all pairs") {
  for (std::size_t len = 1; len <= 6; ++len) {
    const std::uint64_t n = std::uint64_t{1} << len;
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::uint64_t y = 0; y < n; ++y) {
        const Bits a = bits_of(x, len), b = bits_of(y, len);
        Pair p(a, b);
        ProbeLedger l(2 * len);
        l.open_step();
        const bool got = compare_inc(p.a, p.b, l);
        const StepCost c = l.close_step();
        CHECK(got == (a == oracle::rpgc_next(b)));
        CHECK(c.writes == 0);
        CHECK(c.reads <= 2 * len);
      }
    }
  }
}

TEST_CASE("compare_equal and compare_inc need equal lengths") {
  BitState s(5);
  ProbeLedger l(5);
  l.open_step();
  CHECK_THROWS_AS(compare_equal(SubrangeView(s, 0, 2), SubrangeView(s, 2, 3), l), UsageError);
  CHECK_THROWS_AS(compare_inc(SubrangeView(s, 0, 2), SubrangeView(s, 2, 3), l), UsageError);
}

TEST_CASE("power-of-two increment and decrement examples") {
  const auto inc2 = [](Bits v) {
    return run(v, [](const SubrangeView& w, ProbeLedger& l) { rpgc_increment_pow2(w, l); }).first;
  };
  const auto dec2 = [](Bits v) {
    return run(v, [](const SubrangeView& w, ProbeLedger& l) { rpgc_decrement_pow2(w, l); }).first;
  };
  CHECK(inc2({0}) == Bits{1});
  CHECK(inc2({0, 0}) == Bits{0, 1});
  CHECK(inc2({1, 1}) == Bits{1, 0});
  CHECK(dec2({0, 1}) == Bits{0, 0});
  CHECK(dec2({1, 0}) == Bits{1, 1});
  CHECK_THROWS_AS(inc2({0, 0, 0}), UsageError);
  CHECK_THROWS_AS(dec2({0, 0, 0}), UsageError);
}

TEST_CASE("general increment and decrement examples") {
  CHECK(inc({0, 0, 0}) == Bits{0, 0, 1});
  CHECK(inc({0, 1, 0}) == Bits{1, 1, 0});
  CHECK(inc({1, 0, 0}) == Bits{0, 0, 0});
  CHECK(dec({1, 1, 0}) == Bits{0, 1, 0});
  CHECK(dec({0, 0, 1}) == Bits{0, 0, 0});
}

TEST_CASE("increment and decrement match the direct simulation") {
  for (std::size_t d = 1; d <= 10; ++d) {
    const std::uint64_t n = std::uint64_t{1} << d;
    for (std::uint64_t v = 0; v < n; ++v) {
      const Bits b = bits_of(v, d);
      const auto [up, cost] =
          run(b, [](const SubrangeView& w, ProbeLedger& l) { rpgc_increment(w, l); });
      CHECK(up == oracle::rpgc_next(b));
      CHECK(cost.writes == 1);
      CHECK(cost.reads <= d);
      CHECK(dec(b) == oracle::rpgc_prev(b));
    }
  }
}

TEST_CASE("oracle sequence is a permutation ending at 10...0") {
  for (std::size_t d = 1; d <= 12; ++d) {
    const auto seq = oracle::rpgc_sequence(d);
    std::vector<bool> seen(seq.size(), false);
    for (const Bits& b : seq) {
      std::uint64_t v = 0;
      for (std::size_t j = 0; j < d; ++j) v |= static_cast<std::uint64_t>(b[j]) << j;
      CHECK_FALSE(seen[v]);
      seen[v] = true;
    }
    Bits last(d, 0);
    last[0] = 1;
    CHECK(seq.back() == last);
    CHECK(oracle::rpgc_next(seq.back()) == Bits(d, 0));
  }
}

TEST_CASE("last state is 10...0 for every d up to 18") {
  for (std::size_t d = 1; d <= 18; ++d) {
    BitState s(d);
    ProbeLedger l(d);
    const std::uint64_t n = std::uint64_t{1} << d;
    for (std::uint64_t t = 0; t + 1 < n; ++t) {
      l.open_step();
      rpgc_increment(s, l);
      l.close_step();
    }
    BitState last(d);
    last.set(0, 1);
    CHECK(s == last);
  }
}

TEST_CASE("is_last and is_first") {
  for (std::size_t d = 1; d <= 9; ++d) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
      BitState s = BitState::from_integer(v, d);
      ProbeLedger l(d);
      l.open_step();
      CHECK(rpgc_is_last(SubrangeView(s), l) == (v == 1));
      CHECK(rpgc_is_first(SubrangeView(s), l) == (v == 0));
      CHECK(l.close_step().writes == 0);
    }
  }
}

TEST_CASE("is_last read order alternates halves") {
  // A = [1,0], B = [0,1]: reads A[0], B[0], A[1], B[1]; B[1] is the mismatch.
  BitState s = BitState::from_bits({1, 0, 0, 1});
  ProbeLedger l(4);
  l.open_step();
  CHECK_FALSE(rpgc_is_last(SubrangeView(s), l));
  CHECK(l.step_reads() == 4);
  // B[0] set: stops after A[0], B[0].
  BitState t = BitState::from_bits({1, 0, 1, 0});
  ProbeLedger m(4);
  m.open_step();
  CHECK_FALSE(rpgc_is_last(SubrangeView(t), m));
  CHECK(m.step_reads() == 2);
}

TEST_CASE("rpgc counter at d = 1024 steps with one write") {
  BitState s(1024);
  ProbeLedger l(1024);
  for (int t = 0; t < 2000; ++t) {
    l.open_step();
    rpgc_increment(s, l);
    const StepCost c = l.close_step();
    REQUIRE(c.writes == 1);
    REQUIRE(c.reads <= 1024);
  }
  CHECK(s.popcount() > 0);
}
