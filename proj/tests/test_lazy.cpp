#include <doctest.h>

#include "oracles.hpp"
#include "quasigray/harness.hpp"
#include "quasigray/lazy.hpp"

using namespace quasigray;

namespace {

struct Run {
  BitState state;
  StepCost cost;
};

template <class F>
Run step(const LazyLayout& layout, BitState s, F f) {
  ProbeLedger l(s.dim());
  l.open_step();
  f(LazyFields::bind(layout, s), l);
  const StepCost c = l.close_step();
  return {s, c};
}

const auto lazy = [](const LazyFields& f, ProbeLedger& l) { lazy_increment(f, l); };
const auto spin = [](const LazyFields& f, ProbeLedger& l) { spin_increment(f, l); };
const auto dspin = [](const LazyFields& f, ProbeLedger& l) { double_spin_increment(f, l); };

}  // namespace

TEST_CASE("layout") {
  const LazyLayout l = LazyLayout::make(8, 2);
  CHECK(l.log_n == 3);
  CHECK(l.dim() == 13);
  CHECK(l.i_offset() == 8);
  CHECK(l.k_offset() == 11);
  CHECK_THROWS_AS(LazyLayout::make(3, 1), UsageError);
  CHECK_THROWS_AS(LazyLayout::make(1, 0), UsageError);
  CHECK_THROWS_AS(LazyLayout::make(0, 0), UsageError);
  CHECK_THROWS_AS(make_lazy_state(l, {0, 0}, 0, 0), UsageError);
}

TEST_CASE("lazy increment examples") {
  const LazyLayout L = LazyLayout::make(4, 0);
  Run r = step(L, make_lazy_state(L, {0, 0, 0, 0}, 0), lazy);
  CHECK(r.state == make_lazy_state(L, {1, 0, 0, 0}, 0));
  r = step(L, make_lazy_state(L, {1, 0, 0, 0}, 0), lazy);
  CHECK(r.state == make_lazy_state(L, {0, 0, 0, 0}, 1));
  r = step(L, make_lazy_state(L, {0, 0, 0, 0}, 1), lazy);
  CHECK(r.state == make_lazy_state(L, {0, 1, 0, 0}, 0));
}

TEST_CASE("spin increment examples") {
  const LazyLayout L = LazyLayout::make(4, 1);
  const std::vector<int> b = {0, 1, 1, 0};
  CHECK(step(L, make_lazy_state(L, b, 3, 0), spin).state == make_lazy_state(L, b, 0, 1));
  CHECK(step(L, make_lazy_state(L, {0, 0, 0, 0}, 0, 1), spin).state ==
        make_lazy_state(L, {1, 0, 0, 0}, 0, 0));
  CHECK(step(L, make_lazy_state(L, b, 1, 0), spin).state == make_lazy_state(L, b, 2, 0));
  const LazyLayout wide = LazyLayout::make(4, 2);
  CHECK_THROWS_AS(step(wide, BitState(wide.dim()), spin), UsageError);
  const LazyLayout none = LazyLayout::make(4, 0);
  CHECK_THROWS_AS(step(none, BitState(none.dim()), spin), UsageError);
}

TEST_CASE("double-spin increment examples") {
  const LazyLayout L = LazyLayout::make(4, 2);
  const std::vector<int> b = {1, 0, 0, 1};
  CHECK(step(L, make_lazy_state(L, b, 3, 1), dspin).state == make_lazy_state(L, b, 0, 2));
  CHECK(step(L, make_lazy_state(L, {0, 0, 0, 0}, 0, 3), dspin).state ==
        make_lazy_state(L, {1, 0, 0, 0}, 0, 0));
  CHECK(step(L, make_lazy_state(L, b, 2, 0), dspin).state == make_lazy_state(L, b, 3, 0));
}

TEST_CASE("wine increment examples") {
  const LazyLayout L = LazyLayout::make(2, 1, FieldEncoding::brgc, FieldEncoding::brgc);
  const SubCode ic = make_brgc_subcode(1), kc = make_brgc_subcode(1);
  const auto wine = [&](const LazyFields& f, ProbeLedger& l) { wine_increment(f, ic, kc, l); };
  CHECK(step(L, make_lazy_state(L, {0, 0}, 0, 0), wine).state ==
        make_lazy_state(L, {0, 0}, 1, 0));
  const Run r = step(L, make_lazy_state(L, {0, 0}, 0, 1), wine);
  CHECK(r.state == make_lazy_state(L, {1, 0}, 0, 0));
  CHECK(r.cost.writes == 2);
  CHECK(step(L, make_lazy_state(L, {1, 0}, 0, 1), wine).state ==
        make_lazy_state(L, {0, 0}, 1, 1));
}

TEST_CASE("sub-codes") {
  const SubCode b = make_brgc_subcode(3);
  CHECK(b.last == std::vector<int>{0, 0, 1});
  const SubCode r = make_rpgc_subcode(3);
  CHECK(r.last == std::vector<int>{1, 0, 0});
  BitState s = BitState::from_bits({1, 0, 0});
  ProbeLedger l(3);
  l.open_step();
  CHECK(r.rank(SubrangeView(s), l) == 7);
  CHECK(l.step_reads() == 3);
  CHECK_THROWS_AS(make_subcode(FieldEncoding::binary, 3), UsageError);
  CHECK_THROWS_AS(make_rpgc_subcode(25), UsageError);
  CHECK(parse_field_encoding("rpgc") == FieldEncoding::rpgc);
  CHECK_THROWS_AS(parse_field_encoding("gray"), UsageError);
}

TEST_CASE("lazy-family cycles follow the integer simulation") {
  struct Case {
    std::string name;
    std::size_t n, g;
  };
  std::vector<Case> cases;
  for (std::size_t n : {2, 4, 8}) {
    cases.push_back({"lazy", n, 0});
    cases.push_back({"spin", n, 1});
    for (std::size_t g = 1; g <= 3; ++g) {
      cases.push_back({"doublespin", n, g});
      cases.push_back({"wine", n, g});
    }
  }
  for (const Case& c : cases) {
    CAPTURE(c.name);
    CAPTURE(c.n);
    CAPTURE(c.g);
    CounterSpec spec = c.name == "lazy"   ? make_lazy_counter(c.n)
                       : c.name == "spin" ? make_spin_counter(c.n)
                       : c.name == "wine" ? make_wine_counter(c.n, c.g)
                                          : make_double_spin_counter(c.n, c.g);
    EnumerateOptions opt;
    opt.record_sequence = true;
    const CycleReport rep = enumerate_cycle(spec, opt);
    REQUIRE(rep.closed);
    CHECK(rep.distinct);
    oracle::LazySim sim(c.n, c.g);
    for (std::size_t t = 0; t < rep.sequence.size(); ++t) {
      const BitState want = c.name == "wine" ? sim.wine_state() : sim.binary_state();
      REQUIRE(rep.sequence[t] == want.to_string());
      if (c.name == "lazy") sim.lazy_step();
      else if (c.name == "spin") sim.spin_step();
      else if (c.name == "wine") sim.wine_step();
      else sim.double_spin_step();
    }
    const BitState back = c.name == "wine" ? sim.wine_state() : sim.binary_state();
    CHECK(back == spec.initial);
  }
}

TEST_CASE("double-spin with g = 1 is the spin counter") {
  for (std::size_t n : {2, 4, 8, 16}) {
    const CounterSpec a = make_spin_counter(n), b = make_double_spin_counter(n, 1);
    BitState sa = a.initial, sb = b.initial;
    ProbeLedger la(a.dim), lb(b.dim);
    for (int t = 0; t < 5000; ++t) {
      const StepCost ca = step_once(a, sa, la), cb = step_once(b, sb, lb);
      REQUIRE(sa == sb);
      REQUIRE(ca == cb);
    }
  }
}

TEST_CASE("wine with partition-coded fields") {
  for (auto [ie, ke] : {std::pair{FieldEncoding::rpgc, FieldEncoding::brgc},
                        std::pair{FieldEncoding::brgc, FieldEncoding::rpgc},
                        std::pair{FieldEncoding::rpgc, FieldEncoding::rpgc}}) {
    for (std::size_t n : {4, 8}) {
      for (std::size_t g = 1; g <= 3; ++g) {
        const auto rep = enumerate_cycle(make_wine_counter(n, g, ie, ke));
        CHECK(rep.closed);
        CHECK(rep.distinct);
        CHECK(rep.worst_writes <= 3);
        // The cycle length depends only on the field sizes.
        CHECK(rep.length == enumerate_cycle(make_wine_counter(n, g)).length);
      }
    }
  }
}

TEST_CASE("counter constructors validate") {
  CHECK_THROWS_AS(make_lazy_counter(6), UsageError);
  CHECK_THROWS_AS(make_double_spin_counter(4, 0), UsageError);
  CHECK_THROWS_AS(make_wine_counter(4, 0), UsageError);
  CHECK_THROWS_AS(make_wine_counter(3, 1), UsageError);
  CHECK(make_wine_counter(4, 2).params_string() == "n=4;g=2");
}
