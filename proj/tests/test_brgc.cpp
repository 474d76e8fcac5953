#include <doctest.h>

#include "oracles.hpp"
#include "quasigray/brgc.hpp"

using namespace quasigray;

namespace {

std::string next_of(const std::string& s) {
  BitState b = BitState::parse(s);
  ProbeLedger l(b.dim());
  l.open_step();
  brgc_next(b, l);
  l.close_step();
  return b.to_string();
}

std::string prev_of(const std::string& s) {
  BitState b = BitState::parse(s);
  ProbeLedger l(b.dim());
  l.open_step();
  brgc_prev(b, l);
  l.close_step();
  return b.to_string();
}

}  // namespace

TEST_CASE("brgc successor examples") {
  CHECK(next_of("000") == "001");
  CHECK(next_of("011") == "010");
  CHECK(next_of("100") == "000");
  CHECK(next_of("0") == "1");
  CHECK(next_of("1") == "0");
}

TEST_CASE("brgc predecessor examples") {
  CHECK(prev_of("001") == "000");
  CHECK(prev_of("000") == "100");
  CHECK(prev_of("010") == "011");
}

TEST_CASE("brgc rank and unrank examples") {
  CHECK(brgc_rank(BitState::parse("000")).value == 0);
  CHECK(brgc_rank(BitState::parse("110")).value == 4);
  CHECK(brgc_rank(BitState::parse("100")).value == 7);
  CHECK(brgc_unrank({0}, 3).to_string() == "000");
  CHECK(brgc_unrank({4}, 3).to_string() == "110");
  CHECK(brgc_unrank({7}, 3).to_string() == "100");
  CHECK_THROWS_AS(brgc_unrank({8}, 3), UsageError);
  CHECK_THROWS_AS(brgc_rank(BitState(64)), UsageError);
}

TEST_CASE("brgc agrees with the xor oracle") {
  for (std::size_t d = 1; d <= 10; ++d) {
    const std::uint64_t n = std::uint64_t{1} << d;
    for (std::uint64_t r = 0; r < n; ++r) {
      const BitState s = BitState::from_integer(oracle::brgc_encode(r), d);
      CHECK(brgc_unrank({r}, d) == s);
      CHECK(brgc_rank(s).value == r);
      CHECK(oracle::brgc_decode(s.to_integer()) == r);
      BitState t = s;
      ProbeLedger l(d);
      l.open_step();
      brgc_next(t, l);
      const StepCost c = l.close_step();
      CHECK(t.to_integer() == oracle::brgc_encode((r + 1) % n));
      CHECK(c == StepCost{d, 1});
      l.open_step();
      brgc_prev(t, l);
      l.close_step();
      CHECK(t == s);
    }
  }
}

TEST_CASE("charged rank reads every bit") {
  BitState s = BitState::parse("10110");
  ProbeLedger l(5);
  l.open_step();
  CHECK(brgc_rank(SubrangeView(s), l).value == brgc_rank(s).value);
  CHECK(l.step_reads() == 5);
}

TEST_CASE("brgc counter spec") {
  const CounterSpec c = make_brgc_counter(4);
  CHECK(c.name == "brgc");
  CHECK(c.dim == 4);
  CHECK(c.initial == BitState(4));
  CHECK_THROWS_AS(make_brgc_counter(0), UsageError);
}
