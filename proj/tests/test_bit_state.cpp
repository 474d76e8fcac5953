#include <doctest.h>

#include "quasigray/bit_state.hpp"

using namespace quasigray;

TEST_CASE("bit state text is high bit first") {
  const BitState s = BitState::parse("110");
  CHECK(s.dim() == 3);
  CHECK(s.get(0) == 0);
  CHECK(s.get(1) == 1);
  CHECK(s.get(2) == 1);
  CHECK(s.to_string() == "110");
  CHECK(s.to_integer() == 6);
  CHECK(s.popcount() == 2);
  CHECK(BitState::from_bits({0, 1, 1}) == s);
  CHECK(BitState::from_integer(6, 3) == s);
}

TEST_CASE("bit state rejects bad input") {
  CHECK_THROWS_AS(BitState(0), UsageError);
  CHECK_THROWS_AS(BitState::parse(""), UsageError);
  CHECK_THROWS_AS(BitState::parse("012"), UsageError);
  CHECK_THROWS_AS(BitState::from_bits({0, 2}), UsageError);
  BitState s(2);
  CHECK_THROWS_AS(s.get(2), UsageError);
  CHECK_THROWS_AS(s.set(0, 5), UsageError);
}

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(BitState::parse("1010"), BitState::parse("0110")) == 2);
  CHECK(hamming_distance(BitState::parse("1"), BitState::parse("1")) == 0);
  CHECK_THROWS_AS(hamming_distance(BitState(2), BitState(3)), UsageError);
}
