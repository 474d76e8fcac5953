#include <doctest.h>

#include "quasigray/probe.hpp"

using namespace quasigray;

TEST_CASE("reading a bit twice in a step costs one read") {
  BitState s(4);
  ProbeLedger l(4);
  l.open_step();
  tracked_read(s, l, 2);
  tracked_read(s, l, 2);
  CHECK(l.step_reads() == 1);
}

TEST_CASE("reading a bit after writing it is free") {
  BitState s(4);
  ProbeLedger l(4);
  l.open_step();
  tracked_write(s, l, 0, 1);
  CHECK(tracked_read(s, l, 0) == 1);
  const StepCost c = l.close_step();
  CHECK(c == StepCost{0, 1});
}

TEST_CASE("empty step") {
  ProbeLedger l(3);
  l.open_step();
  CHECK(l.close_step() == StepCost{0, 0});
  CHECK(l.steps() == 1);
}

TEST_CASE("writes are a set") {
  BitState s(4);
  ProbeLedger l(4);
  l.open_step();
  tracked_write(s, l, 1, 1);
  tracked_write(s, l, 1, 1);
  CHECK(l.step_writes() == 1);
  tracked_write(s, l, 3, 1);
  CHECK(l.step_writes() == 2);
  CHECK_THROWS_AS(tracked_write(s, l, 4, 1), UsageError);
}

TEST_CASE("blind write of the current value still counts") {
  BitState s(2);
  ProbeLedger l(2);
  l.open_step();
  tracked_write(s, l, 0, 0);
  CHECK(l.close_step() == StepCost{0, 1});
  CHECK(s.get(0) == 0);
}

TEST_CASE("close_step totals and maxima") {
  BitState s(4);
  ProbeLedger l(4);
  l.open_step();
  tracked_read(s, l, 0);
  tracked_read(s, l, 1);
  tracked_write(s, l, 1, 1);
  CHECK(l.close_step() == StepCost{2, 1});

  ProbeLedger m(4);
  m.open_step();
  for (std::size_t p : {0, 1, 2}) tracked_read(s, m, p);
  m.close_step();
  m.open_step();
  tracked_read(s, m, 3);
  m.close_step();
  CHECK(m.total_reads() == 4);
  CHECK(m.max_reads() == 3);
  CHECK(m.steps() == 2);
}

TEST_CASE("ledger misuse") {
  BitState s(2);
  ProbeLedger l(2);
  CHECK_THROWS_AS(tracked_read(s, l, 0), UsageError);
  CHECK_THROWS_AS(l.close_step(), UsageError);
  l.open_step();
  CHECK_THROWS_AS(l.open_step(), UsageError);
  ProbeLedger wrong(3);
  wrong.open_step();
  CHECK_THROWS_AS(tracked_read(s, wrong, 0), UsageError);
}

TEST_CASE("subrange views share the step") {
  BitState s(6);
  ProbeLedger l(6);
  SubrangeView all(s);
  SubrangeView mid(s, 2, 3);
  CHECK(mid.first_half().size() == 1);
  CHECK(mid.second_half().size() == 2);
  CHECK(mid.second_half().offset() == 3);
  l.open_step();
  mid.write(l, 0, 1);
  CHECK(all.read(l, 2) == 1);
  CHECK(all.read(l, 3) == 0);
  CHECK(l.close_step() == StepCost{1, 1});
  CHECK_THROWS_AS(SubrangeView(s, 4, 3), UsageError);
  CHECK_THROWS_AS(mid.peek(3), UsageError);
}

TEST_CASE("tracked_is_zero stops at the first set bit") {
  BitState s = BitState::parse("0100");
  ProbeLedger l(4);
  l.open_step();
  CHECK_FALSE(tracked_is_zero(SubrangeView(s), l));
  CHECK(l.step_reads() == 3);
  l.close_step();
  BitState z(3);
  ProbeLedger lz(3);
  lz.open_step();
  CHECK(tracked_is_zero(SubrangeView(z), lz));
  CHECK(lz.step_reads() == 3);
}
