#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quasigray/bit_state.hpp"

namespace quasigray {

struct StepCost {
  std::size_t reads = 0;
  std::size_t writes = 0;
  friend bool operator==(const StepCost&, const StepCost&) = default;
};

/// Bit-probe accounting in the decision-assignment-tree model.
///
/// Within one step a position is charged as a read at most once, and only if
/// it was neither read nor written earlier in the same step: a DAT path has
/// already fixed the value of every bit it read, and leaf rules assign fixed
/// values, so consulting such a bit again is free. Writes are counted as a
/// set of positions; writes never add to the read set.
class ProbeLedger {
 public:
  explicit ProbeLedger(std::size_t dim);

  std::size_t dim() const noexcept { return read_mark_.size(); }

  void open_step();
  bool step_open() const noexcept { return open_; }
  StepCost close_step();

  /// True when `pos` has been read or written in the open step.
  bool known(std::size_t pos) const noexcept {
    return read_mark_[pos] == epoch_ || write_mark_[pos] == epoch_;
  }
  void note_read(std::size_t pos);
  void note_write(std::size_t pos);

  std::size_t step_reads() const noexcept { return step_reads_; }
  std::size_t step_writes() const noexcept { return step_writes_; }

  std::uint64_t steps() const noexcept { return steps_; }
  std::uint64_t total_reads() const noexcept { return total_reads_; }
  std::uint64_t total_writes() const noexcept { return total_writes_; }
  std::size_t max_reads() const noexcept { return max_reads_; }
  std::size_t max_writes() const noexcept { return max_writes_; }

 private:
  void require_open(std::size_t pos) const;

  std::vector<std::uint64_t> read_mark_;
  std::vector<std::uint64_t> write_mark_;
  std::uint64_t epoch_ = 0;
  bool open_ = false;
  std::size_t step_reads_ = 0;
  std::size_t step_writes_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t total_reads_ = 0;
  std::uint64_t total_writes_ = 0;
  std::size_t max_reads_ = 0;
  std::size_t max_writes_ = 0;
};

int tracked_read(const BitState& state, ProbeLedger& ledger, std::size_t pos);
void tracked_write(BitState& state, ProbeLedger& ledger, std::size_t pos,
                   int value);

/// A contiguous window [offset, offset + len) of a BitState. Views of the
/// same state used within one step share that step's ledger, so overlapping
/// consultations are charged once.
class SubrangeView {
 public:
  SubrangeView(BitState& base, std::size_t offset, std::size_t len);
  explicit SubrangeView(BitState& base) : SubrangeView(base, 0, base.dim()) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return len_; }
  BitState& base() const noexcept { return *base_; }

  int read(ProbeLedger& ledger, std::size_t i) const {
    return tracked_read(*base_, ledger, offset_ + index(i));
  }
  void write(ProbeLedger& ledger, std::size_t i, int value) const {
    tracked_write(*base_, ledger, offset_ + index(i), value);
  }
  /// Uncharged inspection, for oracles and reporting.
  int peek(std::size_t i) const { return base_->get(offset_ + index(i)); }

  SubrangeView sub(std::size_t offset, std::size_t len) const;
  SubrangeView first_half() const { return sub(0, len_ / 2); }
  SubrangeView second_half() const { return sub(len_ / 2, len_ - len_ / 2); }

 private:
  std::size_t index(std::size_t i) const;

  BitState* base_;
  std::size_t offset_;
  std::size_t len_;
};

/// Scans the view from index 0 upward and stops at the first set bit.
bool tracked_is_zero(const SubrangeView& view, ProbeLedger& ledger);

}  // namespace quasigray
