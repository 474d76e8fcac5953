#include "quasigray/probe.hpp"

#include <algorithm>
#include <string>

namespace quasigray {

ProbeLedger::ProbeLedger(std::size_t dim)
    : read_mark_(dim, 0), write_mark_(dim, 0) {
  if (dim == 0) throw UsageError("ledger dimension must be positive");
}

void ProbeLedger::open_step() {
  if (open_) throw UsageError("a probe step is already open");
  ++epoch_;
  open_ = true;
  step_reads_ = 0;
  step_writes_ = 0;
}

StepCost ProbeLedger::close_step() {
  if (!open_) throw UsageError("no open probe step to close");
  open_ = false;
  ++steps_;
  total_reads_ += step_reads_;
  total_writes_ += step_writes_;
  max_reads_ = std::max(max_reads_, step_reads_);
  max_writes_ = std::max(max_writes_, step_writes_);
  return {step_reads_, step_writes_};
}

void ProbeLedger::require_open(std::size_t pos) const {
  if (!open_) throw UsageError("bit probe outside an open step");
  if (pos >= read_mark_.size()) {
    throw UsageError("probe position " + std::to_string(pos) +
                     " out of range for dimension " +
                     std::to_string(read_mark_.size()));
  }
}

void ProbeLedger::note_read(std::size_t pos) {
  require_open(pos);
  if (known(pos)) return;
  read_mark_[pos] = epoch_;
  ++step_reads_;
}

void ProbeLedger::note_write(std::size_t pos) {
  require_open(pos);
  if (write_mark_[pos] == epoch_) return;
  write_mark_[pos] = epoch_;
  ++step_writes_;
}

int tracked_read(const BitState& state, ProbeLedger& ledger, std::size_t pos) {
  if (ledger.dim() != state.dim()) throw UsageError("ledger/state mismatch");
  ledger.note_read(pos);
  return state.raw(pos);
}

void tracked_write(BitState& state, ProbeLedger& ledger, std::size_t pos,
                   int value) {
  if (ledger.dim() != state.dim()) throw UsageError("ledger/state mismatch");
  if (value != 0 && value != 1) throw UsageError("bit value must be 0 or 1");
  ledger.note_write(pos);
  state.raw_set(pos, value);
}

SubrangeView::SubrangeView(BitState& base, std::size_t offset, std::size_t len)
    : base_(&base), offset_(offset), len_(len) {
  if (len == 0 || offset + len > base.dim()) {
    throw UsageError("subrange [" + std::to_string(offset) + ", " +
                     std::to_string(offset + len) + ") outside dimension " +
                     std::to_string(base.dim()));
  }
}

std::size_t SubrangeView::index(std::size_t i) const {
  if (i >= len_) {
    throw UsageError("view index " + std::to_string(i) +
                     " out of range for length " + std::to_string(len_));
  }
  return i;
}

SubrangeView SubrangeView::sub(std::size_t offset, std::size_t len) const {
  if (len == 0 || offset + len > len_) throw UsageError("subview out of range");
  return SubrangeView(*base_, offset_ + offset, len);
}

bool tracked_is_zero(const SubrangeView& view, ProbeLedger& ledger) {
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (view.read(ledger, i) != 0) return false;
  }
  return true;
}

}  // namespace quasigray
