#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quasigray/bit_state.hpp"
#include "quasigray/probe.hpp"

namespace quasigray {

using ParamList = std::vector<std::pair<std::string, std::int64_t>>;

/// Uniform wrapper around every generator: a dimension, an initial state and
/// a deterministic step procedure that charges its probes to a ledger. The
/// caller opens and closes the ledger step around `advance`.
struct CounterSpec {
  std::string name;
  std::size_t dim = 0;
  ParamList params;
  /// Free-form description echoed in reports (layer plans, field encodings).
  std::string detail;
  BitState initial;
  std::function<void(BitState&, ProbeLedger&)> advance;

  /// "k=v;k=v" rendering used in report keys.
  std::string params_string() const;
};

/// Opens a step, advances once, closes it.
StepCost step_once(const CounterSpec& counter, BitState& state,
                   ProbeLedger& ledger);

}  // namespace quasigray
