#include "quasigray/counter.hpp"

namespace quasigray {

std::string CounterSpec::params_string() const {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + '=' + std::to_string(value);
  }
  if (!detail.empty()) {
    if (!out.empty()) out += ';';
    out += detail;
  }
  return out;
}

StepCost step_once(const CounterSpec& counter, BitState& state,
                   ProbeLedger& ledger) {
  ledger.open_step();
  counter.advance(state, ledger);
  return ledger.close_step();
}

}  // namespace quasigray
