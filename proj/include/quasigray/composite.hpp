#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasigray/counter.hpp"
#include "quasigray/probe.hpp"

namespace quasigray {

enum class LayerKind { brgc, rpgc };

std::string to_string(LayerKind kind);
/// Accepts "brgc" or "rpgc"; throws UsageError otherwise.
LayerKind parse_layer_kind(const std::string& text);

struct Layer {
  LayerKind kind = LayerKind::rpgc;
  std::size_t dim = 0;
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Stacked codes sharing one bit string. layers[0] is the innermost (slowest)
/// code and occupies the lowest indices; the last layer is the outermost and
/// advances on every step. An inner layer advances once each time every
/// layer outside it returns to all-zeros.
struct LayerPlan {
  std::vector<Layer> layers;
  std::size_t total_dim = 0;
  /// Worst-case writes the plan claims. build_layered sets this to the layer
  /// count; logstar_plan sets the log*-construction bound.
  std::size_t claimed_writes = 0;

  std::size_t offset(std::size_t layer) const;
  /// "rpgc:10 rpgc:3 rpgc:2", innermost first.
  std::string serialize() const;
};

/// One bit string laid out according to a plan.
class CompositeState {
 public:
  explicit CompositeState(const LayerPlan& plan)
      : plan_(&plan), bits_(plan.total_dim) {}

  BitState& bits() noexcept { return bits_; }
  const BitState& bits() const noexcept { return bits_; }
  SubrangeView layer(std::size_t i) {
    return SubrangeView(bits_, plan_->offset(i), plan_->layers.at(i).dim);
  }

 private:
  const LayerPlan* plan_;
  BitState bits_;
};

/// Advances the outermost layer; whenever a layer lands back on all-zeros
/// (checked by an upward scan under the ledger) the next inner layer
/// advances too.
void composite_step(const LayerPlan& plan, BitState& state,
                    ProbeLedger& ledger);

/// dims listed innermost first; every layer but the innermost is RPGC.
LayerPlan build_layered(const std::vector<std::size_t>& dims,
                        LayerKind inner_kind);

/// Either a plan or the reason the construction does not apply.
struct PlanOutcome {
  std::optional<LayerPlan> plan;
  std::string violated;
  explicit operator bool() const noexcept { return plan.has_value(); }
};

/// log applied `times` times to x (base 2). Returns -infinity once the value
/// drops to zero or below.
long double iterated_log2(long double x, int times);
/// Number of base-2 logarithms needed to bring x to <= 1.
int log_star(long double x);

/// Iterated RPGC composite achieving at most c writes per step. For c = 1 a
/// single RPGC layer; for c > 1 requires log^(2c-1) d >= 11.
PlanOutcome auto_plan(std::uint64_t d, std::uint64_t c);

/// The log*-write construction; requires d > 2^16.
PlanOutcome logstar_plan(std::uint64_t d);

CounterSpec make_composite_counter(const LayerPlan& plan);

}  // namespace quasigray
