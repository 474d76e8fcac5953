#include "quasigray/composite.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "quasigray/brgc.hpp"
#include "quasigray/rpgc.hpp"

namespace quasigray {

std::string to_string(LayerKind kind) {
  return kind == LayerKind::brgc ? "brgc" : "rpgc";
}

LayerKind parse_layer_kind(const std::string& text) {
  if (text == "brgc") return LayerKind::brgc;
  if (text == "rpgc") return LayerKind::rpgc;
  throw UsageError("unknown layer kind '" + text + "' (expected brgc|rpgc)");
}

std::size_t LayerPlan::offset(std::size_t layer) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < layer; ++i) off += layers.at(i).dim;
  return off;
}

std::string LayerPlan::serialize() const {
  std::string out;
  for (const Layer& l : layers) {
    if (!out.empty()) out += ' ';
    out += to_string(l.kind) + ':' + std::to_string(l.dim);
  }
  return out;
}

namespace {

void advance_layer(LayerKind kind, const SubrangeView& view,
                   ProbeLedger& ledger) {
  if (kind == LayerKind::brgc) {
    brgc_next(view, ledger);
  } else {
    rpgc_increment(view, ledger);
  }
}

LayerPlan single_layer(std::uint64_t d) {
  LayerPlan p;
  p.layers = {{LayerKind::rpgc, static_cast<std::size_t>(d)}};
  p.total_dim = static_cast<std::size_t>(d);
  p.claimed_writes = 1;
  return p;
}

void wrap_outer(LayerPlan& plan, std::uint64_t outer_dim,
                std::size_t claimed_writes) {
  plan.layers.push_back({LayerKind::rpgc, static_cast<std::size_t>(outer_dim)});
  plan.total_dim += static_cast<std::size_t>(outer_dim);
  plan.claimed_writes = claimed_writes;
}

std::string format_real(long double v) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(v);
  return os.str();
}

}  // namespace

void composite_step(const LayerPlan& plan, BitState& state,
                    ProbeLedger& ledger) {
  if (plan.layers.empty()) throw UsageError("plan has no layers");
  if (state.dim() != plan.total_dim) throw UsageError("state/plan mismatch");
  std::size_t off = plan.total_dim;
  for (std::size_t i = plan.layers.size(); i-- > 0;) {
    const Layer& layer = plan.layers[i];
    off -= layer.dim;
    const SubrangeView view(state, off, layer.dim);
    advance_layer(layer.kind, view, ledger);
    if (i == 0 || !tracked_is_zero(view, ledger)) break;
  }
}

LayerPlan build_layered(const std::vector<std::size_t>& dims,
                        LayerKind inner_kind) {
  if (dims.empty()) throw UsageError("layer list must not be empty");
  LayerPlan plan;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0) throw UsageError("layer dimensions must be positive");
    plan.layers.push_back({i == 0 ? inner_kind : LayerKind::rpgc, dims[i]});
    plan.total_dim += dims[i];
  }
  plan.claimed_writes = plan.layers.size();
  return plan;
}

long double iterated_log2(long double x, int times) {
  for (int i = 0; i < times; ++i) {
    if (x <= 0) return -std::numeric_limits<long double>::infinity();
    x = std::log2(x);
  }
  return x;
}

int log_star(long double x) {
  int count = 0;
  while (x > 1) {
    x = std::log2(x);
    ++count;
  }
  return count;
}

PlanOutcome auto_plan(std::uint64_t d, std::uint64_t c) {
  if (d == 0) throw UsageError("d must be positive");
  if (c == 0) throw UsageError("c must be positive");
  if (c == 1) return {single_layer(d), {}};

  const int depth = static_cast<int>(2 * c - 1);
  const long double level = iterated_log2(static_cast<long double>(d), depth);
  if (!(level >= 11)) {
    return {std::nullopt, "log^(" + std::to_string(depth) + ") d = " +
                              format_real(level) + " < 11 for d = " +
                              std::to_string(d) + ", c = " + std::to_string(c)};
  }
  // Outer layer sized to cover the inner plan's average read bound r.
  const long double r =
      6 * iterated_log2(static_cast<long double>(d), depth - 2) + 11;
  const auto outer = static_cast<std::uint64_t>(std::ceil(std::log2(r)));
  PlanOutcome inner = auto_plan(d - outer, c - 1);
  if (!inner) return inner;
  wrap_outer(*inner.plan, outer, static_cast<std::size_t>(c));
  return inner;
}

PlanOutcome logstar_plan(std::uint64_t d) {
  constexpr std::uint64_t k16 = std::uint64_t{1} << 16;
  constexpr std::uint64_t k17 = std::uint64_t{1} << 17;
  if (d <= k16) {
    return {std::nullopt, "d = " + std::to_string(d) + " must exceed 2^16"};
  }
  const int ls = log_star(static_cast<long double>(d));

  // Each threshold cleared adds one fixed-size RPGC wrapper around the base
  // plan (outer dims 3 + 2^16, then 7, then 5).
  std::vector<std::uint64_t> wrappers;
  if (d > 3 + k17) wrappers.push_back(3 + k16);
  if (d > 10 + k17) wrappers.push_back(7);
  if (d > 15 + k17) wrappers.push_back(5);

  std::uint64_t base = d;
  for (std::uint64_t w : wrappers) base -= w;
  const std::uint64_t c =
      static_cast<std::uint64_t>((log_star(static_cast<long double>(base)) - 3) / 2);
  PlanOutcome out = auto_plan(base, c);
  if (!out) return out;
  out.plan->claimed_writes = static_cast<std::size_t>((ls - 1) / 2);
  for (std::size_t i = 0; i < wrappers.size(); ++i) {
    wrap_outer(*out.plan, wrappers[i],
               static_cast<std::size_t>((ls + 1 + 2 * static_cast<int>(i)) / 2));
  }
  return out;
}

CounterSpec make_composite_counter(const LayerPlan& plan) {
  if (plan.layers.empty()) throw UsageError("plan has no layers");
  auto shared = std::make_shared<const LayerPlan>(plan);
  CounterSpec c;
  c.name = "composite";
  c.dim = plan.total_dim;
  c.params = {{"layers", static_cast<std::int64_t>(plan.layers.size())}};
  c.detail = "plan=" + plan.serialize();
  c.initial = BitState(plan.total_dim);
  c.advance = [shared](BitState& s, ProbeLedger& l) {
    composite_step(*shared, s, l);
  };
  return c;
}

}  // namespace quasigray
