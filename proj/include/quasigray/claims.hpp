#pragma once

#include <optional>
#include <vector>

#include "quasigray/composite.hpp"
#include "quasigray/harness.hpp"

namespace quasigray {

// Published bounds for each counter, as BoundSpecs evaluated at concrete
// parameters. Length formulas that the source states inconsistently are
// marked disputed and reported as deltas.

std::vector<BoundSpec> binary_bounds(std::size_t dim);
std::vector<BoundSpec> brgc_bounds(std::size_t dim);
std::vector<BoundSpec> rpgc_bounds(std::size_t dim);
/// `inner_avg_reads` is the measured average of the plan without its
/// outermost layer; when given, the composite cost decomposition
/// 6 log d' + 2 + r/2^d' is included.
std::vector<BoundSpec> composite_bounds(
    const LayerPlan& plan, const std::optional<Rational>& inner_avg_reads);
std::vector<BoundSpec> lazy_bounds(std::size_t n);
std::vector<BoundSpec> spin_bounds(std::size_t n);
std::vector<BoundSpec> double_spin_bounds(std::size_t n, std::size_t g);
std::vector<BoundSpec> wine_bounds(std::size_t n, std::size_t g);

/// 1 - space efficiency <= 2^(2-g), expressed as efficiency >= 1 - 2^(2-g).
BoundSpec efficiency_trend_bound(std::size_t g);

}  // namespace quasigray
