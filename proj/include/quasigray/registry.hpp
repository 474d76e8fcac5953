#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasigray/claims.hpp"
#include "quasigray/composite.hpp"
#include "quasigray/counter.hpp"
#include "quasigray/lazy.hpp"

namespace quasigray {

/// A counter selected by name plus whichever parameters it takes.
struct CounterRequest {
  std::string name;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> n;
  std::optional<std::size_t> g;
  std::vector<std::size_t> layers;
  LayerKind inner = LayerKind::rpgc;
  FieldEncoding i_encoding = FieldEncoding::brgc;
  FieldEncoding k_encoding = FieldEncoding::brgc;

  /// Stable ordering key, e.g. "wine|n=4|g=2".
  std::string key() const;
};

struct CounterInfo {
  std::string name;
  std::string params;
  std::string summary;
};

const std::vector<CounterInfo>& counter_catalog();

/// Throws UsageError when the request does not satisfy the counter's
/// parameter requirements.
void validate(const CounterRequest& request);
CounterSpec make_counter(const CounterRequest& request);
std::vector<BoundSpec> claimed_bounds(const CounterRequest& request);
/// The per-step change bound c the counter is claimed to meet.
std::size_t claimed_c(const CounterRequest& request);

}  // namespace quasigray
