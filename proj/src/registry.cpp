#include "quasigray/registry.hpp"

#include <bit>

#include "quasigray/brgc.hpp"
#include "quasigray/harness.hpp"
#include "quasigray/rpgc.hpp"

namespace quasigray {

std::string CounterRequest::key() const {
  std::string k = name;
  if (dim) k += "|dim=" + std::to_string(*dim);
  if (n) k += "|n=" + std::to_string(*n);
  if (g) k += "|g=" + std::to_string(*g);
  if (!layers.empty()) {
    k += "|layers=" + to_string(inner);
    for (auto d : layers) k += ":" + std::to_string(d);
  }
  if (name == "wine") k += "|i=" + to_string(i_encoding) + "|k=" + to_string(k_encoding);
  return k;
}

const std::vector<CounterInfo>& counter_catalog() {
  static const std::vector<CounterInfo> catalog = {
      {"binary", "--dim D", "standard binary increment (ripple carry)"},
      {"brgc", "--dim D (1..63)", "binary reflected Gray code"},
      {"rpgc", "--dim D", "recursive partition Gray code"},
      {"composite", "--layers D1,D2,... [--inner rpgc|brgc]",
       "stacked codes, innermost first; outer layers are rpgc"},
      {"lazy", "--n N (power of two >= 2)", "lazy counter with pointer field i"},
      {"spin", "--n N", "lazy counter with a one-bit spin phase"},
      {"doublespin", "--n N --g G", "lazy counter with a G-bit spin phase"},
      {"wine", "--n N --g G [--i-code brgc|rpgc] [--k-code brgc|rpgc]",
       "lazy counter with Gray-coded i and k, at most 3 writes"},
  };
  return catalog;
}

namespace {

std::size_t need(const std::optional<std::size_t>& v, const char* flag,
                 const std::string& counter) {
  if (!v) throw UsageError(counter + " requires " + flag);
  return *v;
}

void need_pow2_n(std::size_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw UsageError("n must be a power of two >= 2 (got " + std::to_string(n) + ")");
  }
}

void need_positive(std::size_t v, const char* what) {
  if (v == 0) throw UsageError(std::string(what) + " must be positive");
}

}  // namespace

void validate(const CounterRequest& r) {
  if (r.name == "binary" || r.name == "rpgc") {
    need_positive(need(r.dim, "--dim", r.name), "dim");
  } else if (r.name == "brgc") {
    const auto d = need(r.dim, "--dim", r.name);
    need_positive(d, "dim");
    if (d > 63) throw UsageError("brgc supports dim <= 63");
  } else if (r.name == "composite") {
    if (r.layers.empty()) throw UsageError("composite requires --layers");
    for (auto d : r.layers) need_positive(d, "layer dimension");
  } else if (r.name == "lazy" || r.name == "spin") {
    need_pow2_n(need(r.n, "--n", r.name));
  } else if (r.name == "doublespin" || r.name == "wine") {
    need_pow2_n(need(r.n, "--n", r.name));
    need_positive(need(r.g, "--g", r.name), "g");
    if (r.name == "wine") {
      if (r.i_encoding == FieldEncoding::binary || r.k_encoding == FieldEncoding::binary) {
        throw UsageError("wine sub-codes must be brgc or rpgc");
      }
      if (r.k_encoding == FieldEncoding::rpgc && *r.g > 24) {
        throw UsageError("rpgc k sub-code supports g <= 24");
      }
    }
  } else {
    throw UsageError("unknown counter '" + r.name + "'");
  }
}

CounterSpec make_counter(const CounterRequest& r) {
  validate(r);
  if (r.name == "binary") return make_binary_counter(*r.dim);
  if (r.name == "brgc") return make_brgc_counter(*r.dim);
  if (r.name == "rpgc") return make_rpgc_counter(*r.dim);
  if (r.name == "composite") return make_composite_counter(build_layered(r.layers, r.inner));
  if (r.name == "lazy") return make_lazy_counter(*r.n);
  if (r.name == "spin") return make_spin_counter(*r.n);
  if (r.name == "doublespin") return make_double_spin_counter(*r.n, *r.g);
  return make_wine_counter(*r.n, *r.g, r.i_encoding, r.k_encoding);
}

std::vector<BoundSpec> claimed_bounds(const CounterRequest& r) {
  validate(r);
  if (r.name == "binary") return binary_bounds(*r.dim);
  if (r.name == "brgc") return brgc_bounds(*r.dim);
  if (r.name == "rpgc") return rpgc_bounds(*r.dim);
  if (r.name == "composite") {
    const LayerPlan plan = build_layered(r.layers, r.inner);
    std::optional<Rational> inner_avg;
    if (plan.layers.size() >= 2 && plan.total_dim - plan.layers.back().dim <= 26) {
      std::vector<std::size_t> inner_dims(r.layers.begin(), r.layers.end() - 1);
      const CycleReport inner =
          enumerate_cycle(make_composite_counter(build_layered(inner_dims, r.inner)));
      if (inner.closed) inner_avg = inner.avg_reads;
    }
    return composite_bounds(plan, inner_avg);
  }
  if (r.name == "lazy") return lazy_bounds(*r.n);
  if (r.name == "spin") return spin_bounds(*r.n);
  if (r.name == "doublespin") return double_spin_bounds(*r.n, *r.g);
  return wine_bounds(*r.n, *r.g);
}

std::size_t claimed_c(const CounterRequest& r) {
  validate(r);
  if (r.name == "binary") return *r.dim;
  if (r.name == "brgc" || r.name == "rpgc") return 1;
  if (r.name == "composite") return r.layers.size();
  const std::size_t lg = static_cast<std::size_t>(std::countr_zero(*r.n));
  if (r.name == "lazy") return lg + 1;
  if (r.name == "spin") return lg + 2;
  if (r.name == "doublespin") return *r.g + lg + 1;
  return 3;
}

}  // namespace quasigray
