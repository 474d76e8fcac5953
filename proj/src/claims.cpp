#include "quasigray/claims.hpp"

#include <bit>

namespace quasigray {

namespace {

using boost::multiprecision::cpp_int;

Rational pow2(std::size_t e) {
  cpp_int v = 1;
  v <<= static_cast<unsigned>(e);
  return Rational(v);
}

Real log2_real(std::size_t x) {
  return boost::multiprecision::log(Real(x)) / boost::multiprecision::log(Real(2));
}

BoundSpec exact(BoundKind kind, Rational v, std::string expr, std::string src,
                bool disputed = false) {
  return {kind, std::move(v), std::move(expr), std::move(src), disputed};
}

BoundSpec real(BoundKind kind, Real v, std::string expr, std::string src) {
  return {kind, std::move(v), std::move(expr), std::move(src), false};
}

std::size_t log2_exact(std::size_t n) {
  return static_cast<std::size_t>(std::countr_zero(n));
}

}  // namespace

std::vector<BoundSpec> binary_bounds(std::size_t dim) {
  const Rational avg = Rational(2) - Rational(1) / pow2(dim - 1);
  return {
      exact(BoundKind::length_exact, pow2(dim), "2^d", "binary counter"),
      exact(BoundKind::avg_reads_eq, avg, "2 - 2^(1-d)", "binary counter"),
      exact(BoundKind::avg_writes_eq, avg, "2 - 2^(1-d)", "binary counter"),
      exact(BoundKind::worst_reads_le, Rational(dim), "d", "binary counter"),
      exact(BoundKind::worst_writes_le, Rational(dim), "d", "binary counter"),
  };
}

std::vector<BoundSpec> brgc_bounds(std::size_t dim) {
  return {
      exact(BoundKind::length_exact, pow2(dim), "2^d", "reflected Gray code"),
      exact(BoundKind::avg_reads_eq, Rational(dim), "d", "reflected Gray code"),
      exact(BoundKind::worst_reads_le, Rational(dim), "d", "reflected Gray code"),
      exact(BoundKind::avg_writes_eq, Rational(1), "1", "reflected Gray code"),
      exact(BoundKind::worst_writes_le, Rational(1), "1", "reflected Gray code"),
      exact(BoundKind::hamming_le, Rational(1), "1", "reflected Gray code"),
  };
}

std::vector<BoundSpec> rpgc_bounds(std::size_t dim) {
  std::vector<BoundSpec> out = {
      exact(BoundKind::length_exact, pow2(dim), "2^d", "partition Gray code length"),
      exact(BoundKind::worst_writes_le, Rational(1), "1", "partition Gray code writes"),
      exact(BoundKind::hamming_le, Rational(1), "1", "partition Gray code writes"),
      exact(BoundKind::worst_reads_le, Rational(dim), "d", "partition Gray code reads"),
  };
  if (dim >= 2) {
    if (std::has_single_bit(dim)) {
      out.push_back(real(BoundKind::avg_reads_le, 4 * log2_real(dim), "4*log2(d)",
                         "partition Gray code, power-of-two dimension"));
    }
    out.push_back(real(BoundKind::avg_reads_le, 6 * log2_real(dim), "6*log2(d)",
                       "partition Gray code, any dimension"));
  }
  return out;
}

std::vector<BoundSpec> composite_bounds(
    const LayerPlan& plan, const std::optional<Rational>& inner_avg_reads) {
  const auto layers = plan.layers.size();
  std::vector<BoundSpec> out = {
      exact(BoundKind::length_exact, pow2(plan.total_dim), "2^d",
            "composite code is space-optimal"),
      exact(BoundKind::worst_writes_le, Rational(layers), "layers",
            "composite adds one write per layer"),
      exact(BoundKind::hamming_le, Rational(layers), "layers",
            "composite adds one write per layer"),
  };
  const std::size_t outer = plan.layers.back().dim;
  if (layers >= 2 && inner_avg_reads && plan.layers.back().kind == LayerKind::rpgc) {
    const Real inner = Real(boost::multiprecision::numerator(*inner_avg_reads)) /
                       Real(boost::multiprecision::denominator(*inner_avg_reads));
    const Real bound = 6 * log2_real(outer) + 2 +
                       boost::multiprecision::ldexp(inner, -static_cast<int>(outer));
    out.push_back(real(BoundKind::avg_reads_le, bound, "6*log2(d') + 2 + r/2^d'",
                       "composite cost decomposition"));
  }
  return out;
}

std::vector<BoundSpec> lazy_bounds(std::size_t n) {
  const std::size_t lg = log2_exact(n);
  return {
      exact(BoundKind::length_exact, pow2(n + 1) - 2, "2^(n+1) - 2", "lazy counter length"),
      exact(BoundKind::worst_reads_le, Rational(lg + 1), "log2(n) + 1", "lazy counter worst case"),
      exact(BoundKind::worst_writes_le, Rational(lg + 1), "log2(n) + 1", "lazy counter worst case"),
      exact(BoundKind::avg_reads_le, Rational(3), "3", "lazy counter average"),
      exact(BoundKind::avg_writes_le, Rational(3), "3", "lazy counter average"),
  };
}

std::vector<BoundSpec> spin_bounds(std::size_t n) {
  const std::size_t lg = log2_exact(n);
  const Rational pn = pow2(n);
  return {
      exact(BoundKind::length_exact, Rational(n + 1) * (pn - 1), "(n+1)(2^n - 1)",
            "spin counter length as stated", true),
      exact(BoundKind::length_exact, Rational(n + 1) * pn - 2, "(n+1)2^n - 2",
            "spin counter length as derived", true),
      exact(BoundKind::worst_reads_le, Rational(lg + 2), "log2(n) + 2", "spin counter worst case"),
      exact(BoundKind::worst_writes_le, Rational(lg + 2), "log2(n) + 2", "spin counter worst case"),
      exact(BoundKind::avg_reads_le, Rational(4), "4", "spin counter average"),
  };
}

std::vector<BoundSpec> double_spin_bounds(std::size_t n, std::size_t g) {
  const std::size_t lg = log2_exact(n);
  const Rational pn = pow2(n);
  return {
      exact(BoundKind::length_exact, Rational(n) * pn * pow2(g) - Rational(n - 1) * pn - 2,
            "n 2^n 2^g - (n-1)2^n - 2", "double-spin counter length", true),
      exact(BoundKind::worst_reads_le, Rational(g + lg + 1), "g + log2(n) + 1",
            "double-spin counter worst case"),
      exact(BoundKind::worst_writes_le, Rational(g + lg + 1), "g + log2(n) + 1",
            "double-spin counter worst case"),
      efficiency_trend_bound(g),
  };
}

std::vector<BoundSpec> wine_bounds(std::size_t n, std::size_t g) {
  const std::size_t lg = log2_exact(n);
  const Rational pn = pow2(n);
  return {
      exact(BoundKind::length_exact, Rational(n) * pn * pow2(g) - Rational(n + 1) * pn + n,
            "n 2^n 2^g - (n+1)2^n + n", "wine counter length", true),
      exact(BoundKind::worst_writes_le, Rational(3), "3", "wine counter writes"),
      exact(BoundKind::hamming_le, Rational(3), "3", "wine counter writes"),
      exact(BoundKind::worst_reads_le, Rational(g + lg + 1), "g + log2(n) + 1",
            "wine counter worst case"),
      efficiency_trend_bound(g),
  };
}

BoundSpec efficiency_trend_bound(std::size_t g) {
  // 1 - 2^(2-g); the constant 4 in front of 2^-g is fixed empirically.
  const Rational gap = g >= 2 ? Rational(1) / pow2(g - 2) : Rational(pow2(2 - g));
  return exact(BoundKind::efficiency_ge, Rational(1) - gap, "1 - 2^(2-g)",
               "space efficiency 1 - O(2^-g)");
}

}  // namespace quasigray
