#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "quasigray/counter.hpp"

namespace quasigray {

using Rational = boost::multiprecision::cpp_rational;
/// Used only for bounds with logarithms, which are irrational.
using Real = boost::multiprecision::cpp_bin_float_100;

/// Default enumeration cap (2^26 steps); QUASIGRAY_CYCLE_CAP overrides it.
inline constexpr std::uint64_t kDefaultCycleCap = std::uint64_t{1} << 26;
std::uint64_t cycle_cap_from_env();

/// 10 significant digits.
std::string render_decimal(const Rational& value);
/// "7/4", or "3" for integers.
std::string render_exact(const Rational& value);

struct StepWitness {
  std::uint64_t step = 0;  // 1-based: step k moves from state k-1 to state k
  std::string from;
  std::string to;
};

struct CycleReport {
  std::string counter;
  std::size_t dim = 0;
  std::string params;

  std::uint64_t length = 0;
  bool closed = false;
  bool distinct = true;
  Rational space_efficiency{0};
  Rational avg_reads{0};
  Rational avg_writes{0};
  std::uint64_t total_reads = 0;
  std::uint64_t total_writes = 0;
  std::size_t worst_reads = 0;
  std::size_t worst_writes = 0;
  std::size_t max_hamming = 0;
  /// Steps whose Hamming distance was not equal to the writes charged.
  std::uint64_t write_hamming_mismatches = 0;

  // First step at which each per-step value occurred, indexed by the value.
  std::vector<std::optional<StepWitness>> first_with_reads;
  std::vector<std::optional<StepWitness>> first_with_writes;
  std::vector<std::optional<StepWitness>> first_with_hamming;

  /// Visited states in order, starting at the initial state, when requested.
  std::vector<std::string> sequence;
};

struct EnumerateOptions {
  std::uint64_t cap = kDefaultCycleCap;
  bool record_sequence = false;
};

/// Steps from the initial state until it recurs, a non-initial state
/// repeats, or the cap is hit. Distinctness is certified from raw states.
CycleReport enumerate_cycle(const CounterSpec& counter,
                            const EnumerateOptions& options = {});

struct QuasiGrayVerdict {
  bool pass = false;
  std::optional<StepWitness> counterexample;
  std::string message;
};

/// Passes iff every step changed at most c bits and wrote at most c bits.
QuasiGrayVerdict verify_quasi_gray(const CycleReport& report, std::size_t c);

struct MetricValue {
  std::string name;
  std::variant<std::uint64_t, bool, std::string, Rational> value;
};

/// Flattened fields in export order.
std::vector<MetricValue> collect_metrics(const CycleReport& report);

enum class BoundKind {
  length_exact,
  avg_reads_le,
  avg_reads_eq,
  avg_writes_le,
  avg_writes_eq,
  worst_reads_le,
  worst_reads_eq,
  worst_writes_le,
  hamming_le,
  efficiency_ge,
};

std::string to_string(BoundKind kind);

struct BoundSpec {
  BoundKind kind = BoundKind::length_exact;
  std::variant<Rational, Real> value;
  /// Closed form as written, e.g. "4*log2(d)".
  std::string expression;
  std::string source;
  /// Closed forms the source states inconsistently: report a delta, never
  /// fail.
  bool disputed = false;
};

enum class BoundStatus { pass, fail, delta };
std::string to_string(BoundStatus status);

struct BoundCheck {
  BoundSpec bound;
  BoundStatus status = BoundStatus::fail;
  std::string measured;
  std::string expected;
  /// measured - expected, for length_exact bounds.
  std::optional<Rational> delta;
};

std::vector<BoundCheck> check_bounds(const CycleReport& report,
                                     const std::vector<BoundSpec>& bounds);

/// Ripple-carry binary increment from bit 0; wraps 1...1 to 0...0.
void standard_binary_step(BitState& state, ProbeLedger& ledger);
CounterSpec make_binary_counter(std::size_t dim);

}  // namespace quasigray
