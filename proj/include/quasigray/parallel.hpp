#pragma once

#include <cstdint>
#include <vector>

#include "quasigray/harness.hpp"
#include "quasigray/registry.hpp"

namespace quasigray {

// Each kernel has a serial reference and an OpenMP version that must agree
// exactly. Counters step sequentially; what parallelizes is independent
// configurations and independent start states.

struct SweepResult {
  CounterRequest request;
  CycleReport report;
};

/// Requests are sorted by configuration (name, then numeric parameters), so output order never depends on
/// scheduling. Invalid requests throw UsageError before any work starts.
std::vector<SweepResult> sweep_serial(std::vector<CounterRequest> requests,
                                      const EnumerateOptions& options);
std::vector<SweepResult> sweep_parallel(std::vector<CounterRequest> requests,
                                        const EnumerateOptions& options);

/// States s in [0, 2^dim) where prev(next(s)) != s or next(prev(s)) != s.
std::uint64_t rpgc_inverse_failures_serial(std::size_t dim);
std::uint64_t rpgc_inverse_failures_parallel(std::size_t dim);

/// States where brgc_next/brgc_prev disagree with unrank(rank +- 1).
std::uint64_t brgc_oracle_failures_serial(std::size_t dim);
std::uint64_t brgc_oracle_failures_parallel(std::size_t dim);

/// Reads charged by one RPGC increment, summed over every state. Since the
/// cycle visits each state once, this divided by 2^dim is the cycle average.
std::uint64_t rpgc_total_reads_serial(std::size_t dim);
std::uint64_t rpgc_total_reads_parallel(std::size_t dim);

}  // namespace quasigray
