#include "quasigray/parallel.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#include "quasigray/brgc.hpp"
#include "quasigray/rpgc.hpp"

namespace quasigray {

namespace {

// Numeric fields compare numerically, so dim=10 sorts after dim=9.
auto order_tuple(const CounterRequest& r) {
  return std::tuple(r.name, r.dim.value_or(0), r.n.value_or(0), r.g.value_or(0), r.layers,
                    static_cast<int>(r.inner), static_cast<int>(r.i_encoding),
                    static_cast<int>(r.k_encoding));
}

void sort_and_validate(std::vector<CounterRequest>& requests) {
  for (const auto& r : requests) validate(r);
  std::stable_sort(requests.begin(), requests.end(),
                   [](const CounterRequest& a, const CounterRequest& b) {
                     return order_tuple(a) < order_tuple(b);
                   });
}

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > 30) throw UsageError("state-space kernels need 1 <= dim <= 30");
}

using Mutator = void (*)(BitState&, ProbeLedger&);

BitState apply(Mutator f, BitState s) {
  ProbeLedger ledger(s.dim());
  ledger.open_step();
  f(s, ledger);
  ledger.close_step();
  return s;
}

void rpgc_inc(BitState& s, ProbeLedger& l) { rpgc_increment(s, l); }
void rpgc_dec(BitState& s, ProbeLedger& l) { rpgc_decrement(s, l); }
void brgc_inc(BitState& s, ProbeLedger& l) { brgc_next(s, l); }
void brgc_dec(BitState& s, ProbeLedger& l) { brgc_prev(s, l); }

bool rpgc_inverse_ok(std::uint64_t v, std::size_t dim) {
  const BitState s = BitState::from_integer(v, dim);
  return apply(rpgc_dec, apply(rpgc_inc, s)) == s &&
         apply(rpgc_inc, apply(rpgc_dec, s)) == s;
}

bool brgc_oracle_ok(std::uint64_t v, std::size_t dim) {
  const BitState s = BitState::from_integer(v, dim);
  const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
  const std::uint64_t r = brgc_rank(s).value;
  return apply(brgc_inc, s) == brgc_unrank({(r + 1) & mask}, dim) &&
         apply(brgc_dec, s) == brgc_unrank({(r - 1) & mask}, dim);
}

std::uint64_t rpgc_reads_from(std::uint64_t v, std::size_t dim) {
  BitState s = BitState::from_integer(v, dim);
  ProbeLedger ledger(dim);
  ledger.open_step();
  rpgc_increment(s, ledger);
  ledger.close_step();
  return ledger.total_reads();
}

template <class Pred>
std::uint64_t count_failures_serial(std::size_t dim, Pred ok) {
  const std::uint64_t n = std::uint64_t{1} << dim;
  std::uint64_t bad = 0;
  for (std::uint64_t v = 0; v < n; ++v) bad += ok(v, dim) ? 0 : 1;
  return bad;
}

template <class Pred>
std::uint64_t count_failures_parallel(std::size_t dim, Pred ok) {
  const std::int64_t n = std::int64_t{1} << dim;
  std::uint64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static)
  for (std::int64_t v = 0; v < n; ++v) bad += ok(static_cast<std::uint64_t>(v), dim) ? 0 : 1;
  return bad;
}

}  // namespace

std::vector<SweepResult> sweep_serial(std::vector<CounterRequest> requests,
                                      const EnumerateOptions& options) {
  sort_and_validate(requests);
  std::vector<SweepResult> out;
  out.reserve(requests.size());
  for (auto& r : requests) out.push_back({r, enumerate_cycle(make_counter(r), options)});
  return out;
}

std::vector<SweepResult> sweep_parallel(std::vector<CounterRequest> requests,
                                        const EnumerateOptions& options) {
  sort_and_validate(requests);
  std::vector<SweepResult> out(requests.size());
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(requests.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = {requests[i], enumerate_cycle(make_counter(requests[i]), options)};
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::uint64_t rpgc_inverse_failures_serial(std::size_t dim) {
  check_dim(dim);
  return count_failures_serial(dim, rpgc_inverse_ok);
}

std::uint64_t rpgc_inverse_failures_parallel(std::size_t dim) {
  check_dim(dim);
  return count_failures_parallel(dim, rpgc_inverse_ok);
}

std::uint64_t brgc_oracle_failures_serial(std::size_t dim) {
  check_dim(dim);
  return count_failures_serial(dim, brgc_oracle_ok);
}

std::uint64_t brgc_oracle_failures_parallel(std::size_t dim) {
  check_dim(dim);
  return count_failures_parallel(dim, brgc_oracle_ok);
}

std::uint64_t rpgc_total_reads_serial(std::size_t dim) {
  check_dim(dim);
  const std::uint64_t n = std::uint64_t{1} << dim;
  std::uint64_t total = 0;
  for (std::uint64_t v = 0; v < n; ++v) total += rpgc_reads_from(v, dim);
  return total;
}

std::uint64_t rpgc_total_reads_parallel(std::size_t dim) {
  check_dim(dim);
  const std::int64_t n = std::int64_t{1} << dim;
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t v = 0; v < n; ++v) total += rpgc_reads_from(static_cast<std::uint64_t>(v), dim);
  return total;
}

}  // namespace quasigray
