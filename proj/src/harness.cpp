#include "quasigray/harness.hpp"

#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace quasigray {

std::uint64_t cycle_cap_from_env() {
  const char* raw = std::getenv("QUASIGRAY_CYCLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultCycleCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw UsageError("QUASIGRAY_CYCLE_CAP must be a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::string render_decimal(const Rational& value) {
  const Real r = Real(boost::multiprecision::numerator(value)) /
                 Real(boost::multiprecision::denominator(value));
  return r.str(10, std::ios_base::fmtflags(0));
}

std::string render_exact(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

// Visited-state set sized to the state width.
class VisitedSet {
 public:
  explicit VisitedSet(std::size_t dim) : dim_(dim) {
    if (dim <= 28) bitmap_.assign(((std::size_t{1} << dim) + 63) / 64, 0);
  }

  /// Returns false if already present.
  bool insert(const BitState& s) {
    if (!bitmap_.empty()) {
      const std::uint64_t key = s.to_integer();
      std::uint64_t& word = bitmap_[key >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (key & 63);
      if (word & bit) return false;
      word |= bit;
      return true;
    }
    if (dim_ <= 64) return narrow_.insert(s.to_integer()).second;
    return wide_.emplace(s.bits().begin(), s.bits().end()).second;
  }

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> bitmap_;
  std::unordered_set<std::uint64_t> narrow_;
  std::unordered_set<std::string> wide_;
};

void note_witness(std::vector<std::optional<StepWitness>>& slots,
                  std::size_t value, std::uint64_t step, const BitState& from,
                  const BitState& to) {
  if (value >= slots.size()) slots.resize(value + 1);
  if (!slots[value]) slots[value] = StepWitness{step, from.to_string(), to.to_string()};
}

Rational pow2(std::size_t e) {
  boost::multiprecision::cpp_int v = 1;
  v <<= static_cast<unsigned>(e);
  return Rational(v);
}

}  // namespace

CycleReport enumerate_cycle(const CounterSpec& counter,
                            const EnumerateOptions& options) {
  if (options.cap == 0) throw UsageError("cycle cap must be >= 1");
  if (!counter.advance) throw UsageError("counter has no step procedure");
  CycleReport rep;
  rep.counter = counter.name;
  rep.dim = counter.dim;
  rep.params = counter.params_string();

  BitState state = counter.initial;
  BitState prev = state;
  ProbeLedger ledger(counter.dim);
  VisitedSet visited(counter.dim);
  visited.insert(state);
  if (options.record_sequence) rep.sequence.push_back(state.to_string());

  std::uint64_t step = 0;
  while (step < options.cap) {
    prev = state;
    const StepCost cost = step_once(counter, state, ledger);
    ++step;
    const std::size_t h = hamming_distance(prev, state);
    rep.max_hamming = std::max(rep.max_hamming, h);
    if (h != cost.writes) ++rep.write_hamming_mismatches;
    note_witness(rep.first_with_reads, cost.reads, step, prev, state);
    note_witness(rep.first_with_writes, cost.writes, step, prev, state);
    note_witness(rep.first_with_hamming, h, step, prev, state);

    if (state == counter.initial) {
      rep.closed = true;
      break;
    }
    if (options.record_sequence) rep.sequence.push_back(state.to_string());
    if (!visited.insert(state)) {
      rep.distinct = false;
      break;
    }
  }

  rep.length = step;
  rep.total_reads = ledger.total_reads();
  rep.total_writes = ledger.total_writes();
  rep.worst_reads = ledger.max_reads();
  rep.worst_writes = ledger.max_writes();
  rep.avg_reads = Rational(rep.total_reads) / step;
  rep.avg_writes = Rational(rep.total_writes) / step;
  rep.space_efficiency = Rational(step) / pow2(counter.dim);
  return rep;
}

QuasiGrayVerdict verify_quasi_gray(const CycleReport& report, std::size_t c) {
  if (!report.closed || !report.distinct) {
    throw UsageError("quasi-Gray verification needs a closed, distinct cycle");
  }
  QuasiGrayVerdict v;
  const auto earliest_above = [c](const auto& slots,
                                  std::optional<StepWitness>& best) {
    for (std::size_t value = c + 1; value < slots.size(); ++value) {
      if (slots[value] && (!best || slots[value]->step < best->step)) {
        best = slots[value];
      }
    }
  };
  earliest_above(report.first_with_hamming, v.counterexample);
  earliest_above(report.first_with_writes, v.counterexample);
  v.pass = !v.counterexample.has_value();
  std::ostringstream msg;
  if (v.pass) {
    msg << report.counter << ": every step changes at most " << c << " bits";
  } else {
    msg << report.counter << ": step " << v.counterexample->step << " ("
        << v.counterexample->from << " -> " << v.counterexample->to
        << ") exceeds c = " << c << " (max hamming " << report.max_hamming
        << ", worst writes " << report.worst_writes << ")";
  }
  v.message = msg.str();
  return v;
}

std::vector<MetricValue> collect_metrics(const CycleReport& report) {
  if (!report.closed) throw UsageError("metrics need a closed cycle");
  return {
      {"counter", report.counter},
      {"dim", static_cast<std::uint64_t>(report.dim)},
      {"params", report.params},
      {"length", report.length},
      {"closed", report.closed},
      {"distinct", report.distinct},
      {"space_efficiency", report.space_efficiency},
      {"avg_reads", report.avg_reads},
      {"worst_reads", static_cast<std::uint64_t>(report.worst_reads)},
      {"avg_writes", report.avg_writes},
      {"worst_writes", static_cast<std::uint64_t>(report.worst_writes)},
      {"max_hamming", static_cast<std::uint64_t>(report.max_hamming)},
  };
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::length_exact: return "length_exact";
    case BoundKind::avg_reads_le: return "avg_reads_le";
    case BoundKind::avg_reads_eq: return "avg_reads_eq";
    case BoundKind::avg_writes_le: return "avg_writes_le";
    case BoundKind::avg_writes_eq: return "avg_writes_eq";
    case BoundKind::worst_reads_le: return "worst_reads_le";
    case BoundKind::worst_reads_eq: return "worst_reads_eq";
    case BoundKind::worst_writes_le: return "worst_writes_le";
    case BoundKind::hamming_le: return "hamming_le";
    case BoundKind::efficiency_ge: return "efficiency_ge";
  }
  return "?";
}

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::pass: return "pass";
    case BoundStatus::fail: return "fail";
    case BoundStatus::delta: return "delta";
  }
  return "?";
}

namespace {

Real to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) /
         Real(boost::multiprecision::denominator(r));
}

// -1, 0, +1 for measured <=> bound. Irrational bounds are never hit exactly;
// 100-digit evaluation decides the side.
int compare(const Rational& measured, const std::variant<Rational, Real>& bound) {
  if (const auto* q = std::get_if<Rational>(&bound)) {
    return measured < *q ? -1 : (measured > *q ? 1 : 0);
  }
  const Real m = to_real(measured);
  const Real& b = std::get<Real>(bound);
  return m < b ? -1 : (m > b ? 1 : 0);
}

std::string render_bound(const std::variant<Rational, Real>& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return render_exact(*q);
  return std::get<Real>(v).str(10, std::ios_base::fmtflags(0));
}

}  // namespace

std::vector<BoundCheck> check_bounds(const CycleReport& report,
                                     const std::vector<BoundSpec>& bounds) {
  if (!report.closed) throw UsageError("bounds need a closed cycle");
  std::vector<BoundCheck> out;
  for (const BoundSpec& b : bounds) {
    BoundCheck chk;
    chk.bound = b;
    chk.expected = render_bound(b.value);
    Rational measured;
    bool upper = true;  // measured <= bound passes
    bool exact = false;
    switch (b.kind) {
      case BoundKind::length_exact:
        measured = Rational(report.length);
        exact = true;
        break;
      case BoundKind::avg_reads_eq:
        exact = true;
        [[fallthrough]];
      case BoundKind::avg_reads_le:
        measured = report.avg_reads;
        break;
      case BoundKind::avg_writes_eq:
        exact = true;
        [[fallthrough]];
      case BoundKind::avg_writes_le:
        measured = report.avg_writes;
        break;
      case BoundKind::worst_reads_eq:
        exact = true;
        [[fallthrough]];
      case BoundKind::worst_reads_le:
        measured = Rational(report.worst_reads);
        break;
      case BoundKind::worst_writes_le:
        measured = Rational(report.worst_writes);
        break;
      case BoundKind::hamming_le:
        measured = Rational(report.max_hamming);
        break;
      case BoundKind::efficiency_ge:
        measured = report.space_efficiency;
        upper = false;
        break;
    }
    chk.measured = render_exact(measured);
    const int cmp = compare(measured, b.value);
    bool ok = exact ? cmp == 0 : (upper ? cmp <= 0 : cmp >= 0);
    if (b.kind == BoundKind::length_exact) {
      if (const auto* q = std::get_if<Rational>(&b.value)) chk.delta = measured - *q;
    }
    if (ok) {
      chk.status = BoundStatus::pass;
    } else if (b.disputed) {
      chk.status = BoundStatus::delta;
    } else {
      chk.status = BoundStatus::fail;
    }
    out.push_back(std::move(chk));
  }
  return out;
}

void standard_binary_step(BitState& state, ProbeLedger& ledger) {
  for (std::size_t j = 0; j < state.dim(); ++j) {
    if (tracked_read(state, ledger, j) == 0) {
      tracked_write(state, ledger, j, 1);
      return;
    }
    tracked_write(state, ledger, j, 0);
  }
}

CounterSpec make_binary_counter(std::size_t dim) {
  if (dim == 0) throw UsageError("binary requires dim >= 1");
  CounterSpec c;
  c.name = "binary";
  c.dim = dim;
  c.params = {{"dim", static_cast<std::int64_t>(dim)}};
  c.initial = BitState(dim);
  c.advance = [](BitState& s, ProbeLedger& l) { standard_binary_step(s, l); };
  return c;
}

}  // namespace quasigray
