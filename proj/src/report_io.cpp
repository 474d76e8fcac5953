#include "quasigray/report_io.hpp"

#include <sstream>

namespace quasigray {

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "counter",       "dim",       "params",      "length",
      "closed",        "distinct",  "space_efficiency",
      "avg_reads",     "worst_reads", "avg_writes", "worst_writes",
      "max_hamming"};
  return cols;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string csv_row(const CycleReport& report) {
  if (!report.closed) {
    // Cap hit: averages over a partial walk are not cycle metrics.
    return csv_escape(report.counter) + ',' + std::to_string(report.dim) + ',' +
           csv_escape(report.params) + ',' + std::to_string(report.length) + ",false," +
           (report.distinct ? "true" : "false") + ",," + "," +
           std::to_string(report.worst_reads) + ",," + std::to_string(report.worst_writes) +
           ',' + std::to_string(report.max_hamming);
  }
  std::string out;
  for (const MetricValue& m : collect_metrics(report)) {
    if (!out.empty()) out += ',';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, bool>) {
            out += v ? "true" : "false";
          } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            out += std::to_string(v);
          } else if constexpr (std::is_same_v<T, std::string>) {
            out += csv_escape(v);
          } else {
            out += render_exact(v);
          }
        },
        m.value);
  }
  return out;
}

nlohmann::json rational_json(const Rational& value) {
  return {{"num", boost::multiprecision::numerator(value).str()},
          {"den", boost::multiprecision::denominator(value).str()},
          {"decimal", render_decimal(value)}};
}

namespace {

nlohmann::json witness_json(const std::vector<std::optional<StepWitness>>& w) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (!w[v]) continue;
    out.push_back({{"value", v}, {"step", w[v]->step}, {"from", w[v]->from}, {"to", w[v]->to}});
  }
  return out;
}

}  // namespace

nlohmann::json report_json(const CycleReport& r) {
  nlohmann::json j;
  j["counter"] = r.counter;
  j["dim"] = r.dim;
  j["params"] = r.params;
  j["length"] = r.length;
  j["closed"] = r.closed;
  j["distinct"] = r.distinct;
  const auto cycle_metric = [&](const Rational& v) {
    return r.closed ? rational_json(v) : nlohmann::json(nullptr);
  };
  j["space_efficiency"] = cycle_metric(r.space_efficiency);
  j["avg_reads"] = cycle_metric(r.avg_reads);
  j["worst_reads"] = r.worst_reads;
  j["avg_writes"] = cycle_metric(r.avg_writes);
  j["worst_writes"] = r.worst_writes;
  j["max_hamming"] = r.max_hamming;
  j["total_reads"] = r.total_reads;
  j["total_writes"] = r.total_writes;
  j["write_hamming_mismatches"] = r.write_hamming_mismatches;
  j["first_with_reads"] = witness_json(r.first_with_reads);
  j["first_with_writes"] = witness_json(r.first_with_writes);
  j["first_with_hamming"] = witness_json(r.first_with_hamming);
  if (!r.sequence.empty()) j["sequence"] = r.sequence;
  return j;
}

nlohmann::json bound_checks_json(const std::vector<BoundCheck>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const BoundCheck& c : checks) {
    nlohmann::json j = {{"kind", to_string(c.bound.kind)},
                        {"expression", c.bound.expression},
                        {"source", c.bound.source},
                        {"disputed", c.bound.disputed},
                        {"expected", c.expected},
                        {"measured", c.measured},
                        {"status", to_string(c.status)}};
    if (c.delta) j["delta"] = render_exact(*c.delta);
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::json plan_json(const LayerPlan& plan) {
  nlohmann::json out = nlohmann::json::array();
  for (const Layer& l : plan.layers) out.push_back({{"kind", to_string(l.kind)}, {"dim", l.dim}});
  return out;
}

std::string bound_metric(BoundKind kind) {
  switch (kind) {
    case BoundKind::length_exact: return "length";
    case BoundKind::avg_reads_le:
    case BoundKind::avg_reads_eq: return "avg_reads";
    case BoundKind::avg_writes_le:
    case BoundKind::avg_writes_eq: return "avg_writes";
    case BoundKind::worst_reads_le:
    case BoundKind::worst_reads_eq: return "worst_reads";
    case BoundKind::worst_writes_le: return "worst_writes";
    case BoundKind::hamming_le: return "max_hamming";
    case BoundKind::efficiency_ge: return "space_efficiency";
  }
  return "?";
}

const std::vector<std::string>& table1_bound_metrics() {
  static const std::vector<std::string> m = {"length",      "space_efficiency", "avg_reads",
                                             "worst_reads", "avg_writes",       "worst_writes",
                                             "max_hamming"};
  return m;
}

std::string table1_header() {
  std::string out = csv_header();
  for (const auto& m : table1_bound_metrics()) out += ",paper_bound_" + m;
  return out;
}

namespace {

const char* bound_op(BoundKind kind) {
  switch (kind) {
    case BoundKind::length_exact:
    case BoundKind::avg_reads_eq:
    case BoundKind::avg_writes_eq:
    case BoundKind::worst_reads_eq: return "==";
    case BoundKind::efficiency_ge: return ">=";
    default: return "<=";
  }
}

}  // namespace

std::string table1_row(const Table1Row& row) {
  std::string out = csv_row(row.report);
  for (const auto& m : table1_bound_metrics()) {
    std::string c;
    for (const BoundCheck& chk : row.checks) {
      if (bound_metric(chk.bound.kind) != m) continue;
      if (!c.empty()) c += " & ";
      if (chk.bound.disputed) c += '~';
      c += bound_op(chk.bound.kind);
      c += chk.expected;
    }
    out += ',' + csv_escape(c);
  }
  return out;
}

}  // namespace quasigray
