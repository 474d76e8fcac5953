#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasigray/composite.hpp"
#include "quasigray/harness.hpp"

namespace quasigray {

/// counter,dim,params,length,closed,distinct,space_efficiency,avg_reads,
/// worst_reads,avg_writes,worst_writes,max_hamming
const std::vector<std::string>& csv_columns();
std::string csv_header();
/// Rationals as "num/den". Requires a closed report.
std::string csv_row(const CycleReport& report);
std::string csv_escape(const std::string& field);

nlohmann::json rational_json(const Rational& value);
nlohmann::json report_json(const CycleReport& report);
nlohmann::json bound_checks_json(const std::vector<BoundCheck>& checks);
/// [{"kind":"rpgc","dim":6}, ...], innermost first.
nlohmann::json plan_json(const LayerPlan& plan);

/// CSV column a bound constrains, e.g. "avg_reads".
std::string bound_metric(BoundKind kind);

struct Table1Row {
  CycleReport report;
  std::vector<BoundCheck> checks;
};

/// Metric columns that get a paper_bound_<metric> companion.
const std::vector<std::string>& table1_bound_metrics();
std::string table1_header();
/// Each paper_bound cell lists "op value" terms joined by " & ", with
/// disputed closed forms prefixed by "~".
std::string table1_row(const Table1Row& row);

}  // namespace quasigray
