#include "quasigray/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quasigray/parallel.hpp"
#include "quasigray/registry.hpp"
#include "quasigray/report_io.hpp"

namespace quasigray {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string counter;
  std::optional<std::size_t> dim, n, g, c;
  std::vector<std::size_t> layers;
  std::string inner = "rpgc";
  std::string i_code = "brgc";
  std::string k_code = "brgc";
  std::string emit;  // empty until parsed; each verb has its own default
  std::string out_path;
  std::vector<std::size_t> dims, ns, gs;
  bool serial = false;
};

void add_counter_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--counter", o.counter, "counter name (see `list`)")->required();
  cmd->add_option("--dim", o.dim, "bit count for binary, brgc, rpgc");
  cmd->add_option("--n", o.n, "lazy family: size of the b field");
  cmd->add_option("--g", o.g, "doublespin, wine: size of the k field");
  cmd->add_option("--layers", o.layers, "composite layer dims, innermost first")->delimiter(',');
  cmd->add_option("--inner", o.inner, "composite innermost code")->check(CLI::IsMember({"rpgc", "brgc"}));
  cmd->add_option("--i-code", o.i_code, "wine: i sub-code")->check(CLI::IsMember({"brgc", "rpgc"}));
  cmd->add_option("--k-code", o.k_code, "wine: k sub-code")->check(CLI::IsMember({"brgc", "rpgc"}));
}

void add_output_options(CLI::App* cmd, Options& o, const std::string& default_emit) {
  cmd->add_option("--emit", o.emit, "report format (default: " + default_emit + ")")
      ->check(CLI::IsMember({"none", "csv", "json"}));
  cmd->add_option("--out", o.out_path, "output file (default: standard output)");
}

CounterRequest to_request(const Options& o) {
  CounterRequest r;
  r.name = o.counter;
  r.dim = o.dim;
  r.n = o.n;
  r.g = o.g;
  r.layers = o.layers;
  r.inner = parse_layer_kind(o.inner);
  r.i_encoding = parse_field_encoding(o.i_code);
  r.k_encoding = parse_field_encoding(o.k_code);
  return r;
}

void emit_text(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file '" + o.out_path + "'");
  f << text;
}

std::string csv_document(const std::vector<CycleReport>& reports) {
  std::string s = csv_header() + "\n";
  for (const auto& r : reports) s += csv_row(r) + "\n";
  return s;
}

nlohmann::json request_json(const CounterRequest& r, const CycleReport& report) {
  nlohmann::json j = report_json(report);
  if (r.name == "composite") j["plan"] = plan_json(build_layered(r.layers, r.inner));
  return j;
}

std::string summary_line(const CycleReport& r) {
  std::ostringstream s;
  s << r.counter << " dim=" << r.dim << " params=" << r.params << " length=" << r.length
    << " closed=" << (r.closed ? "true" : "false") << " distinct=" << (r.distinct ? "true" : "false");
  if (r.closed) {
    s << " avg_reads=" << render_exact(r.avg_reads) << " avg_writes=" << render_exact(r.avg_writes);
  }
  s << " worst_reads=" << r.worst_reads << " worst_writes=" << r.worst_writes
    << " max_hamming=" << r.max_hamming << "\n";
  return s.str();
}

int cmd_list(std::ostream& out) {
  for (const auto& info : counter_catalog()) {
    out << info.name << "  " << info.params << "\n    " << info.summary << "\n";
  }
  return kPass;
}

int cmd_cycle(const Options& o, std::ostream& out) {
  const CounterRequest req = to_request(o);
  validate(req);
  const EnumerateOptions eo{cycle_cap_from_env(), false};
  const CycleReport report = enumerate_cycle(make_counter(req), eo);
  if (o.emit == "csv") {
    emit_text(csv_document({report}), o, out);
  } else if (o.emit == "json") {
    emit_text(request_json(req, report).dump(2) + "\n", o, out);
  } else {
    emit_text(summary_line(report), o, out);
  }
  return kPass;
}

// Reflected Gray code listings for 1, 2 and 3 bits, leftmost bit highest.
const std::vector<std::vector<std::string>>& golden_brgc() {
  static const std::vector<std::vector<std::string>> g = {
      {"0", "1"},
      {"00", "01", "11", "10"},
      {"000", "001", "011", "010", "110", "111", "101", "100"},
  };
  return g;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const CounterRequest req = to_request(o);
  validate(req);
  const std::size_t c = o.c ? *o.c : claimed_c(req);
  const bool golden = req.name == "brgc" && *req.dim <= 3;
  const EnumerateOptions eo{cycle_cap_from_env(), golden};
  const CycleReport report = enumerate_cycle(make_counter(req), eo);

  nlohmann::json doc = request_json(req, report);
  doc["c"] = c;
  bool ok = true;
  std::ostringstream text;
  text << summary_line(report);

  if (!report.closed || !report.distinct) {
    err << "verify: " << (report.closed ? "cycle repeats a state" : "cycle did not close within the cap")
        << " (" << report.length << " steps)\n";
    doc["verdict"] = "fail";
    ok = false;
  } else {
    const QuasiGrayVerdict v = verify_quasi_gray(report, c);
    text << "quasi-gray c=" << c << ": " << (v.pass ? "pass" : "fail") << "\n";
    doc["quasi_gray"] = {{"pass", v.pass}, {"message", v.message}};
    if (!v.pass) {
      ok = false;
      err << "verify: " << v.message << "\n";
      if (v.counterexample) {
        err << "  step " << v.counterexample->step << ": " << v.counterexample->from << " -> "
            << v.counterexample->to << "\n";
      }
    }
    const auto checks = check_bounds(report, claimed_bounds(req));
    for (const BoundCheck& chk : checks) {
      text << to_string(chk.status) << "  " << to_string(chk.bound.kind) << "  "
           << chk.bound.expression << "  expected=" << chk.expected << " measured=" << chk.measured;
      if (chk.delta && chk.status == BoundStatus::delta) text << " delta=" << render_exact(*chk.delta);
      text << "\n";
      if (chk.status == BoundStatus::fail) {
        ok = false;
        err << "verify: bound " << to_string(chk.bound.kind) << " (" << chk.bound.expression
            << ") fails: measured " << chk.measured << ", bound " << chk.expected << "\n";
      }
    }
    doc["bounds"] = bound_checks_json(checks);
    if (golden) {
      const auto& want = golden_brgc()[*req.dim - 1];
      const bool match = report.sequence == want;
      text << "golden sequence: " << (match ? "match" : "mismatch") << "\n";
      doc["golden_sequence"] = match;
      if (!match) {
        ok = false;
        err << "verify: sequence differs from the reference listing\n";
      }
    }
    doc["verdict"] = ok ? "pass" : "fail";
  }
  if (o.emit == "json") {
    emit_text(doc.dump(2) + "\n", o, out);
  } else if (o.emit == "csv") {
    emit_text(csv_document({report}), o, out);
  } else {
    emit_text(text.str(), o, out);
  }
  return ok ? kPass : kFail;
}

std::vector<CounterRequest> bench_grid(const Options& o) {
  std::vector<CounterRequest> grid;
  CounterRequest base = to_request(o);
  if (o.counter == "composite") {
    grid.push_back(base);
  } else if (o.counter == "binary" || o.counter == "brgc" || o.counter == "rpgc") {
    std::vector<std::size_t> dims = o.dims;
    if (dims.empty() && o.dim) dims.push_back(*o.dim);
    if (dims.empty()) throw UsageError(o.counter + " bench requires --dims or --dim");
    for (auto d : dims) {
      CounterRequest r = base;
      r.dim = d;
      grid.push_back(r);
    }
  } else {
    std::vector<std::size_t> ns = o.ns, gs = o.gs;
    if (ns.empty() && o.n) ns.push_back(*o.n);
    if (gs.empty() && o.g) gs.push_back(*o.g);
    if (ns.empty()) throw UsageError(o.counter + " bench requires --ns or --n");
    const bool uses_g = o.counter == "doublespin" || o.counter == "wine";
    if (uses_g && gs.empty()) throw UsageError(o.counter + " bench requires --gs or --g");
    if (!uses_g) gs = {0};
    for (auto n : ns) {
      for (auto g : gs) {
        CounterRequest r = base;
        r.n = n;
        r.g = uses_g ? std::optional<std::size_t>(g) : std::nullopt;
        grid.push_back(r);
      }
    }
  }
  return grid;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const EnumerateOptions eo{cycle_cap_from_env(), false};
  const auto grid = bench_grid(o);
  const auto results = o.serial ? sweep_serial(grid, eo) : sweep_parallel(grid, eo);
  if (o.emit == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) doc.push_back(request_json(r.request, r.report));
    emit_text(doc.dump(2) + "\n", o, out);
  } else {
    std::vector<CycleReport> reports;
    for (const auto& r : results) reports.push_back(r.report);
    emit_text(csv_document(reports), o, out);
  }
  return kPass;
}

std::vector<CounterRequest> table1_requests() {
  std::vector<CounterRequest> rows;
  for (std::size_t d = 2; d <= 10; ++d) {
    for (const char* name : {"binary", "brgc", "rpgc"}) {
      CounterRequest r;
      r.name = name;
      r.dim = d;
      rows.push_back(r);
    }
  }
  for (const auto& layers : std::vector<std::vector<std::size_t>>{{6, 3}, {10, 3, 2}}) {
    CounterRequest r;
    r.name = "composite";
    r.layers = layers;
    rows.push_back(r);
  }
  for (const char* name : {"doublespin", "wine"}) {
    for (std::size_t n : {4, 8}) {
      for (std::size_t g = 1; g <= 3; ++g) {
        CounterRequest r;
        r.name = name;
        r.n = n;
        r.g = g;
        rows.push_back(r);
      }
    }
  }
  return rows;
}

int cmd_table1(const Options& o, std::ostream& out, std::ostream& err) {
  const EnumerateOptions eo{cycle_cap_from_env(), false};
  const auto results = sweep_parallel(table1_requests(), eo);
  bool ok = true;
  std::string csv = table1_header() + "\n";
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& res : results) {
    if (!res.report.closed) {
      err << "table1: " << res.request.key() << " did not close within the cap\n";
      ok = false;
      csv += csv_row(res.report) + std::string(table1_bound_metrics().size(), ',') + "\n";
      continue;
    }
    Table1Row row{res.report, check_bounds(res.report, claimed_bounds(res.request))};
    for (const auto& chk : row.checks) {
      if (chk.status == BoundStatus::fail) {
        ok = false;
        err << "table1: " << res.request.key() << " " << to_string(chk.bound.kind) << " ("
            << chk.bound.expression << ") fails: measured " << chk.measured << ", bound "
            << chk.expected << "\n";
      }
    }
    csv += table1_row(row) + "\n";
    nlohmann::json j = request_json(res.request, res.report);
    j["bounds"] = bound_checks_json(row.checks);
    doc.push_back(std::move(j));
  }
  emit_text(o.emit == "json" ? doc.dump(2) + "\n" : csv, o, out);
  return ok ? kPass : kFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Gray counters: enumerate, verify and tabulate bit-probe costs", "quasigray"};
  app.require_subcommand(1, 1);
  Options o;

  auto* list = app.add_subcommand("list", "print counters and their parameters");

  auto* cycle = app.add_subcommand("cycle", "enumerate one counter's cycle and emit its report");
  add_counter_options(cycle, o);
  add_output_options(cycle, o, "none");

  auto* verify = app.add_subcommand("verify", "check the claimed per-step bound and published bounds");
  add_counter_options(verify, o);
  verify->add_option("--c", o.c, "per-step bound to check (default: the counter's claimed c)");
  add_output_options(verify, o, "none");

  auto* bench = app.add_subcommand("bench", "sweep a parameter grid, one report row per configuration");
  add_counter_options(bench, o);
  bench->add_option("--dims", o.dims, "dims for binary, brgc, rpgc")->delimiter(',');
  bench->add_option("--ns", o.ns, "n values for the lazy family")->delimiter(',');
  bench->add_option("--gs", o.gs, "g values for doublespin and wine")->delimiter(',');
  bench->add_flag("--serial", o.serial, "run configurations one at a time");
  add_output_options(bench, o, "csv");

  auto* table1 = app.add_subcommand("table1", "desk-scale summary table with published bounds");
  add_output_options(table1, o, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "quasigray: " << e.what() << "\n";
    return kUsage;
  }

  if (o.emit.empty()) o.emit = (bench->parsed() || table1->parsed()) ? "csv" : "none";

  try {
    if (list->parsed()) return cmd_list(out);
    if (cycle->parsed()) return cmd_cycle(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (bench->parsed()) {
      if (o.emit == "none") throw UsageError("bench writes csv or json");
      return cmd_bench(o, out);
    }
    if (table1->parsed()) {
      if (o.emit == "none") throw UsageError("table1 writes csv or json");
      return cmd_table1(o, out, err);
    }
  } catch (const UsageError& e) {
    err << "quasigray: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace quasigray
