#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhquad/errors.hpp"

namespace hhquad::cli {

namespace {

using nlohmann::json;

constexpr int kComparePanels = 1 << 20;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* fmt_bool(bool b) { return b ? "true" : "false"; }

std::string json_str(const std::string& s) { return json(s).dump(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

OutputFormat parse_output(const std::string& name, const char* field) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ConfigError(std::string(field) + ": unknown output format '" + name + "'");
}

void parse_curvature(const std::string& spec, const char* field, QuadConfig* cfg) {
  if (spec == "rigorous") {
    cfg->curvature_mode = CurvatureMode::kRigorous;
    return;
  }
  if (spec == "heuristic") {
    cfg->curvature_mode = CurvatureMode::kHeuristic;
    return;
  }
  if (spec.rfind("manual:", 0) == 0) {
    const std::string values = spec.substr(7);
    const std::size_t comma = values.find(',');
    if (comma != std::string::npos) {
      const char* begin = values.data();
      const char* mid = values.data() + comma;
      const char* end = values.data() + values.size();
      double m = 0.0;
      double M = 0.0;
      const auto r1 = std::from_chars(begin, mid, m);
      const auto r2 = std::from_chars(mid + 1, end, M);
      if (r1.ec == std::errc() && r1.ptr == mid && r2.ec == std::errc() &&
          r2.ptr == end) {
        cfg->curvature_mode = CurvatureMode::kManual;
        cfg->manual_m = m;
        cfg->manual_M = M;
        return;
      }
    }
    throw ConfigError(std::string(field) + ": manual curvature takes the form manual:M1,M2");
  }
  throw ConfigError(std::string(field) + ": unknown curvature mode '" + spec + "'");
}

struct JobOutcome {
  Job job;
  int code = kExitOk;
  std::optional<std::string> error;
  std::optional<std::size_t> line;  // batch input line, when applicable
  QuadReport report;
  std::optional<double> oracle;
};

JobOutcome run_job(const Job& job) {
  JobOutcome outcome;
  outcome.job = job;
  try {
    const Expr f = Expr::parse(job.expr_text);
    outcome.report = integrate(f, job.a, job.b, job.config);
    if (job.compare_oracle) {
      outcome.oracle = oracle_integrate(f, job.a, job.b, kComparePanels);
    }
    if (job.config.method == QuadMethod::kAdaptive && !outcome.report.tolerance_met) {
      outcome.code = kExitToleranceUnmet;
    }
  } catch (const ParseError& e) {
    outcome.code = kExitInput;
    outcome.error = std::string("expr: ") + e.what();
  } catch (const ConfigError& e) {
    outcome.code = kExitInput;
    outcome.error = e.what();
  } catch (const Error& e) {
    outcome.code = kExitDomain;
    outcome.error = e.what();
  }
  return outcome;
}

void write_text(std::ostream& out, const JobOutcome& o) {
  if (o.error) {
    out << o.job.label << ": error: " << *o.error;
    if (o.line) out << " (line " << *o.line << ")";
    out << "\n";
    return;
  }
  const QuadReport& r = o.report;
  out << o.job.label << ": " << o.job.expr_text << " on [" << fmt17(o.job.a) << ", "
      << fmt17(o.job.b) << "]\n";
  out << "  lower=" << fmt17(r.integral_bounds.lo) << " upper="
      << fmt17(r.integral_bounds.hi) << " width=" << fmt17(r.integral_bounds.width())
      << "\n";
  out << "  certified=" << fmt_bool(r.certified)
      << " tolerance_met=" << fmt_bool(r.tolerance_met) << " panels=" << r.panel_count;
  out << " kernels=";
  for (std::size_t i = 0; i < r.kernels_used.size(); ++i) {
    if (i) out << ",";
    out << kernel_name(r.kernels_used[i]);
  }
  out << "\n";
  out << "  evaluations: f=" << r.evaluations.f_evals << " jet=" << r.evaluations.jet_evals
      << " interval=" << r.evaluations.interval_evals << "\n";
  if (o.job.config.curvature_mode == CurvatureMode::kHeuristic) {
    out << "  curvature=heuristic (bounds not certified)\n";
  }
  if (o.oracle) {
    out << "  simpson=" << fmt17(*o.oracle) << "\n";
  }
  for (std::size_t i = 0; i < r.panels.size(); ++i) {
    const PanelReport& p = r.panels[i];
    out << "  panel[" << i << "]: [" << fmt17(p.domain.lo) << ", " << fmt17(p.domain.hi)
        << "] lower=" << fmt17(p.enclosure.bounds.lo)
        << " upper=" << fmt17(p.enclosure.bounds.hi)
        << " lower_by=" << kernel_name(p.enclosure.lower_by)
        << " upper_by=" << kernel_name(p.enclosure.upper_by) << "\n";
  }
}

// JSON is emitted by hand so every numeric field carries 17 significant
// digits; reparsing reproduces the doubles bit for bit.
void write_json(std::ostream& out, const JobOutcome& o) {
  if (o.error) {
    out << "{\"label\":" << json_str(o.job.label);
    if (o.line) out << ",\"line\":" << *o.line;
    out << ",\"error\":" << json_str(*o.error) << "}\n";
    return;
  }
  const QuadReport& r = o.report;
  out << "{\"label\":" << json_str(o.job.label)
      << ",\"expr\":" << json_str(o.job.expr_text) << ",\"a\":" << fmt17(o.job.a)
      << ",\"b\":" << fmt17(o.job.b) << ",\"lower\":" << fmt17(r.integral_bounds.lo)
      << ",\"upper\":" << fmt17(r.integral_bounds.hi)
      << ",\"width\":" << fmt17(r.integral_bounds.width())
      << ",\"certified\":" << fmt_bool(r.certified)
      << ",\"tolerance_met\":" << fmt_bool(r.tolerance_met)
      << ",\"panel_count\":" << r.panel_count << ",\"evaluations\":{\"f\":"
      << r.evaluations.f_evals << ",\"jet\":" << r.evaluations.jet_evals
      << ",\"interval\":" << r.evaluations.interval_evals << "},\"kernels_used\":[";
  for (std::size_t i = 0; i < r.kernels_used.size(); ++i) {
    if (i) out << ",";
    out << json_str(std::string(kernel_name(r.kernels_used[i])));
  }
  out << "]";
  if (o.oracle) out << ",\"oracle\":" << fmt17(*o.oracle);
  if (!r.panels.empty()) {
    out << ",\"panels\":[";
    for (std::size_t i = 0; i < r.panels.size(); ++i) {
      const PanelReport& p = r.panels[i];
      if (i) out << ",";
      out << "{\"a\":" << fmt17(p.domain.lo) << ",\"b\":" << fmt17(p.domain.hi)
          << ",\"lower\":" << fmt17(p.enclosure.bounds.lo)
          << ",\"upper\":" << fmt17(p.enclosure.bounds.hi)
          << ",\"certified\":" << fmt_bool(p.enclosure.certified)
          << ",\"lower_by\":" << json_str(std::string(kernel_name(p.enclosure.lower_by)))
          << ",\"upper_by\":" << json_str(std::string(kernel_name(p.enclosure.upper_by)))
          << "}";
    }
    out << "]";
  }
  out << "}\n";
}

void write_csv_header(std::ostream& out) {
  out << "label,a,b,lower,upper,width,certified,panel_count\n";
}

void write_csv(std::ostream& out, const JobOutcome& o) {
  if (o.error) {
    // Value columns stay empty; the message goes to the error stream.
    out << csv_escape(o.job.label) << "," << fmt17(o.job.a) << "," << fmt17(o.job.b)
        << ",,,,,\n";
    return;
  }
  const QuadReport& r = o.report;
  out << csv_escape(o.job.label) << "," << fmt17(o.job.a) << "," << fmt17(o.job.b) << ","
      << fmt17(r.integral_bounds.lo) << "," << fmt17(r.integral_bounds.hi) << ","
      << fmt17(r.integral_bounds.width()) << "," << fmt_bool(r.certified) << ","
      << r.panel_count << "\n";
}

struct RecordWriter {
  std::ostream& out;
  std::ostream& err;
  bool csv_header_written = false;

  void write(const JobOutcome& o) {
    switch (o.job.output) {
      case OutputFormat::kText:
        write_text(out, o);
        break;
      case OutputFormat::kJson:
        write_json(out, o);
        break;
      case OutputFormat::kCsv:
        if (!csv_header_written) {
          write_csv_header(out);
          csv_header_written = true;
        }
        write_csv(out, o);
        break;
    }
    if (o.error) {
      err << o.job.label << ": " << *o.error;
      if (o.line) err << " (line " << *o.line << ")";
      err << "\n";
    }
  }
};

Job job_from_json(const json& j, const Job& defaults, std::size_t line_no) {
  static const std::set<std::string> known = {
      "label",  "expr",          "a",
      "b",      "method",        "panels",
      "tol",    "max_panels",    "kernels",
      "curvature", "curvature_budget", "global_curvature",
      "output", "compare",       "emit_panels"};
  if (!j.is_object()) {
    throw ConfigError("job must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw ConfigError("unknown job field '" + item.key() + "'");
    }
  }

  const auto need = [&j](const char* key) -> const json& {
    if (!j.contains(key)) {
      throw ConfigError(std::string("job field '") + key + "' is required");
    }
    return j.at(key);
  };
  const auto as_string = [](const json& v, const char* key) -> std::string {
    if (!v.is_string()) {
      throw ConfigError(std::string("job field '") + key + "' must be a string");
    }
    return v.get<std::string>();
  };
  const auto as_number = [](const json& v, const char* key) -> double {
    if (!v.is_number()) {
      throw ConfigError(std::string("job field '") + key + "' must be a number");
    }
    return v.get<double>();
  };
  const auto as_int = [](const json& v, const char* key) -> int {
    if (!v.is_number_integer()) {
      throw ConfigError(std::string("job field '") + key + "' must be an integer");
    }
    return v.get<int>();
  };
  const auto as_bool = [](const json& v, const char* key) -> bool {
    if (!v.is_boolean()) {
      throw ConfigError(std::string("job field '") + key + "' must be a boolean");
    }
    return v.get<bool>();
  };

  Job job = defaults;
  job.label = "job" + std::to_string(line_no);
  job.expr_text = as_string(need("expr"), "expr");
  job.a = as_number(need("a"), "a");
  job.b = as_number(need("b"), "b");
  if (j.contains("label")) job.label = as_string(j.at("label"), "label");
  if (j.contains("method")) {
    const std::string m = as_string(j.at("method"), "method");
    if (m == "fixed") {
      job.config.method = QuadMethod::kFixed;
    } else if (m == "adaptive") {
      job.config.method = QuadMethod::kAdaptive;
    } else {
      throw ConfigError("job field 'method' must be 'fixed' or 'adaptive'");
    }
  }
  if (j.contains("panels")) job.config.panels_n = as_int(j.at("panels"), "panels");
  if (j.contains("tol")) job.config.tolerance = as_number(j.at("tol"), "tol");
  if (j.contains("max_panels")) {
    job.config.max_panels = as_int(j.at("max_panels"), "max_panels");
  }
  if (j.contains("kernels")) {
    job.config.kernels = KernelSet::parse(as_string(j.at("kernels"), "kernels"));
  }
  if (j.contains("curvature")) {
    parse_curvature(as_string(j.at("curvature"), "curvature"), "curvature", &job.config);
  }
  if (j.contains("curvature_budget")) {
    job.config.curvature_budget_per_panel = as_int(j.at("curvature_budget"), "curvature_budget");
  }
  if (j.contains("global_curvature")) {
    job.config.global_curvature = as_bool(j.at("global_curvature"), "global_curvature");
  }
  if (j.contains("output")) {
    job.output = parse_output(as_string(j.at("output"), "output"), "output");
  }
  if (j.contains("compare")) job.compare_oracle = as_bool(j.at("compare"), "compare");
  if (j.contains("emit_panels")) {
    job.config.record_panels = as_bool(j.at("emit_panels"), "emit_panels");
  }

  if (!(job.a < job.b)) {
    throw ConfigError("job fields require a < b");
  }
  job.config.validate();
  return job;
}

}  // namespace

int run_batch(std::istream& jobs, const Job& defaults, std::ostream& out,
              std::ostream& err) {
  RecordWriter writer{out, err};
  int worst = kExitOk;
  std::set<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(jobs, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    JobOutcome outcome;
    outcome.job = defaults;
    outcome.job.label = "job" + std::to_string(line_no);
    outcome.line = line_no;
    try {
      json parsed;
      try {
        parsed = json::parse(line);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed job line: ") + e.what());
      }
      const Job job = job_from_json(parsed, defaults, line_no);
      if (!labels.insert(job.label).second) {
        throw ConfigError("job field 'label' duplicates '" + job.label + "'");
      }
      outcome = run_job(job);
      outcome.line = line_no;
    } catch (const ConfigError& e) {
      outcome.code = kExitInput;
      outcome.error = e.what();
    }
    writer.write(outcome);
    worst = std::max(worst, outcome.code);
  }
  return worst;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified integral enclosures from second-derivative bounds"};
  app.name("hhquad");

  std::string expr_text;
  std::string batch_path;
  std::string label = "job";
  double a = 0.0;
  double b = 0.0;
  std::string method = "adaptive";
  int panels = 1;
  double tol = 1e-6;
  int max_panels = 4096;
  std::string kernels = "midpoint,trapezoid,auto";
  std::string curvature = "rigorous";
  int curvature_budget = 32;
  bool global_curvature = false;
  std::string output = "text";
  bool compare = false;
  bool emit_panels = false;

  auto* expr_opt = app.add_option("--expr", expr_text, "Integrand f(x)");
  auto* a_opt = app.add_option("--a", a, "Lower integration limit");
  auto* b_opt = app.add_option("--b", b, "Upper integration limit");
  app.add_option("--label", label, "Job label used in reports");
  app.add_option("--method", method, "fixed | adaptive")
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  app.add_option("--panels", panels, "Fixed mode: panel count; adaptive: initial grid");
  app.add_option("--tol", tol, "Adaptive target width of the integral enclosure");
  app.add_option("--max-panels", max_panels, "Adaptive panel limit");
  app.add_option("--kernels", kernels,
                 "Comma list of midpoint, trapezoid, ujevic, classic_hh, auto");
  app.add_option("--curvature", curvature, "rigorous | heuristic | manual:M1,M2");
  app.add_option("--curvature-budget", curvature_budget,
                 "Rigorous-curvature bisection budget per panel");
  app.add_flag("--global-curvature", global_curvature,
               "Bound f'' once on [a, b] instead of per panel");
  app.add_option("--output", output, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--compare", compare, "Also print a composite-Simpson reference value");
  app.add_flag("--emit-panels", emit_panels, "Include per-panel enclosures in the report");
  auto* batch_opt =
      app.add_option("--batch", batch_path, "File of newline-delimited JSON jobs");
  batch_opt->excludes(expr_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Job job;
    job.label = label;
    job.expr_text = expr_text;
    job.a = a;
    job.b = b;
    job.config.method = method == "fixed" ? QuadMethod::kFixed : QuadMethod::kAdaptive;
    job.config.panels_n = panels;
    job.config.tolerance = tol;
    job.config.max_panels = max_panels;
    job.config.kernels = KernelSet::parse(kernels);
    job.config.curvature_budget_per_panel = curvature_budget;
    job.config.global_curvature = global_curvature;
    job.config.record_panels = emit_panels;
    parse_curvature(curvature, "--curvature", &job.config);
    job.output = parse_output(output, "--output");
    job.compare_oracle = compare;

    if (!batch_path.empty()) {
      std::ifstream file(batch_path);
      if (!file) {
        err << "--batch: cannot open '" << batch_path << "'\n";
        return kExitInput;
      }
      return run_batch(file, job, out, err);
    }

    if (expr_text.empty()) {
      err << "--expr is required (or use --batch)\n";
      return kExitInput;
    }
    if (!a_opt->count() || !b_opt->count()) {
      err << "--a and --b are required\n";
      return kExitInput;
    }
    if (!(a < b)) {
      err << "--a must be less than --b\n";
      return kExitInput;
    }
    job.config.validate();

    const JobOutcome outcome = run_job(job);
    RecordWriter writer{out, err};
    writer.write(outcome);
    return outcome.code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CurvatureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace hhquad::cli
