#include "ybekit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ybekit/enumerate.hpp"
#include "ybekit/json_io.hpp"

namespace ybekit::cli {

namespace {

std::string read_input(const std::string& input) {
  if (!input.empty() && input.front() == '{') return input;
  std::ostringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(input);
  if (!f) throw ParseError("cannot read " + input);
  buf << f.rdbuf();
  return buf.str();
}

// Writes to cfg.output when set, otherwise to `fallback`.
void emit(const RunConfig& cfg, std::ostream& fallback, const std::string& text) {
  if (cfg.output.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw ParseError("cannot write " + cfg.output);
  f << text;
}

std::string dump(const Json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

AnalyzeOptions analyze_options(const RunConfig& cfg) {
  AnalyzeOptions o;
  o.group_cap = cfg.group_cap;
  o.brace_cap = cfg.brace_cap;
  return o;
}

EnumerateOptions enumerate_options(const RunConfig& cfg) {
  EnumerateOptions o;
  o.threads = cfg.threads;
  o.allow_large = cfg.allow_large;
  o.time_budget_secs = cfg.time_budget_secs;
  o.analyze = analyze_options(cfg);
  return o;
}

// Maps library errors onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kShapeFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

std::string human_validation(const ValidationReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "involutive:    " << yn(r.involutive) << '\n'
     << "nondegenerate: " << yn(r.nondegenerate) << '\n'
     << "braid:         " << yn(r.braid) << '\n';
  if (r.braid_counterexample) {
    const auto& t = *r.braid_counterexample;
    os << "braid counterexample: (" << t[0] << ", " << t[1] << ", " << t[2] << ")\n";
  }
  os << (r.passes() ? "solution: valid\n" : "solution: INVALID\n");
  return os.str();
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Solution s = parse_solution(read_input(cfg.input));
    const ValidationReport r = validate(s);
    emit(cfg, out, cfg.pretty ? human_validation(r) : dump(to_json(r), false));
    return r.passes() ? kOk : kInvalidSolution;
  });
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Solution s = parse_solution(read_input(cfg.input));
    const CatalogRecord rec = analyze(s, analyze_options(cfg));
    emit(cfg, out, dump(to_json(rec), cfg.pretty));
    return rec.valid() ? kOk : kInvalidSolution;
  });
}

int cmd_brace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Solution s = parse_solution(read_input(cfg.input));
    const ValidationReport r = validate(s);
    if (!r.passes()) {
      err << human_validation(r);
      return kInvalidSolution;
    }
    const FiniteBrace b = brace_from_solution(s, cfg.brace_cap);
    emit(cfg, out, dump(to_json(b, cfg.with_lambda), cfg.pretty));
    return kOk;
  });
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const EnumerateOptions opts = enumerate_options(cfg);
    EnumerateStats stats;
    Catalog catalog;
    catalog.records = fast_enumerate(cfg.n, opts, &stats);
    catalog.header = catalog_header(cfg.n, opts, catalog.records.size());

    std::ostringstream lines;
    write_catalog(lines, catalog);
    Json summary = tally(catalog.records);
    summary["n"] = cfg.n;
    summary["search_nodes"] = stats.nodes;
    if (cfg.output.empty()) {
      out << lines.str();
      err << dump(summary, cfg.pretty);
    } else {
      emit(cfg, out, lines.str());
      out << dump(summary, cfg.pretty);
    }
    return kOk;
  });
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ClassificationReport report = classify_primitive(cfg.n_max, enumerate_options(cfg));
    if (cfg.pretty) {
      std::ostringstream os;
      os << "n  classes  primitive  shape\n";
      for (const auto& e : report.entries) {
        os << e.n << "  " << e.classes << "  " << e.primitive.size() << "  "
           << (e.shape_ok ? "ok" : "FAIL: " + e.diagnostic) << '\n';
        for (const auto& rec : e.primitive) os << "   " << to_json(rec.sigma).dump() << '\n';
      }
      emit(cfg, out, os.str());
    } else {
      emit(cfg, out, dump(to_json(report), false));
    }
    if (!cfg.csv_output.empty()) {
      std::ofstream f(cfg.csv_output);
      if (!f) throw ParseError("cannot write " + cfg.csv_output);
      f << classification_csv(report);
    }
    for (const auto& e : report.entries)
      if (!e.shape_ok) err << "shape check failed at n=" << e.n << ": " << e.diagnostic << '\n';
    return report.ok() ? kOk : kShapeFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involutive set-theoretic Yang-Baxter solutions: validate, analyze, enumerate"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Write the result to this file");
    sub->add_flag("--pretty", cfg.pretty, "Human-readable output");
    sub->add_option("--group-cap", cfg.group_cap, "Largest permutation group materialized")
        ->check(CLI::PositiveNumber);
    sub->add_option("--brace-cap", cfg.brace_cap, "Largest brace built")->check(CLI::PositiveNumber);
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", cfg.allow_large, "Permit n = 8");
    sub->add_option("--budget-secs", cfg.time_budget_secs, "Wall-clock budget in seconds")
        ->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the solution axioms");
  validate_cmd->add_option("input", cfg.input, "Solution JSON file, '-' or inline JSON")->required();
  add_common(validate_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "Full record for one solution");
  analyze_cmd->add_option("input", cfg.input, "Solution JSON file, '-' or inline JSON")->required();
  add_common(analyze_cmd);

  auto* brace_cmd = app.add_subcommand("brace", "Export the brace on the permutation group");
  brace_cmd->add_option("input", cfg.input, "Solution JSON file, '-' or inline JSON")->required();
  brace_cmd->add_flag("--lambda", cfg.with_lambda, "Include the lambda table");
  add_common(brace_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Catalog all solutions of size n");
  enumerate_cmd->add_option("--n", cfg.n, "Set size")->required()->check(CLI::PositiveNumber);
  add_common(enumerate_cmd);
  add_search(enumerate_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Primitive classes for n = 2..n_max");
  classify_cmd->add_option("--n-max", cfg.n_max, "Largest set size")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--csv", cfg.csv_output, "Write a CSV summary to this file");
  add_common(classify_cmd);
  add_search(classify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kIoError;
  }

  if (const char* env = std::getenv("YBEKIT_BUDGET_SECS"); env && *env) {
    try {
      cfg.time_budget_secs = std::stod(env);
    } catch (const std::exception&) {
      err << "error: YBEKIT_BUDGET_SECS is not a number\n";
      return kIoError;
    }
  }

  if (*validate_cmd) return cmd_validate(cfg, out, err);
  if (*analyze_cmd) return cmd_analyze(cfg, out, err);
  if (*brace_cmd) return cmd_brace(cfg, out, err);
  if (*enumerate_cmd) return cmd_enumerate(cfg, out, err);
  return cmd_classify(cfg, out, err);
}

}  // namespace ybekit::cli
