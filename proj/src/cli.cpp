#include "qgrad/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qgrad/bench.hpp"
#include "qgrad/errors.hpp"

namespace qgrad::bench {
namespace {

struct Options {
  std::string experiment = "lemma-lr";
  std::string function_id = "rosenbrock:2";
  int nvars = 2;
  int iterations = 30;
  std::string x0;
  std::string out_path;
  double eta = kDefaultEta;
  bool eta_sweep = false;
  int seed = 0;
  bool fixed_hessian = false;
};

std::optional<Vector> parse_point(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InvalidInput("--x0: cannot parse '" + std::string(first, last) + "'");
    }
    values.push_back(x);
    start = end + 1;
  }
  return Vector(std::move(values));
}

std::filesystem::path sweep_path(const std::filesystem::path& base, double eta) {
  std::filesystem::path p = base;
  p.replace_filename(base.stem().string() + "_eta" + format_value(eta) + base.extension().string());
  return p;
}

bool write_table(const CsvTable& table, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  if (path.empty()) {
    write_csv(out, table);
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  write_csv(file, table);
  return static_cast<bool>(file);
}

void report_outcomes(const ExperimentResult& result, std::ostream& err) {
  for (const MethodOutcome& o : result.outcomes) {
    if (o.status == RunStatus::Diverged) err << "warning: " << o.label << " diverged: " << o.message << '\n';
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Benchmark harness for quadratic-gradient optimizers; writes loss trajectories as CSV"};
  app.add_option("--experiment", opt.experiment, "Experiment family")
      ->check(CLI::IsMember({"lemma-lr", "adam-qg"}));
  auto* function_opt =
      app.add_option("--function", opt.function_id,
                     "Objective: rosenbrock:<n>, beale, booth, himmelblau, quadratic-counterexample");
  app.add_option("--nvars", opt.nvars, "Rosenbrock dimension for adam-qg");
  app.add_option("--iters", opt.iterations, "Iteration budget")->check(CLI::PositiveNumber);
  app.add_option("--x0", opt.x0, "Initial point, comma-separated");
  app.add_option("--out", opt.out_path, "Output CSV path (stdout when omitted)");
  app.add_option("--eta", opt.eta, "Stepsize of the enhanced Adam runs")->check(CLI::PositiveNumber);
  app.add_flag("--eta-sweep", opt.eta_sweep, "adam-qg: one CSV per eta in {1, 1.5, 2}; needs --out");
  app.add_option("--seed", opt.seed, "Reserved; every experiment is deterministic");
  app.add_flag("--fixed-hessian", opt.fixed_hessian, "Use H(x0) throughout instead of H(x_t)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadFlags;
  }

  try {
    if (function_opt->count() > 0) functions::make_function(opt.function_id);
    const std::optional<Vector> x0 = parse_point(opt.x0);

    if (opt.experiment == "lemma-lr") {
      if (opt.eta_sweep) {
        err << "error: --eta-sweep applies to adam-qg only\n";
        return kExitBadFlags;
      }
      const ExperimentResult result =
          experiment_lemma_lr(opt.function_id, opt.iterations, x0, opt.fixed_hessian);
      report_outcomes(result, err);
      return write_table(result.table, opt.out_path, out, err) ? kExitOk : kExitIoError;
    }

    if (function_opt->count() > 0) {
      err << "error: adam-qg always runs on Rosenbrock; use --nvars instead of --function\n";
      return kExitBadFlags;
    }
    if (opt.eta_sweep) {
      if (opt.out_path.empty()) {
        err << "error: --eta-sweep needs --out\n";
        return kExitBadFlags;
      }
      for (const auto& [eta, result] : adam_qg_eta_sweep(opt.nvars, opt.iterations, x0, opt.fixed_hessian)) {
        report_outcomes(result, err);
        if (!write_table(result.table, sweep_path(opt.out_path, eta).string(), out, err)) {
          return kExitIoError;
        }
      }
      return kExitOk;
    }
    const ExperimentResult result =
        experiment_adam_qg(opt.nvars, opt.iterations, opt.eta, x0, opt.fixed_hessian);
    report_outcomes(result, err);
    return write_table(result.table, opt.out_path, out, err) ? kExitOk : kExitIoError;
  } catch (const UnknownFunction& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnknownFunction;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadFlags;
  }
}

}  // namespace qgrad::bench
