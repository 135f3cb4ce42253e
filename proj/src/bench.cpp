#include "qgrad/bench.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <set>

#include "qgrad/errors.hpp"

namespace qgrad::bench {
namespace {

using optimizers::Method;
using optimizers::QgVariant;

std::vector<double> column_from(const optimizers::Trajectory& traj, int iterations, double sign) {
  std::vector<double> column;
  column.reserve(static_cast<std::size_t>(iterations) + 1);
  for (const auto& rec : traj.records) column.push_back(sign * rec.objective);

  const double pad = traj.diverged() ? std::numeric_limits<double>::quiet_NaN() : column.back();
  column.resize(static_cast<std::size_t>(iterations) + 1, pad);
  return column;
}

OptimizerConfig config_for(Method method, int iterations, bool fixed_hessian) {
  OptimizerConfig config;
  config.method = method;
  config.max_iterations = iterations;
  config.fixed_hessian = fixed_hessian;
  return config;
}

}  // namespace

bool ExperimentResult::any_diverged() const noexcept {
  for (const MethodOutcome& o : outcomes)
    if (o.status == RunStatus::Diverged) return true;
  return false;
}

Vector default_x0(const functions::ObjectiveFunction& f) {
  if (f.name().starts_with("rosenbrock")) {
    Vector x0(f.dim(), 1.0);
    x0[0] = -1.2;
    return x0;
  }
  if (f.name() == "beale") return Vector{1.0, 1.0};
  return Vector(f.dim(), 0.0);
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.iterations < 1) throw InvalidConfig("iterations must be >= 1");
  std::set<std::string> seen;
  for (const MethodSpec& m : spec.methods) {
    if (!seen.insert(m.label).second) throw InvalidConfig("duplicate method label '" + m.label + "'");
  }

  const functions::ObjectivePtr f = functions::make_function(spec.function_id);
  const double sign = f->sense() == functions::Sense::Maximize ? -1.0 : 1.0;

  // Runs are independent; results are collected in method order.
  std::vector<std::future<optimizers::Trajectory>> pending;
  for (const MethodSpec& m : spec.methods) {
    OptimizerConfig config = m.config;
    config.max_iterations = spec.iterations;
    pending.push_back(std::async(std::launch::async, [f, config, x0 = spec.x0] {
      return optimizers::run(*f, config, x0);
    }));
  }

  ExperimentResult result;
  std::vector<std::vector<double>> columns;
  for (std::size_t k = 0; k < spec.methods.size(); ++k) {
    const optimizers::Trajectory traj = pending[k].get();
    columns.push_back(column_from(traj, spec.iterations, sign));
    result.outcomes.push_back({spec.methods[k].label, traj.status, traj.message});
    result.table.labels.push_back(spec.methods[k].label);
  }

  for (int it = 0; it <= spec.iterations; ++it) {
    CsvRow row{it, {}};
    for (const auto& column : columns) row.values.push_back(column[static_cast<std::size_t>(it)]);
    result.table.rows.push_back(std::move(row));
  }
  return result;
}

ExperimentResult experiment_lemma_lr(std::string_view function_id, int iterations,
                                     std::optional<Vector> x0, bool fixed_hessian) {
  const functions::ObjectivePtr f = functions::make_function(function_id);

  ExperimentSpec spec;
  spec.function_id = std::string(function_id);
  spec.x0 = x0 ? *x0 : default_x0(*f);
  spec.iterations = iterations;

  OptimizerConfig enhanced = config_for(Method::EnhancedNag, iterations, fixed_hessian);
  enhanced.qg_variant = QgVariant::Original;
  spec.methods = {
      {std::string(kLemmaLrLabels[0]), config_for(Method::GdSpectral, iterations, fixed_hessian)},
      {std::string(kLemmaLrLabels[1]), config_for(Method::NagSpectral, iterations, fixed_hessian)},
      {std::string(kLemmaLrLabels[2]), enhanced},
  };
  return run_experiment(spec);
}

ExperimentResult experiment_adam_qg(int n_vars, int iterations, double eta,
                                    std::optional<Vector> x0, bool fixed_hessian) {
  const functions::ObjectivePtr f = functions::rosenbrock(n_vars);

  ExperimentSpec spec;
  spec.function_id = f->name();
  spec.x0 = x0 ? *x0 : default_x0(*f);
  spec.iterations = iterations;

  OptimizerConfig adam = config_for(Method::Adam, iterations, fixed_hessian);
  adam.stepsize = kNaiveAdamStepsize;

  OptimizerConfig old_qg = config_for(Method::EnhancedAdam, iterations, fixed_hessian);
  old_qg.stepsize = eta;
  old_qg.qg_variant = QgVariant::Original;

  OptimizerConfig new_qg = old_qg;
  new_qg.qg_variant = QgVariant::New;

  spec.methods = {
      {std::string(kAdamQgLabels[0]), adam},
      {std::string(kAdamQgLabels[1]), old_qg},
      {std::string(kAdamQgLabels[2]), new_qg},
  };
  return run_experiment(spec);
}

std::vector<std::pair<double, ExperimentResult>> adam_qg_eta_sweep(int n_vars, int iterations,
                                                                   std::optional<Vector> x0,
                                                                   bool fixed_hessian) {
  std::vector<std::pair<double, ExperimentResult>> out;
  for (double eta : kEtaSweep) {
    out.emplace_back(eta, experiment_adam_qg(n_vars, iterations, eta, x0, fixed_hessian));
  }
  return out;
}

}  // namespace qgrad::bench
