#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgrad/csv.hpp"
#include "qgrad/functions.hpp"
#include "qgrad/optimizers.hpp"

namespace qgrad::bench {

using linalg::Vector;
using optimizers::OptimizerConfig;
using optimizers::RunStatus;

/// Column labels of the spectral-learning-rate comparison.
inline constexpr std::array<std::string_view, 3> kLemmaLrLabels = {
    "fSFHasLRrawgradientmethod", "naiveNAGwithfSFHasLR", "enhancedNAGwithQGandfSFHasLR"};

/// Column labels of the Adam / quadratic-gradient comparison.
inline constexpr std::array<std::string_view, 3> kAdamQgLabels = {"Adam", "AdamOldQG",
                                                                  "AdamNewQG"};

inline constexpr double kNaiveAdamStepsize = 0.1;
inline constexpr double kDefaultEta = 1.0;
inline constexpr std::array<double, 3> kEtaSweep = {1.0, 1.5, 2.0};

struct MethodSpec {
  std::string label;
  OptimizerConfig config;
};

struct ExperimentSpec {
  std::string function_id;
  Vector x0;
  int iterations = 30;
  std::vector<MethodSpec> methods;
};

struct MethodOutcome {
  std::string label;
  RunStatus status = RunStatus::MaxIterations;
  std::string message;
};

struct ExperimentResult {
  CsvTable table;
  std::vector<MethodOutcome> outcomes;

  bool any_diverged() const noexcept;
};

/// (0, 0) for 2-D functions except Beale at (1, 1); (-1.2, 1, ..., 1) for Rosenbrock.
Vector default_x0(const functions::ObjectiveFunction& f);

/// Runs every method from x0 for `iterations` steps. Column values are F for
/// Minimize and -F for Maximize objectives. Runs that stop on a vanishing
/// gradient repeat their final value; diverged runs are padded with NaN.
/// Throws InvalidConfig for duplicate labels or iterations < 1.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Gradient descent, NAG and enhanced NAG, all driven by the spectral
/// learning rate.
ExperimentResult experiment_lemma_lr(std::string_view function_id, int iterations,
                                     std::optional<Vector> x0 = std::nullopt,
                                     bool fixed_hessian = false);

/// Plain Adam (alpha = 0.1) against enhanced Adam with the original and the
/// new quadratic gradient (stepsize eta) on rosenbrock(n_vars).
ExperimentResult experiment_adam_qg(int n_vars, int iterations, double eta = kDefaultEta,
                                    std::optional<Vector> x0 = std::nullopt,
                                    bool fixed_hessian = false);

/// experiment_adam_qg once per eta in kEtaSweep.
std::vector<std::pair<double, ExperimentResult>> adam_qg_eta_sweep(
    int n_vars, int iterations, std::optional<Vector> x0 = std::nullopt,
    bool fixed_hessian = false);

}  // namespace qgrad::bench
