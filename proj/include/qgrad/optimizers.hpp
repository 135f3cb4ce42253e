#pragma once

// Iteration engines built on quadratic gradients and the spectral learning
// rate. Every engine minimizes; a Maximize objective is run as -F, so the
// ascent-form updates of the enhanced methods are recovered through the sign.

#include <optional>
#include <string>
#include <vector>

#include "qgrad/functions.hpp"
#include "qgrad/linalg.hpp"
#include "qgrad/quadgrad.hpp"

namespace qgrad::optimizers {

using functions::ObjectiveFunction;
using linalg::DenseMatrix;
using linalg::Vector;

enum class Method { GdSpectral, NagSpectral, EnhancedNag, EnhancedAdagrad, Adam, EnhancedAdam };

/// Which accelerator an enhanced method applies to the gradient. None means
/// the identity, so the enhanced engines degrade to their plain forms.
enum class QgVariant { Original, New, None };

/// Momentum weight gamma_t of beta_{t+1} = (1 - gamma_t) V_{t+1} + gamma_t V_t,
/// from a_0 = 1, a_{t+1} = (1 + sqrt(1 + 4 a_t^2)) / 2.
///   Damped:        gamma_t = (a_t - 1) / a_{t+1}, in [0, 1)
///   Extrapolating: gamma_t = (1 - a_t) / a_{t+1}, in (-1, 0]
enum class NagSchedule { Damped, Extrapolating };

struct OptimizerConfig {
  Method method = Method::Adam;
  /// alpha for Adam; eta for the enhanced Adam and Adagrad updates.
  double stepsize = 0.1;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon_accel = quadgrad::kDefaultEpsilon;
  double epsilon_adam = 1e-8;
  double rank_tol = linalg::kDefaultTol;
  QgVariant qg_variant = QgVariant::Original;
  NagSchedule nag_schedule = NagSchedule::Damped;
  /// Build accelerators and learning rates from H(x0) instead of H(x_t).
  bool fixed_hessian = false;
  int max_iterations = 30;
  double divergence_bound = 1e12;
  double gradient_tol = 1e-12;
};

/// Throws InvalidConfig when a field is out of range.
void validate(const OptimizerConfig& config);

struct OptimizerState {
  int t = 0;
  Vector theta;
  /// V_t of the NAG recursion.
  Vector momentum_prev;
  Vector m;
  Vector v;
  Vector adagrad_accum;
  /// a_t of the NAG schedule and the gamma_t most recently applied.
  double nag_alpha = 1.0;
  double nag_gamma = 0.0;
  std::optional<DenseMatrix> frozen_hessian;
};

/// Zeroed accumulators at x0. Captures H(x0) (in minimization sign) when
/// config.fixed_hessian is set.
OptimizerState initial_state(const ObjectiveFunction& f, const Vector& x0,
                             const OptimizerConfig& config);

double nag_gamma(double a_t, double a_next, NagSchedule schedule);
double nag_next_alpha(double a_t);

// Each step throws Diverged if the new iterate is not finite.
OptimizerState step_gd_spectral(const ObjectiveFunction& f, OptimizerState state,
                                const OptimizerConfig& config);
OptimizerState step_nag(const ObjectiveFunction& f, OptimizerState state,
                        const OptimizerConfig& config, bool enhanced);
OptimizerState step_enhanced_adagrad(const ObjectiveFunction& f, OptimizerState state,
                                     const OptimizerConfig& config);
OptimizerState step_adam(const ObjectiveFunction& f, OptimizerState state,
                         const OptimizerConfig& config, bool enhanced);

/// Dispatches on config.method.
OptimizerState step(const ObjectiveFunction& f, OptimizerState state,
                    const OptimizerConfig& config);

struct TrajectoryRecord {
  int iteration = 0;
  /// F(theta) in the objective's own sense.
  double objective = 0.0;
  Vector iterate;
};

enum class RunStatus { MaxIterations, Converged, Diverged };

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  RunStatus status = RunStatus::MaxIterations;
  std::string message;

  bool diverged() const noexcept { return status == RunStatus::Diverged; }
};

/// Records iteration 0 and then one row per step until max_iterations,
/// ||grad|| <= gradient_tol, or divergence (non-finite iterate, or any
/// |theta_i| > divergence_bound). A diverged run keeps the rows it produced
/// before the failing step.
Trajectory run(const ObjectiveFunction& f, const OptimizerConfig& config, const Vector& x0);

std::string to_string(Method method);
std::string to_string(QgVariant variant);

}  // namespace qgrad::optimizers
