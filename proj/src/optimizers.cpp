#include "qgrad/optimizers.hpp"

#include <cmath>
#include <utility>

#include "qgrad/errors.hpp"

namespace qgrad::optimizers {
namespace {

using functions::Sense;

double sense_sign(const ObjectiveFunction& f) {
  return f.sense() == Sense::Maximize ? -1.0 : 1.0;
}

// Gradient and Hessian of the function actually minimized (F or -F).
Vector descent_gradient(const ObjectiveFunction& f, const Vector& theta) {
  return sense_sign(f) * f.gradient(theta);
}

DenseMatrix descent_hessian(const ObjectiveFunction& f, const OptimizerState& state) {
  if (state.frozen_hessian) return *state.frozen_hessian;
  return sense_sign(f) * f.hessian(state.theta);
}

Vector accelerate(const DenseMatrix& h, const Vector& g, const OptimizerConfig& config) {
  switch (config.qg_variant) {
    case QgVariant::Original:
      return quadgrad::bound_diagonal(h, config.epsilon_accel).apply(g);
    case QgVariant::New:
      return quadgrad::new_quadratic_gradient(h, g, config.epsilon_accel, config.rank_tol).value;
    case QgVariant::None:
      break;
  }
  return g;
}

void require_finite(const OptimizerState& state, const char* who) {
  if (!state.theta.all_finite()) {
    throw Diverged(std::string(who) + ": non-finite iterate at step " + std::to_string(state.t));
  }
}

}  // namespace

void validate(const OptimizerConfig& config) {
  auto fail = [](const std::string& what) { throw InvalidConfig(what); };
  if (!(config.stepsize > 0.0)) fail("stepsize must be > 0");
  if (!(config.beta1 >= 0.0 && config.beta1 < 1.0)) fail("beta1 must be in [0, 1)");
  if (!(config.beta2 >= 0.0 && config.beta2 < 1.0)) fail("beta2 must be in [0, 1)");
  if (!(config.epsilon_accel > 0.0)) fail("epsilon_accel must be > 0");
  if (!(config.epsilon_adam > 0.0)) fail("epsilon_adam must be > 0");
  if (config.max_iterations < 1) fail("max_iterations must be >= 1");
  if (!(config.divergence_bound > 0.0)) fail("divergence_bound must be > 0");
}

OptimizerState initial_state(const ObjectiveFunction& f, const Vector& x0,
                             const OptimizerConfig& config) {
  if (x0.size() != f.dim()) {
    throw DimensionError("initial point has dimension " + std::to_string(x0.size()) + ", " +
                         f.name() + " expects " + std::to_string(f.dim()));
  }
  if (!x0.all_finite()) throw InvalidInput("initial point must be finite");

  OptimizerState state;
  state.theta = x0;
  state.momentum_prev = x0;
  state.m = Vector(x0.size());
  state.v = Vector(x0.size());
  state.adagrad_accum = Vector(x0.size());
  if (config.fixed_hessian) state.frozen_hessian = sense_sign(f) * f.hessian(x0);
  return state;
}

double nag_next_alpha(double a_t) { return (1.0 + std::sqrt(1.0 + 4.0 * a_t * a_t)) / 2.0; }

double nag_gamma(double a_t, double a_next, NagSchedule schedule) {
  return schedule == NagSchedule::Damped ? (a_t - 1.0) / a_next : (1.0 - a_t) / a_next;
}

OptimizerState step_gd_spectral(const ObjectiveFunction& f, OptimizerState state,
                                const OptimizerConfig& config) {
  const Vector g = descent_gradient(f, state.theta);
  const double lr = quadgrad::spectral_learning_rate(descent_hessian(f, state), config.epsilon_accel);
  state.theta = state.theta - lr * g;
  ++state.t;
  require_finite(state, "gd-spectral");
  return state;
}

OptimizerState step_nag(const ObjectiveFunction& f, OptimizerState state,
                        const OptimizerConfig& config, bool enhanced) {
  const Vector g = descent_gradient(f, state.theta);
  const DenseMatrix h = descent_hessian(f, state);
  const double lr = quadgrad::spectral_learning_rate(h, config.epsilon_accel);

  // Enhanced form: the spectral rate fills the (1 + alpha_t) slot in front of G.
  const Vector v_next = enhanced ? state.theta - (1.0 + lr) * accelerate(h, g, config)
                                 : state.theta - lr * g;

  const double a_next = nag_next_alpha(state.nag_alpha);
  const double gamma = nag_gamma(state.nag_alpha, a_next, config.nag_schedule);

  state.theta = (1.0 - gamma) * v_next + gamma * state.momentum_prev;
  state.momentum_prev = v_next;
  state.nag_alpha = a_next;
  state.nag_gamma = gamma;
  ++state.t;
  require_finite(state, enhanced ? "enhanced-nag" : "nag");
  return state;
}

OptimizerState step_enhanced_adagrad(const ObjectiveFunction& f, OptimizerState state,
                                     const OptimizerConfig& config) {
  const Vector g = descent_gradient(f, state.theta);
  const Vector qg = config.qg_variant == QgVariant::None
                        ? g
                        : accelerate(descent_hessian(f, state), g, config);

  for (std::size_t i = 0; i < qg.size(); ++i) {
    state.adagrad_accum[i] += qg[i] * qg[i];
    const double rate =
        (1.0 + config.stepsize) / (config.epsilon_adam + std::sqrt(state.adagrad_accum[i]));
    state.theta[i] -= rate * qg[i];
  }
  ++state.t;
  require_finite(state, "enhanced-adagrad");
  return state;
}

OptimizerState step_adam(const ObjectiveFunction& f, OptimizerState state,
                         const OptimizerConfig& config, bool enhanced) {
  ++state.t;
  const Vector g = descent_gradient(f, state.theta);
  const Vector grad = enhanced && config.qg_variant != QgVariant::None
                          ? accelerate(descent_hessian(f, state), g, config)
                          : g;

  const double b1 = config.beta1;
  const double b2 = config.beta2;
  const double correction1 = 1.0 - std::pow(b1, state.t);
  const double correction2 = 1.0 - std::pow(b2, state.t);

  for (std::size_t i = 0; i < grad.size(); ++i) {
    state.m[i] = b1 * state.m[i] + (1.0 - b1) * grad[i];
    state.v[i] = b2 * state.v[i] + (1.0 - b2) * grad[i] * grad[i];
    const double m_hat = state.m[i] / correction1;
    const double v_hat = state.v[i] / correction2;
    state.theta[i] -= config.stepsize * m_hat / (std::sqrt(v_hat) + config.epsilon_adam);
  }
  require_finite(state, enhanced ? "enhanced-adam" : "adam");
  return state;
}

OptimizerState step(const ObjectiveFunction& f, OptimizerState state,
                    const OptimizerConfig& config) {
  switch (config.method) {
    case Method::GdSpectral:
      return step_gd_spectral(f, std::move(state), config);
    case Method::NagSpectral:
      return step_nag(f, std::move(state), config, false);
    case Method::EnhancedNag:
      return step_nag(f, std::move(state), config, true);
    case Method::EnhancedAdagrad:
      return step_enhanced_adagrad(f, std::move(state), config);
    case Method::Adam:
      return step_adam(f, std::move(state), config, false);
    case Method::EnhancedAdam:
      return step_adam(f, std::move(state), config, true);
  }
  throw InvalidConfig("unknown method");
}

Trajectory run(const ObjectiveFunction& f, const OptimizerConfig& config, const Vector& x0) {
  validate(config);
  Trajectory out;
  OptimizerState state = initial_state(f, x0, config);
  out.records.push_back({0, f.value(x0), x0});

  for (int it = 1; it <= config.max_iterations; ++it) {
    if (linalg::norm2(f.gradient(state.theta)) <= config.gradient_tol) {
      out.status = RunStatus::Converged;
      return out;
    }
    try {
      state = step(f, std::move(state), config);
    } catch (const Diverged& e) {
      out.status = RunStatus::Diverged;
      out.message = e.what();
      return out;
    } catch (const InvalidMatrix& e) {
      out.status = RunStatus::Diverged;
      out.message = e.what();
      return out;
    } catch (const InvalidInput& e) {
      out.status = RunStatus::Diverged;
      out.message = e.what();
      return out;
    }
    if (linalg::norm_inf(state.theta) > config.divergence_bound) {
      out.status = RunStatus::Diverged;
      out.message = "iterate left the divergence bound at step " + std::to_string(it);
      return out;
    }
    const double value = f.value(state.theta);
    if (!std::isfinite(value)) {
      out.status = RunStatus::Diverged;
      out.message = "non-finite objective at step " + std::to_string(it);
      return out;
    }
    out.records.push_back({it, value, state.theta});
  }
  return out;
}

std::string to_string(Method method) {
  switch (method) {
    case Method::GdSpectral: return "gd-spectral";
    case Method::NagSpectral: return "nag-spectral";
    case Method::EnhancedNag: return "enhanced-nag";
    case Method::EnhancedAdagrad: return "enhanced-adagrad";
    case Method::Adam: return "adam";
    case Method::EnhancedAdam: return "enhanced-adam";
  }
  return "unknown";
}

std::string to_string(QgVariant variant) {
  switch (variant) {
    case QgVariant::Original: return "original";
    case QgVariant::New: return "new";
    case QgVariant::None: return "none";
  }
  return "unknown";
}

}  // namespace qgrad::optimizers
