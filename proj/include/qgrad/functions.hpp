#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qgrad/linalg.hpp"

namespace qgrad::functions {

using linalg::DenseMatrix;
using linalg::Vector;

enum class Sense { Minimize, Maximize };

struct KnownOptimum {
  Vector point;
  double value = 0.0;
};

/// Scalar field with analytic first and second derivatives.
class ObjectiveFunction {
 public:
  virtual ~ObjectiveFunction() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual Sense sense() const = 0;

  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  virtual DenseMatrix hessian(const Vector& x) const = 0;

  virtual std::vector<KnownOptimum> known_optima() const = 0;
};

using ObjectivePtr = std::shared_ptr<const ObjectiveFunction>;

/// f(x) = sum_{i<n} 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2, n in [2, 100].
ObjectivePtr rosenbrock(int n);
ObjectivePtr beale();
ObjectivePtr booth();
ObjectivePtr himmelblau();
/// F(x1, x2) = -2 x1^2 + 2 x1 x2 - x2^2, to be maximized. Constant Hessian
/// [[-4, 2], [2, -2]] that no diagonal matrix built from the Newton step
/// bounds from below.
ObjectivePtr quadratic_counterexample();

/// Looks up "rosenbrock:<n>", "rosenbrock" (n = 2), "beale", "booth",
/// "himmelblau" or "quadratic-counterexample". Throws UnknownFunction for
/// any other id and InvalidDimension for a bad Rosenbrock size.
ObjectivePtr make_function(std::string_view id);

/// Registry ids accepted by make_function (Rosenbrock listed once as "rosenbrock:<n>").
std::vector<std::string> registry_ids();

struct DerivativeErrors {
  double grad_err = 0.0;
  double hess_err = 0.0;
};

/// Max-norm gap between the analytic gradient/Hessian and central
/// differences (of the value for the gradient, of the gradient for the
/// Hessian) with step h.
DerivativeErrors finite_difference_check(const ObjectiveFunction& f, const Vector& x, double h);

}  // namespace qgrad::functions
