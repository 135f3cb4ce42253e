#include "qgrad/functions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "qgrad/errors.hpp"

namespace qgrad::functions {
namespace {

void require_dim(const Vector& x, std::size_t dim, const std::string& who) {
  if (x.size() != dim) {
    throw DimensionError(who + ": expected dimension " + std::to_string(dim) + ", got " +
                         std::to_string(x.size()));
  }
}

// A 2-D residual r(x, y) with its gradient and (symmetric) Hessian.
struct Residual {
  double r;
  double dx, dy;
  double dxx, dxy, dyy;
};

// f = sum_k r_k^2, so
//   grad f = 2 sum r_k grad r_k
//   hess f = 2 sum (grad r_k grad r_k^T + r_k hess r_k)
class SumOfSquares2D : public ObjectiveFunction {
 public:
  std::size_t dim() const override { return 2; }
  Sense sense() const override { return Sense::Minimize; }

  double value(const Vector& x) const override {
    require_dim(x, 2, name());
    double f = 0.0;
    for (const Residual& res : residuals(x[0], x[1])) f += res.r * res.r;
    return f;
  }

  Vector gradient(const Vector& x) const override {
    require_dim(x, 2, name());
    Vector g(2);
    for (const Residual& res : residuals(x[0], x[1])) {
      g[0] += 2.0 * res.r * res.dx;
      g[1] += 2.0 * res.r * res.dy;
    }
    return g;
  }

  DenseMatrix hessian(const Vector& x) const override {
    require_dim(x, 2, name());
    DenseMatrix h(2);
    for (const Residual& res : residuals(x[0], x[1])) {
      h(0, 0) += 2.0 * (res.dx * res.dx + res.r * res.dxx);
      h(0, 1) += 2.0 * (res.dx * res.dy + res.r * res.dxy);
      h(1, 1) += 2.0 * (res.dy * res.dy + res.r * res.dyy);
    }
    h(1, 0) = h(0, 1);
    return h;
  }

 protected:
  virtual std::vector<Residual> residuals(double x, double y) const = 0;
};

class Beale final : public SumOfSquares2D {
 public:
  std::string name() const override { return "beale"; }
  std::vector<KnownOptimum> known_optima() const override { return {{Vector{3.0, 0.5}, 0.0}}; }

 protected:
  std::vector<Residual> residuals(double x, double y) const override {
    const double y2 = y * y;
    const double y3 = y2 * y;
    return {
        {1.5 - x + x * y, y - 1.0, x, 0.0, 1.0, 0.0},
        {2.25 - x + x * y2, y2 - 1.0, 2.0 * x * y, 0.0, 2.0 * y, 2.0 * x},
        {2.625 - x + x * y3, y3 - 1.0, 3.0 * x * y2, 0.0, 3.0 * y2, 6.0 * x * y},
    };
  }
};

class Booth final : public SumOfSquares2D {
 public:
  std::string name() const override { return "booth"; }
  std::vector<KnownOptimum> known_optima() const override { return {{Vector{1.0, 3.0}, 0.0}}; }

 protected:
  std::vector<Residual> residuals(double x, double y) const override {
    return {
        {x + 2.0 * y - 7.0, 1.0, 2.0, 0.0, 0.0, 0.0},
        {2.0 * x + y - 5.0, 2.0, 1.0, 0.0, 0.0, 0.0},
    };
  }
};

class Himmelblau final : public SumOfSquares2D {
 public:
  std::string name() const override { return "himmelblau"; }
  std::vector<KnownOptimum> known_optima() const override {
    return {
        {Vector{3.0, 2.0}, 0.0},
        {Vector{-2.8051180869527448531, 3.1313125182505729658}, 0.0},
        {Vector{-3.7793102533777468919, -3.2831859912861694123}, 0.0},
        {Vector{3.5844283403304917449, -1.8481265269644035535}, 0.0},
    };
  }

 protected:
  std::vector<Residual> residuals(double x, double y) const override {
    return {
        {x * x + y - 11.0, 2.0 * x, 1.0, 2.0, 0.0, 0.0},
        {x + y * y - 7.0, 1.0, 2.0 * y, 0.0, 0.0, 2.0},
    };
  }
};

class QuadraticCounterexample final : public ObjectiveFunction {
 public:
  std::string name() const override { return "quadratic-counterexample"; }
  std::size_t dim() const override { return 2; }
  Sense sense() const override { return Sense::Maximize; }

  double value(const Vector& x) const override {
    require_dim(x, 2, name());
    return -2.0 * x[0] * x[0] + 2.0 * x[0] * x[1] - x[1] * x[1];
  }

  Vector gradient(const Vector& x) const override {
    require_dim(x, 2, name());
    return Vector{-4.0 * x[0] + 2.0 * x[1], 2.0 * x[0] - 2.0 * x[1]};
  }

  DenseMatrix hessian(const Vector& x) const override {
    require_dim(x, 2, name());
    return DenseMatrix{{-4.0, 2.0}, {2.0, -2.0}};
  }

  std::vector<KnownOptimum> known_optima() const override { return {{Vector{0.0, 0.0}, 0.0}}; }
};

class Rosenbrock final : public ObjectiveFunction {
 public:
  explicit Rosenbrock(std::size_t n) : n_(n) {}

  std::string name() const override { return "rosenbrock:" + std::to_string(n_); }
  std::size_t dim() const override { return n_; }
  Sense sense() const override { return Sense::Minimize; }

  double value(const Vector& x) const override {
    require_dim(x, n_, name());
    double f = 0.0;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      const double b = 1.0 - x[i];
      f += 100.0 * a * a + b * b;
    }
    return f;
  }

  Vector gradient(const Vector& x) const override {
    require_dim(x, n_, name());
    Vector g(n_);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
      g[i + 1] += 200.0 * a;
    }
    return g;
  }

  DenseMatrix hessian(const Vector& x) const override {
    require_dim(x, n_, name());
    DenseMatrix h(n_);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      h(i, i) += 1200.0 * x[i] * x[i] - 400.0 * x[i + 1] + 2.0;
      h(i + 1, i + 1) += 200.0;
      h(i, i + 1) += -400.0 * x[i];
      h(i + 1, i) += -400.0 * x[i];
    }
    return h;
  }

  std::vector<KnownOptimum> known_optima() const override { return {{Vector(n_, 1.0), 0.0}}; }

 private:
  std::size_t n_;
};

}  // namespace

ObjectivePtr rosenbrock(int n) {
  if (n < 2 || n > 100) {
    throw InvalidDimension("rosenbrock: n must be in [2, 100], got " + std::to_string(n));
  }
  return std::make_shared<Rosenbrock>(static_cast<std::size_t>(n));
}

ObjectivePtr beale() { return std::make_shared<Beale>(); }
ObjectivePtr booth() { return std::make_shared<Booth>(); }
ObjectivePtr himmelblau() { return std::make_shared<Himmelblau>(); }
ObjectivePtr quadratic_counterexample() { return std::make_shared<QuadraticCounterexample>(); }

ObjectivePtr make_function(std::string_view id) {
  if (id == "beale") return beale();
  if (id == "booth") return booth();
  if (id == "himmelblau") return himmelblau();
  if (id == "quadratic-counterexample") return quadratic_counterexample();
  if (id == "rosenbrock") return rosenbrock(2);

  constexpr std::string_view prefix = "rosenbrock:";
  if (id.starts_with(prefix)) {
    const std::string_view digits = id.substr(prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InvalidDimension("rosenbrock: cannot parse size from '" + std::string(id) + "'");
    }
    return rosenbrock(n);
  }
  throw UnknownFunction("unknown function '" + std::string(id) + "'");
}

std::vector<std::string> registry_ids() {
  return {"rosenbrock:<n>", "beale", "booth", "himmelblau", "quadratic-counterexample"};
}

DerivativeErrors finite_difference_check(const ObjectiveFunction& f, const Vector& x, double h) {
  const std::size_t n = f.dim();
  require_dim(x, n, "finite_difference_check");

  const Vector g = f.gradient(x);
  const DenseMatrix hess = f.hessian(x);
  DerivativeErrors err;

  for (std::size_t j = 0; j < n; ++j) {
    Vector plus = x;
    Vector minus = x;
    plus[j] += h;
    minus[j] -= h;

    const double dfj = (f.value(plus) - f.value(minus)) / (2.0 * h);
    err.grad_err = std::max(err.grad_err, std::abs(dfj - g[j]));

    const Vector gp = f.gradient(plus);
    const Vector gm = f.gradient(minus);
    for (std::size_t i = 0; i < n; ++i) {
      const double d2 = (gp[i] - gm[i]) / (2.0 * h);
      err.hess_err = std::max(err.hess_err, std::abs(d2 - hess(i, j)));
    }
  }
  return err;
}

}  // namespace qgrad::functions
