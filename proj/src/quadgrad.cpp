#include "qgrad/quadgrad.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qgrad/errors.hpp"

namespace qgrad::quadgrad {
namespace {

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidEpsilon("epsilon must be finite and > 0, got " + std::to_string(epsilon));
  }
}

void require_compatible(const DenseMatrix& h, const Vector& g, const char* who) {
  if (h.order() != g.size()) {
    throw DimensionError(std::string(who) + ": gradient size does not match matrix order");
  }
  if (!h.all_finite() || !g.all_finite()) {
    throw InvalidInput(std::string(who) + ": non-finite input");
  }
}

}  // namespace

DiagonalAccelerator::DiagonalAccelerator(Vector diag, double epsilon)
    : diag_(std::move(diag)), epsilon_(epsilon) {
  require_epsilon(epsilon);
  if (diag_.empty()) throw InvalidInput("DiagonalAccelerator: empty diagonal");
  for (double d : diag_) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw InvalidInput("DiagonalAccelerator: entries must be finite and > 0");
    }
  }
}

Vector DiagonalAccelerator::apply(const Vector& g) const {
  if (g.size() != diag_.size()) {
    throw DimensionError("DiagonalAccelerator: gradient has dimension " + std::to_string(g.size()) +
                         ", accelerator " + std::to_string(diag_.size()));
  }
  return linalg::hadamard(diag_, g);
}

DiagonalAccelerator bound_diagonal(const DenseMatrix& hbar, double epsilon) {
  require_epsilon(epsilon);
  if (!hbar.all_finite()) throw InvalidMatrix("bound_diagonal: non-finite entries");

  const std::size_t n = hbar.order();
  Vector diag(n);
  for (std::size_t j = 0; j < n; ++j) {
    double row_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) row_sum += std::abs(hbar(j, i));
    diag[j] = 1.0 / (epsilon + row_sum);
  }
  return DiagonalAccelerator(std::move(diag), epsilon);
}

QuadraticGradient quadratic_gradient(const DiagonalAccelerator& b, const Vector& g) {
  return {b.apply(g), b, Variant::Original};
}

NewQGIntermediate new_r_vector(const DenseMatrix& h, const Vector& g, double rank_tol) {
  require_compatible(h, g, "new_r_vector");
  const std::size_t n = g.size();

  bool gradient_dense = true;
  for (double gi : g) gradient_dense = gradient_dense && gi != 0.0;

  if (gradient_dense) {
    try {
      const Vector newton = linalg::solve(h, g);
      Vector r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = newton[i] / g[i];
      if (r.all_finite()) return {std::move(r), false};
    } catch (const SingularMatrix&) {
      // fall through to the pseudoinverse
    }
  }

  // (H D)_ij = h_ij * g_j
  DenseMatrix hd = h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hd(i, j) *= g[j];

  return {linalg::pseudoinverse(hd, rank_tol) * g, true};
}

QuadraticGradient new_quadratic_gradient(const DenseMatrix& h, const Vector& g, double epsilon,
                                         double rank_tol) {
  require_epsilon(epsilon);
  const NewQGIntermediate inter = new_r_vector(h, g, rank_tol);

  Vector diag(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) diag[i] = 1.0 / (epsilon + std::abs(inter.r[i]));

  DiagonalAccelerator accel(std::move(diag), epsilon);
  Vector value = accel.apply(g);
  return {std::move(value), std::move(accel), Variant::New};
}

double spectral_learning_rate(const DenseMatrix& h, double epsilon) {
  require_epsilon(epsilon);
  return 1.0 / (epsilon + linalg::spectral_bounds(h).spectral_radius);
}

}  // namespace qgrad::quadgrad
