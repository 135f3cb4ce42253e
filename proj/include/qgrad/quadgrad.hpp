#pragma once

// Quadratic gradients: a gradient premultiplied by a positive diagonal
// accelerator distilled from second-order information.
//
//   Original:  diag_j = 1 / (eps + sum_i |hbar_ji|)       (row sums of a bound matrix)
//   New:       diag_j = 1 / (eps + |r_j|),  r = (H D)^+ g,  D = diag(g)
//
// For the new variant diag(r) * g reproduces the Newton step H^-1 g whenever
// H is invertible and g has no zero entries.

#include "qgrad/linalg.hpp"

namespace qgrad::quadgrad {

using linalg::DenseMatrix;
using linalg::Vector;

inline constexpr double kDefaultEpsilon = 1e-8;

enum class Variant { Original, New };

/// Positive diagonal matrix, stored as its diagonal.
class DiagonalAccelerator {
 public:
  /// Throws InvalidInput unless every entry is finite and > 0, and
  /// InvalidEpsilon unless epsilon > 0.
  DiagonalAccelerator(Vector diag, double epsilon);

  const Vector& diag() const noexcept { return diag_; }
  double epsilon() const noexcept { return epsilon_; }
  std::size_t dim() const noexcept { return diag_.size(); }

  /// diag .* g
  Vector apply(const Vector& g) const;

 private:
  Vector diag_;
  double epsilon_;
};

struct QuadraticGradient {
  Vector value;
  DiagonalAccelerator accelerator;
  Variant variant;
};

struct NewQGIntermediate {
  Vector r;
  bool used_pseudoinverse = false;
};

/// diag_j = 1 / (epsilon + sum_i |hbar_ji|).
DiagonalAccelerator bound_diagonal(const DenseMatrix& hbar, double epsilon = kDefaultEpsilon);

/// G = B .* g, tagged Original.
QuadraticGradient quadratic_gradient(const DiagonalAccelerator& b, const Vector& g);

/// r = (H D)^+ g with D = diag(g). Takes the exact route r_i = (H^-1 g)_i / g_i
/// when every g_i != 0 and H passes linalg::solve; otherwise falls back to the
/// pseudoinverse and sets used_pseudoinverse.
NewQGIntermediate new_r_vector(const DenseMatrix& h, const Vector& g,
                               double rank_tol = linalg::kDefaultTol);

/// G_i = g_i / (epsilon + |r_i|), tagged New.
QuadraticGradient new_quadratic_gradient(const DenseMatrix& h, const Vector& g,
                                         double epsilon = kDefaultEpsilon,
                                         double rank_tol = linalg::kDefaultTol);

/// 1 / (epsilon + max |lambda_i(H)|).
double spectral_learning_rate(const DenseMatrix& h, double epsilon = kDefaultEpsilon);

}  // namespace qgrad::quadgrad
