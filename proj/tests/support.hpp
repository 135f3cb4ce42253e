#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>

#include "qgrad/linalg.hpp"

namespace qgrad::test_support {

using linalg::DenseMatrix;
using linalg::Vector;

inline Vector random_vector(std::mt19937& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline DenseMatrix random_matrix(std::mt19937& rng, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

inline DenseMatrix random_symmetric(std::mt19937& rng, std::size_t n, double scale = 1.0) {
  DenseMatrix a = random_matrix(rng, n, scale);
  return 0.5 * (a + a.transpose());
}

/// B * C^T with only the first `rank` columns of B and C populated.
inline DenseMatrix random_low_rank(std::mt19937& rng, std::size_t n, std::size_t rank) {
  DenseMatrix b = random_matrix(rng, n);
  DenseMatrix c = random_matrix(rng, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = rank; j < n; ++j) b(i, j) = c(i, j) = 0.0;
  return b * c.transpose();
}

/// Symmetric with rank <= `rank`: B S B^T, S a random +-1 diagonal.
inline DenseMatrix random_symmetric_low_rank(std::mt19937& rng, std::size_t n, std::size_t rank) {
  DenseMatrix b = random_matrix(rng, n);
  std::bernoulli_distribution coin(0.5);
  DenseMatrix s(n);
  for (std::size_t j = 0; j < n; ++j) s(j, j) = j < rank ? (coin(rng) ? 1.0 : -1.0) : 0.0;
  return b * s * b.transpose();
}

/// Strictly diagonally dominant, hence well conditioned.
inline DenseMatrix random_well_conditioned(std::mt19937& rng, std::size_t n) {
  DenseMatrix a = random_matrix(rng, n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
    a(i, i) = (a(i, i) >= 0.0 ? 1.0 : -1.0) * (row + 1.0);
  }
  return a;
}

/// Residual norms of the four Penrose conditions, in Frobenius norm.
struct PenroseResiduals {
  double a_pinv_a = 0.0;      // A A+ A - A
  double pinv_a_pinv = 0.0;   // A+ A A+ - A+
  double a_pinv_sym = 0.0;    // (A A+)^T - A A+
  double pinv_a_sym = 0.0;    // (A+ A)^T - A+ A

  double max() const {
    return std::max(std::max(a_pinv_a, pinv_a_pinv), std::max(a_pinv_sym, pinv_a_sym));
  }
};

inline PenroseResiduals penrose_residuals(const DenseMatrix& a, const DenseMatrix& pinv) {
  const DenseMatrix ap = a * pinv;
  const DenseMatrix pa = pinv * a;
  return {
      (ap * a - a).frobenius_norm(),
      (pa * pinv - pinv).frobenius_norm(),
      (ap.transpose() - ap).frobenius_norm(),
      (pa.transpose() - pa).frobenius_norm(),
  };
}

}  // namespace qgrad::test_support
