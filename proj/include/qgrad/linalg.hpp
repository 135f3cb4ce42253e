#pragma once

// Small dense linear algebra: just enough for Hessian spectra, Newton-type
// solves and the Moore-Penrose pseudoinverse used by the quadratic gradients.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qgrad::linalg {

/// Real column vector. A default-constructed Vector is empty and only
/// serves as a placeholder; every sized constructor requires dim >= 1.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0);
  Vector(std::initializer_list<double> values);
  explicit Vector(std::vector<double> values);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> span() noexcept { return data_; }
  std::span<const double> span() const noexcept { return data_; }
  const std::vector<double>& values() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  bool all_finite() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(double s, const Vector& a);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
double norm_inf(const Vector& a);
/// Elementwise product.
Vector hadamard(const Vector& a, const Vector& b);

/// Square real matrix with row-major storage.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order, double fill = 0.0);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t order);
  static DenseMatrix diagonal(const Vector& diag);

  std::size_t order() const noexcept { return order_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  std::span<const double> entries() const noexcept { return data_; }

  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;
  bool all_finite() const noexcept;
  /// |a_ij - a_ji| <= tol * (1 + max|a|) for every pair.
  bool is_symmetric(double tol) const noexcept;
  DenseMatrix transpose() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
Vector operator*(const DenseMatrix& a, const Vector& x);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);

/// x^T A x
double quadratic_form(const DenseMatrix& a, const Vector& x);

struct SpectralBounds {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double spectral_radius = 0.0;
};

inline constexpr double kDefaultTol = 1e-12;

/// All eigenvalues of a symmetric matrix in ascending order (cyclic Jacobi).
/// Throws InvalidMatrix if `h` is not symmetric within `tol` or has
/// non-finite entries.
Vector symmetric_eigenvalues(const DenseMatrix& h, double tol = kDefaultTol);

SpectralBounds spectral_bounds(const DenseMatrix& h, double tol = kDefaultTol);

/// Gaussian elimination with partial pivoting. Throws SingularMatrix when a
/// pivot is not above tol * max|a|, which is the caller's cue to switch to
/// the pseudoinverse.
Vector solve(const DenseMatrix& a, const Vector& b, double tol = kDefaultTol);

/// Moore-Penrose pseudoinverse via one-sided Jacobi SVD. Singular values at
/// or below rank_tol * sigma_max * order are treated as zero.
DenseMatrix pseudoinverse(const DenseMatrix& a, double rank_tol = kDefaultTol);

/// Singular values in descending order (same one-sided Jacobi sweep).
Vector singular_values(const DenseMatrix& a);

}  // namespace qgrad::linalg
