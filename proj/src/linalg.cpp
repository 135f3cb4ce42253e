#include "qgrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "qgrad/errors.hpp"

namespace qgrad::linalg {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kMachEps = std::numeric_limits<double>::epsilon();

void require_same_size(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

void require_same_order(const DenseMatrix& a, const DenseMatrix& b, const char* what) {
  if (a.order() != b.order()) {
    throw DimensionError(std::string(what) + ": order " + std::to_string(a.order()) +
                         " vs " + std::to_string(b.order()));
  }
}

void require_finite(const DenseMatrix& a, const char* what) {
  if (!a.all_finite()) {
    throw InvalidMatrix(std::string(what) + ": non-finite entries");
  }
}

// Result of the one-sided Jacobi sweep: A * V = W, columns of W mutually
// orthogonal, so sigma_j = ||W_j|| and U_j = W_j / sigma_j.
struct OneSidedJacobi {
  DenseMatrix w;
  DenseMatrix v;
  std::vector<double> sigma;
};

OneSidedJacobi one_sided_jacobi(const DenseMatrix& a) {
  const std::size_t n = a.order();
  OneSidedJacobi out{a, DenseMatrix::identity(n), std::vector<double>(n, 0.0)};
  DenseMatrix& w = out.w;
  DenseMatrix& v = out.v;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        double gamma = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          alpha += w(k, p) * w(k, p);
          beta += w(k, q) * w(k, q);
          gamma += w(k, p) * w(k, q);
        }
        if (gamma == 0.0 || std::abs(gamma) <= kMachEps * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double wp = w(k, p);
          const double wq = w(k, q);
          w(k, p) = c * wp - s * wq;
          w(k, q) = s * wp + c * wq;
          const double vp = v(k, p);
          const double vq = v(k, q);
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += w(k, j) * w(k, j);
    out.sigma[j] = std::sqrt(sum);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim, double fill) : data_(dim, fill) {
  if (dim == 0) throw InvalidDimension("Vector: dimension must be >= 1");
}

Vector::Vector(std::initializer_list<double> values) : data_(values) {
  if (data_.empty()) throw InvalidDimension("Vector: dimension must be >= 1");
}

Vector::Vector(std::vector<double> values) : data_(std::move(values)) {
  if (data_.empty()) throw InvalidDimension("Vector: dimension must be >= 1");
}

bool Vector::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b, "Vector +");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b, "Vector -");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator-(const Vector& a) { return -1.0 * a; }

Vector operator*(double s, const Vector& a) {
  Vector out = a;
  for (double& x : out) x *= s;
  return out;
}

double dot(const Vector& a, const Vector& b) {
  require_same_size(a, b, "dot");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm2(const Vector& a) {
  double sum = 0.0;
  for (double x : a) sum += x * x;
  return std::sqrt(sum);
}

double norm_inf(const Vector& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

Vector hadamard(const Vector& a, const Vector& b) {
  require_same_size(a, b, "hadamard");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] *= b[i];
  return out;
}

// ----------------------------------------------------------- DenseMatrix

DenseMatrix::DenseMatrix(std::size_t order, double fill)
    : order_(order), data_(order * order, fill) {
  if (order == 0) throw InvalidDimension("DenseMatrix: order must be >= 1");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : order_(rows.size()) {
  if (order_ == 0) throw InvalidDimension("DenseMatrix: order must be >= 1");
  data_.reserve(order_ * order_);
  for (const auto& row : rows) {
    if (row.size() != order_) throw DimensionError("DenseMatrix: rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t order) {
  DenseMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const Vector& diag) {
  DenseMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double DenseMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

bool DenseMatrix::is_symmetric(double tol) const noexcept {
  const double bound = tol * (1.0 + max_abs());
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if (!(std::abs((*this)(i, j) - (*this)(j, i)) <= bound)) return false;
    }
  }
  return true;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b, "DenseMatrix *");
  const std::size_t n = a.order();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const DenseMatrix& a, const Vector& x) {
  if (a.order() != x.size()) throw DimensionError("DenseMatrix * Vector: size mismatch");
  Vector y(x.size());
  for (std::size_t i = 0; i < a.order(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.order(); ++j) sum += a(i, j) * x[j];
    y[i] = sum;
  }
  return y;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b, "DenseMatrix +");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) c(i, j) += b(i, j);
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b, "DenseMatrix -");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) c(i, j) -= b(i, j);
  return c;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) c(i, j) *= s;
  return c;
}

double quadratic_form(const DenseMatrix& a, const Vector& x) { return dot(x, a * x); }

// ------------------------------------------------------------- Spectrum

Vector symmetric_eigenvalues(const DenseMatrix& h, double tol) {
  require_finite(h, "symmetric_eigenvalues");
  if (!h.is_symmetric(tol)) throw InvalidMatrix("symmetric_eigenvalues: matrix is not symmetric");

  const std::size_t n = h.order();
  DenseMatrix a = h;
  // Work on the exactly symmetric part so rotations stay consistent.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (h(i, j) + h(j, i));

  const double frob = a.frobenius_norm();
  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
  };

  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > kMachEps * frob; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return Vector(std::move(eig));
}

SpectralBounds spectral_bounds(const DenseMatrix& h, double tol) {
  const Vector eig = symmetric_eigenvalues(h, tol);
  const double lo = eig[0];
  const double hi = eig[eig.size() - 1];
  return {lo, hi, std::max(std::abs(lo), std::abs(hi))};
}

// ---------------------------------------------------------------- Solve

Vector solve(const DenseMatrix& a, const Vector& b, double tol) {
  const std::size_t n = a.order();
  if (b.size() != n) throw DimensionError("solve: rhs size does not match matrix order");
  require_finite(a, "solve");
  if (!b.all_finite()) throw InvalidMatrix("solve: non-finite rhs");

  const double threshold = tol * a.max_abs();
  DenseMatrix m = a;
  Vector x = b;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
    if (!(std::abs(m(pivot, k)) > threshold)) {
      throw SingularMatrix("solve: pivot " + std::to_string(m(pivot, k)) + " in column " +
                           std::to_string(k) + " below threshold");
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = m(i, k) / m(k, k);
      if (factor == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
      x[i] -= factor * x[k];
    }
  }

  for (std::size_t k = n; k-- > 0;) {
    double sum = x[k];
    for (std::size_t j = k + 1; j < n; ++j) sum -= m(k, j) * x[j];
    x[k] = sum / m(k, k);
  }
  return x;
}

// -------------------------------------------------------- Pseudoinverse

DenseMatrix pseudoinverse(const DenseMatrix& a, double rank_tol) {
  require_finite(a, "pseudoinverse");
  const std::size_t n = a.order();
  const OneSidedJacobi svd = one_sided_jacobi(a);

  const double sigma_max = *std::max_element(svd.sigma.begin(), svd.sigma.end());
  const double cutoff = rank_tol * sigma_max * static_cast<double>(n);

  // A^+ = V * Sigma^-2 * W^T over the retained singular triplets.
  DenseMatrix pinv(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double sigma = svd.sigma[j];
    if (!(sigma > cutoff)) continue;
    const double inv_sq = 1.0 / (sigma * sigma);
    for (std::size_t i = 0; i < n; ++i) {
      const double vij = svd.v(i, j) * inv_sq;
      for (std::size_t k = 0; k < n; ++k) pinv(i, k) += vij * svd.w(k, j);
    }
  }
  return pinv;
}

Vector singular_values(const DenseMatrix& a) {
  require_finite(a, "singular_values");
  std::vector<double> sigma = one_sided_jacobi(a).sigma;
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return Vector(std::move(sigma));
}

}  // namespace qgrad::linalg
