#pragma once

// Small dense matrices and a cyclic Jacobi eigensolver for Hermitian input.
// Sizes in this library stay below ~64, so everything is row-major and dense.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace symconc {

using complex = std::complex<double>;

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename T>
inline T conj_if(const T& x) {
  if constexpr (is_complex<T>::value) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <typename T>
inline double real_part(const T& x) {
  if constexpr (is_complex<T>::value) {
    return x.real();
  } else {
    return static_cast<double>(x);
  }
}

}  // namespace detail

/// Thrown when a numerical routine cannot reach its tolerance, or when an
/// intermediate result contradicts an invariant that should hold exactly.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
class DenseMatrix {
 public:
  using value_type = Scalar;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar{}) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = detail::conj_if(data_[r * cols_ + c]);
    return out;
  }

  DenseMatrix conjugate() const {
    DenseMatrix out(*this);
    for (auto& x : out.data_) x = detail::conj_if(x);
    return out;
  }

  Scalar trace() const {
    Scalar t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix: shape mismatch in product");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar aik = a(i, k);
        if (aik == Scalar{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend DenseMatrix operator*(Scalar s, DenseMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("DenseMatrix: shape mismatch in apply");
    std::vector<Scalar> out(rows_, Scalar{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Largest elementwise modulus of (a - b).
  friend double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    a.require_same_shape(b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.data_.size(); ++i) m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
    return m;
  }

 private:
  void require_same_shape(const DenseMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("DenseMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using ComplexMatrix = DenseMatrix<complex>;
using RealMatrix = DenseMatrix<double>;

template <typename Scalar>
inline Scalar inner(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += detail::conj_if(a[i]) * b[i];
  return s;
}

/// Largest deviation from Hermitian symmetry, max |A_ij - conj(A_ji)|.
template <typename Scalar>
inline double hermiticity_defect(const DenseMatrix<Scalar>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - detail::conj_if(a(j, i))));
  return m;
}

template <typename Scalar>
struct EigenDecomposition {
  std::vector<double> values;     // ascending
  DenseMatrix<Scalar> vectors;    // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian (or real symmetric) matrix.
///
/// Each rotation zeroes one off-diagonal pair exactly; sweeps continue until
/// the off-diagonal Frobenius norm falls below `tol` times the full norm
/// (or below the smallest positive double when the input is zero).
template <typename Scalar>
EigenDecomposition<Scalar> jacobi_eigen(DenseMatrix<Scalar> a, double tol = 1e-14,
                                        int max_sweeps = 100) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix must be square");
  DenseMatrix<Scalar> v = DenseMatrix<Scalar>::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const double scale = a.frobenius_norm();
  const double target = std::max(tol * scale, std::numeric_limits<double>::min());

  int sweep = 0;
  for (; sweep < max_sweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Scalar e = apq / r;  // unit phase of the pivot
        const double app = detail::real_part(a(p, p));
        const double aqq = detail::real_part(a(q, q));
        const double tau = (aqq - app) / (2.0 * r);
        const double t = std::abs(tau) > 1e150
                             ? 0.5 / tau
                             : (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- A U with U_pp = U_qq = c, U_pq = s e, U_qp = -s conj(e)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * detail::conj_if(e) * akq;
          a(k, q) = s * e * akp + c * akq;
        }
        // A <- U^H A
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * detail::conj_if(e) * apk + c * aqk;
        }
        a(p, q) = Scalar{};
        a(q, p) = Scalar{};
        a(p, p) = Scalar{detail::real_part(a(p, p))};
        a(q, q) = Scalar{detail::real_part(a(q, q))};

        for (std::size_t k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * detail::conj_if(e) * vkq;
          v(k, q) = s * e * vkp + c * vkq;
        }
      }
    }
  }
  if (off_norm() > target) throw NumericalError("jacobi_eigen: no convergence");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return detail::real_part(a(i, i)) < detail::real_part(a(j, j));
  });

  EigenDecomposition<Scalar> out{std::vector<double>(n), DenseMatrix<Scalar>(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = detail::real_part(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Singular values of a square complex matrix, descending.
///
/// Computed as the positive half of the spectrum of the Hermitian dilation
/// [[0, A], [A^H, 0]], which keeps the absolute error near eps * |A| even for
/// singular values far below sqrt(eps).
inline std::vector<double> singular_values(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("singular_values: matrix must be square");
  ComplexMatrix dil(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dil(i, n + j) = a(i, j);
      dil(n + j, i) = std::conj(a(i, j));
    }
  auto eig = jacobi_eigen(std::move(dil));
  std::vector<double> sv(eig.values.end() - static_cast<std::ptrdiff_t>(n), eig.values.end());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  for (auto& s : sv) s = std::max(s, 0.0);
  return sv;
}

}  // namespace symconc
