#pragma once

// Wootters concurrence and entanglement of formation for two qubits.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "symconc/collective.hpp"
#include "symconc/linalg.hpp"
#include "symconc/pair_reduction.hpp"

namespace symconc {

struct PairEntanglement {
  double concurrence = 0.0;
  double eof = 0.0;
  std::array<double, 4> lambdas{};  // descending
};

/// Binary entropy in bits, h(0) = h(1) = 0.
inline double binary_entropy(double x) {
  auto term = [](double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); };
  return term(x) + term(1.0 - x);
}

/// Entanglement of formation as a function of concurrence.
inline double entanglement_of_formation(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

/// sigma_y (x) sigma_y in the |00>,|01>,|10>,|11> basis.
inline ComplexMatrix spin_flip_operator() {
  ComplexMatrix f(4, 4);
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

/// General spin-flip construction for an arbitrary two-qubit density matrix.
///
/// The lambdas are the singular values of A = sqrt(rho) F sqrt(rho)^*, with F
/// the spin flip; A A^H = sqrt(rho) rho~ sqrt(rho) has the same spectrum as
/// rho rho~, and taking singular values of A directly avoids square roots of
/// eigenvalues near zero.
inline PairEntanglement wootters_general(const ComplexMatrix& rho, double tol = 1e-8) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("wootters_general: expected a 4x4 matrix");
  if (hermiticity_defect(rho) > tol)
    throw std::invalid_argument("wootters_general: matrix is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol)
    throw std::invalid_argument("wootters_general: trace " + std::to_string(tr) + " differs from 1");

  const auto eig = jacobi_eigen(rho);
  if (eig.values.front() < -tol)
    throw std::invalid_argument("wootters_general: matrix is not positive semidefinite");

  // Eigenvalues at rounding level are zeroed; anything larger is a real
  // population and must be kept, its square root can dominate the lambdas.
  constexpr double kRoundoff = 1e-14;
  ComplexMatrix sqrt_rho(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double d = eig.values[k] < kRoundoff ? 0.0 : std::sqrt(eig.values[k]);
    if (d == 0.0) continue;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        sqrt_rho(i, j) += d * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }

  const ComplexMatrix a = sqrt_rho * spin_flip_operator() * sqrt_rho.conjugate();
  const auto sv = singular_values(a);

  PairEntanglement out;
  std::copy(sv.begin(), sv.end(), out.lambdas.begin());
  out.concurrence = std::max(0.0, out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3]);
  out.eof = entanglement_of_formation(out.concurrence);
  return out;
}

inline PairEntanglement wootters_general(const SymmetricPairMatrix& p) {
  return wootters_general(assemble_dense(p));
}

namespace detail {

inline void require_populations(double v_plus, double v_minus, const char* who) {
  if (v_plus < -1e-12 || v_minus < -1e-12)
    throw std::invalid_argument(std::string(who) + ": negative population v+ or v-");
}

}  // namespace detail

/// Closed form for matrices with x+- = u = 0 and real coherence y.
/// Uses |y| so that negative coherences (antiferromagnetic correlations) are
/// covered as well.
inline double concurrence_xy_form(double v_plus, double v_minus, double w, double y) {
  detail::require_populations(v_plus, v_minus, "concurrence_xy_form");
  (void)w;  // only v+- and y enter once x+- = u = 0
  const double root = std::sqrt(std::max(0.0, v_plus) * std::max(0.0, v_minus));
  return 2.0 * std::max(0.0, std::abs(y) - root);
}

/// Piecewise closed form for matrices with x+- = 0 and y = w.
inline double concurrence_xu_form(double v_plus, double v_minus, double w, complex u) {
  detail::require_populations(v_plus, v_minus, "concurrence_xu_form");
  const double root = std::sqrt(std::max(0.0, v_plus) * std::max(0.0, v_minus));
  const double abs_u = std::abs(u);
  if (2.0 * w < root + abs_u) return 2.0 * std::max(0.0, abs_u - w);
  return 2.0 * std::max(0.0, w - root);
}

/// Pair concurrence of the Dicke state |N/2, M>.
inline double dicke_concurrence(int n_qubits, HalfInteger m) {
  if (n_qubits < 2) throw std::invalid_argument("dicke_concurrence: need at least 2 qubits");
  if (std::abs(m.twice) > n_qubits || (n_qubits - m.twice) % 2 != 0)
    throw std::invalid_argument("dicke_concurrence: M = " + std::to_string(m.value()) +
                                " invalid for N = " + std::to_string(n_qubits));
  // Work with 2M to keep N^2 - 4M^2 and (N-2)^2 - 4M^2 as exact integers.
  const long long n = n_qubits;
  const long long m2 = static_cast<long long>(m.twice) * m.twice;
  const long long a = n * n - m2;
  const long long b = (n - 2) * (n - 2) - m2;
  // b < 0 only at |M| = N/2, where a = 0 as well.
  const double root = (a <= 0 || b <= 0) ? 0.0 : std::sqrt(static_cast<double>(a) * static_cast<double>(b));
  const double c = (static_cast<double>(a) - root) / (2.0 * static_cast<double>(n * (n - 1)));
  return std::max(0.0, c);
}

}  // namespace symconc
