#pragma once

// Pure symmetric N-qubit states: spin coherent, Dicke, one-axis twisted.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "symconc/collective.hpp"
#include "symconc/linalg.hpp"

namespace symconc {

struct CoherentParam {
  double eta = 0.0;
};

/// One-axis twisting strength mu = 2 chi t.
struct TwistParam {
  double mu = 0.0;
  int n_qubits = 2;
};

/// (1 + eta^2)^(-N/2) sum_n sqrt(C(N, n)) eta^n |n>_N
inline CollectiveVector spin_coherent(int n_qubits, CoherentParam p) {
  require_qubit_count(n_qubits);
  if (!std::isfinite(p.eta)) throw std::invalid_argument("spin_coherent: eta must be finite");
  const SpinSector sector = SpinSector::symmetric(n_qubits);
  std::vector<complex> amps(sector.dimension());
  const double n = n_qubits;

  if (p.eta == 0.0) {
    amps[0] = 1.0;
    return {sector, std::move(amps)};
  }

  const double log_abs_eta = std::log(std::abs(p.eta));
  const double log_norm = -0.5 * n * std::log1p(p.eta * p.eta);
  for (int k = 0; k <= n_qubits; ++k) {
    const double sign = (p.eta < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
    if (n_qubits <= 30) {
      amps[k] = sign * std::exp(log_norm + k * log_abs_eta) *
                std::sqrt(static_cast<double>(binomial(n_qubits, k)));
    } else {
      const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
      amps[k] = sign * std::exp(log_norm + k * log_abs_eta + 0.5 * log_binom);
    }
  }
  return {sector, std::move(amps)};
}

/// Dicke state |N/2, M> = |M + N/2>_N.
inline CollectiveVector dicke_state(int n_qubits, HalfInteger m) {
  const SpinSector sector = SpinSector::symmetric(n_qubits);
  const int n_index2 = m.twice + n_qubits;  // 2(M + N/2)
  if (std::abs(m.twice) > n_qubits || n_index2 % 2 != 0)
    throw std::invalid_argument("dicke_state: M = " + std::to_string(m.value()) + " invalid for N = " +
                                std::to_string(n_qubits));
  std::vector<complex> amps(sector.dimension());
  amps[static_cast<std::size_t>(n_index2 / 2)] = 1.0;
  return {sector, std::move(amps)};
}

/// exp(-i (mu/2) S_x^2) |0>_N, evaluated through the eigendecomposition of S_x^2.
inline CollectiveVector twisted_state(TwistParam p) {
  require_qubit_count(p.n_qubits, 2);
  const SpinSector sector = SpinSector::symmetric(p.n_qubits);
  const std::size_t dim = sector.dimension();

  // S_x is real in this basis, so S_x^2 can be diagonalized over the reals.
  RealMatrix sx(dim, dim);
  const ComplexMatrix sx_c = spin_matrix(sector, SpinComponent::x);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) sx(i, j) = sx_c(i, j).real();
  const auto eig = jacobi_eigen(sx * sx);

  std::vector<complex> amps(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const complex phase = std::polar(1.0, -0.5 * p.mu * eig.values[k]);
    const complex coeff = phase * eig.vectors(0, k);  // <k|0>_N = V(0, k)
    for (std::size_t i = 0; i < dim; ++i) amps[i] += coeff * eig.vectors(i, k);
  }
  // Remove the rounding drift of the rotation so the norm invariant holds tightly.
  const double norm = std::sqrt(inner(amps, amps).real());
  for (auto& a : amps) a /= norm;
  return {sector, std::move(amps)};
}

/// Closed-form moments of the twisted state.
inline CollectiveMoments twist_moments(TwistParam p) {
  require_qubit_count(p.n_qubits, 2);
  const double n = p.n_qubits;
  const double half = 0.5 * p.mu;
  const double cos_mu_pow = std::pow(std::cos(p.mu), n - 2.0);
  const double cos_half = std::cos(half);

  const double sx2 = n / 4.0;
  const double sy2 = (n * n + n - n * (n - 1.0) * cos_mu_pow) / 8.0;
  const double sz2 = (n * n + n + n * (n - 1.0) * cos_mu_pow) / 8.0;
  const double anti_xy = 0.5 * n * (n - 1.0) * std::pow(cos_half, n - 2.0) * std::sin(half);

  CollectiveMoments m;
  m.n_qubits = p.n_qubits;
  m.sz = -0.5 * n * std::pow(cos_half, n - 1.0);
  m.sz2 = sz2;
  m.sp = 0.0;
  m.sxy2 = sx2 + sy2;
  m.sp_sz_anti = 0.0;
  m.sp2 = complex(sx2 - sy2, anti_xy);
  return m;
}

}  // namespace symconc
