#pragma once

// Brute-force reference in the full 2^N-dimensional Hilbert space.
//
// Bit convention: qubit q is bit q of the basis index (qubit 0 least
// significant) and bit value 0 means qubit state |0>. Nothing here goes
// through the collective basis machinery; only the final 4x4 concurrence
// reuses the general Wootters routine.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "symconc/collective.hpp"
#include "symconc/concurrence.hpp"
#include "symconc/epr.hpp"
#include "symconc/thermal.hpp"

namespace symconc::oracle {

inline constexpr int kMaxVectorQubits = 12;
inline constexpr int kMaxDensityQubits = 10;

struct FullState {
  int n_qubits = 0;
  std::variant<Eigen::VectorXcd, Eigen::MatrixXcd> data;

  bool is_pure() const { return std::holds_alternative<Eigen::VectorXcd>(data); }
  std::size_t dimension() const { return std::size_t{1} << n_qubits; }
};

namespace detail {

inline void require_cap(int n_qubits, int cap, const char* who) {
  if (n_qubits < 1 || n_qubits > cap)
    throw std::invalid_argument(std::string(who) + ": n_qubits must be in [1, " + std::to_string(cap) +
                                "], got " + std::to_string(n_qubits));
}

/// Number of qubits in |0> among the lowest `width` bits starting at `offset`.
inline int zeros_in(std::uint64_t index, int offset, int width) {
  const std::uint64_t mask = ((std::uint64_t{1} << width) - 1) << offset;
  return width - std::popcount(index & mask);
}

/// count[n] = number of width-bit strings with n zeros, by enumeration.
inline std::vector<double> count_by_zeros(int width) {
  std::vector<double> count(static_cast<std::size_t>(width) + 1, 0.0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << width); ++s) count[zeros_in(s, 0, width)] += 1.0;
  return count;
}

inline Eigen::VectorXcd apply_sz(const Eigen::VectorXcd& v, int n) {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index s = 0; s < v.size(); ++s)
    out[s] = 0.5 * (2.0 * zeros_in(static_cast<std::uint64_t>(s), 0, n) - n) * v[s];
  return out;
}

/// sum_q sigma_q^+ with sigma^+ = |0><1|: clears a set bit.
inline Eigen::VectorXcd apply_splus(const Eigen::VectorXcd& v, int n) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (Eigen::Index s = 0; s < v.size(); ++s)
    for (int q = 0; q < n; ++q)
      if (s & (Eigen::Index{1} << q)) out[s & ~(Eigen::Index{1} << q)] += v[s];
  return out;
}

inline Eigen::VectorXcd apply_sminus(const Eigen::VectorXcd& v, int n) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (Eigen::Index s = 0; s < v.size(); ++s)
    for (int q = 0; q < n; ++q)
      if (!(s & (Eigen::Index{1} << q))) out[s | (Eigen::Index{1} << q)] += v[s];
  return out;
}

using Operator = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

inline complex expectation(const FullState& state, const Operator& op) {
  if (state.is_pure()) {
    const auto& psi = std::get<Eigen::VectorXcd>(state.data);
    return psi.dot(op(psi));  // dot conjugates the left argument
  }
  const auto& rho = std::get<Eigen::MatrixXcd>(state.data);
  complex tr = 0.0;
  for (Eigen::Index c = 0; c < rho.cols(); ++c) tr += op(rho.col(c))[c];
  return tr;
}

}  // namespace detail

/// Expands a top-sector state into bitstrings: |n>_N is the equal-weight
/// superposition of all strings with n qubits in |0>.
inline FullState symmetrized_full_state(const CollectiveVector& v) {
  const int n = v.n_qubits();
  detail::require_cap(n, kMaxVectorQubits, "symmetrized_full_state");
  if (!v.sector().is_symmetric())
    throw std::invalid_argument("symmetrized_full_state: state must lie in the S = N/2 sector");
  const auto count = detail::count_by_zeros(n);
  Eigen::VectorXcd psi(Eigen::Index{1} << n);
  for (Eigen::Index s = 0; s < psi.size(); ++s) {
    const int zeros = detail::zeros_in(static_cast<std::uint64_t>(s), 0, n);
    psi[s] = v.amplitudes()[zeros] / std::sqrt(count[zeros]);
  }
  return {n, psi};
}

/// The two-ensemble EPR state on 2N qubits; ensemble 1 holds qubits [0, N),
/// ensemble 2 holds [N, 2N).
inline FullState epr_full_state(int n_per_ensemble) {
  detail::require_cap(2 * n_per_ensemble, kMaxVectorQubits, "epr_full_state");
  const int n = n_per_ensemble;
  const auto count = detail::count_by_zeros(n);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << (2 * n));
  for (Eigen::Index s = 0; s < psi.size(); ++s) {
    const int z1 = detail::zeros_in(static_cast<std::uint64_t>(s), 0, n);
    const int z2 = detail::zeros_in(static_cast<std::uint64_t>(s), n, n);
    if (z1 == z2) psi[s] = 1.0 / (std::sqrt(n + 1.0) * count[z1]);
  }
  return {2 * n, psi};
}

/// Reduced density matrix of qubits (i, j), basis |ab> at 2a + b with a the
/// state of qubit i.
inline Eigen::Matrix4cd partial_trace_pair(const FullState& state, int i, int j) {
  const int n = state.n_qubits;
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("partial_trace_pair: invalid qubit pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") for " + std::to_string(n) + " qubits");
  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  auto compose = [&](std::uint64_t rest, int ab) {
    return static_cast<Eigen::Index>(rest | ((ab & 2) ? bi : 0) | ((ab & 1) ? bj : 0));
  };

  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (std::uint64_t rest = 0; rest < state.dimension(); ++rest) {
    if (rest & (bi | bj)) continue;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const auto row = compose(rest, r), col = compose(rest, c);
        if (state.is_pure()) {
          const auto& psi = std::get<Eigen::VectorXcd>(state.data);
          out(r, c) += psi[row] * std::conj(psi[col]);
        } else {
          out(r, c) += std::get<Eigen::MatrixXcd>(state.data)(row, col);
        }
      }
  }
  return out;
}

/// Largest elementwise deviation of any pair's reduced matrix from pair (0, 1).
inline double pair_choice_spread(const FullState& state) {
  const Eigen::Matrix4cd ref = partial_trace_pair(state, 0, 1);
  double spread = 0.0;
  for (int i = 0; i < state.n_qubits; ++i)
    for (int j = i + 1; j < state.n_qubits; ++j)
      spread = std::max(spread, (partial_trace_pair(state, i, j) - ref).cwiseAbs().maxCoeff());
  return spread;
}

inline ComplexMatrix to_dense(const Eigen::Matrix4cd& m) {
  ComplexMatrix out(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m(r, c);
  return out;
}

inline PairEntanglement pair_entanglement(const FullState& state, int i = 0, int j = 1) {
  return wootters_general(to_dense(partial_trace_pair(state, i, j)));
}

/// Collective moments evaluated from Pauli sums on the full state.
inline CollectiveMoments pauli_sum_moments(const FullState& state) {
  const int n = state.n_qubits;
  const detail::Operator sz = [n](const Eigen::VectorXcd& v) { return detail::apply_sz(v, n); };
  const detail::Operator sp = [n](const Eigen::VectorXcd& v) { return detail::apply_splus(v, n); };
  const detail::Operator sm = [n](const Eigen::VectorXcd& v) { return detail::apply_sminus(v, n); };
  const complex i_unit(0.0, 1.0);
  const detail::Operator sx = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return 0.5 * (sp(v) + sm(v)); };
  const detail::Operator sy = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return (-0.5 * i_unit) * (sp(v) - sm(v));
  };

  CollectiveMoments m;
  m.n_qubits = n;
  m.sz = detail::expectation(state, sz).real();
  m.sz2 = detail::expectation(state, [&](const Eigen::VectorXcd& v) { return sz(sz(v)); }).real();
  m.sp = detail::expectation(state, sp);
  m.sp2 = detail::expectation(state, [&](const Eigen::VectorXcd& v) { return sp(sp(v)); });
  m.sxy2 = detail::expectation(state, [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
             return sx(sx(v)) + sy(sy(v));
           }).real();
  m.sp_sz_anti = detail::expectation(state, [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return sp(sz(v)) + sz(sp(v));
  });
  return m;
}

/// Pairwise all-to-all Hamiltonian
///   J/4 sum_{i != j} (XX + YY + ZZ) + 3JN/4 + [J (Delta - 1) S_z^2  or  f(S_z)]
/// so that the spectrum coincides with the collective form J S^2 + ... exactly.
inline Eigen::MatrixXd full_hamiltonian(const ThermalModel& model) {
  validate(model);
  const int n = model.n_qubits;
  detail::require_cap(n, kMaxDensityQubits, "full_hamiltonian");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double j = model.coupling;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  for (Eigen::Index s = 0; s < dim; ++s) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const bool bit_a = s & (Eigen::Index{1} << a);
        const bool bit_b = s & (Eigen::Index{1} << b);
        // ordered pairs (a, b) and (b, a) each contribute J/4
        h(s, s) += 0.5 * j * (bit_a == bit_b ? 1.0 : -1.0);
        if (bit_a != bit_b) {
          const Eigen::Index t = s ^ ((Eigen::Index{1} << a) | (Eigen::Index{1} << b));
          h(t, s) += 0.5 * j * 2.0;  // (XX + YY) swaps antiparallel spins with weight 2
        }
      }
    h(s, s) += 0.75 * j * n;
    const double m = 0.5 * (2.0 * detail::zeros_in(static_cast<std::uint64_t>(s), 0, n) - n);
    h(s, s) += model.sz_function ? model.sz_function(m) : j * (model.anisotropy - 1.0) * m * m;
  }
  return h;
}

/// Diagonalized Hamiltonian reusable across temperatures.
class ThermalSpectrum {
 public:
  explicit ThermalSpectrum(const ThermalModel& model) : n_qubits_(model.n_qubits) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(full_hamiltonian(model));
    if (solver.info() != Eigen::Success) throw NumericalError("ThermalSpectrum: diagonalization failed");
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
  }

  double log_partition(double beta) const {
    const double ref = reference(beta);
    return -beta * ref + std::log((-beta * (energies_.array() - ref)).exp().sum());
  }

  FullState gibbs(double beta) const {
    const double ref = reference(beta);
    Eigen::VectorXd p = (-beta * (energies_.array() - ref)).exp();
    p /= p.sum();
    const Eigen::MatrixXd rho = vectors_ * p.asDiagonal() * vectors_.transpose();
    return {n_qubits_, Eigen::MatrixXcd(rho.cast<complex>())};
  }

  const Eigen::VectorXd& energies() const { return energies_; }

 private:
  double reference(double beta) const { return beta >= 0.0 ? energies_.minCoeff() : energies_.maxCoeff(); }

  int n_qubits_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

inline FullState full_thermal_state(const ThermalModel& model) {
  return ThermalSpectrum(model).gibbs(model.beta);
}

}  // namespace symconc::oracle
