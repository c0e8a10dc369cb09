#pragma once

// Two N-qubit ensembles in the EPR-correlated state
//   |Psi> = (N + 1)^(-1/2) sum_n |n>_N (x) |n>_N
// and the pair formed by one qubit from each ensemble.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "symconc/collective.hpp"
#include "symconc/concurrence.hpp"
#include "symconc/pair_reduction.hpp"

namespace symconc {

/// Pure state on the product of two top sectors; amplitude of |n1>|n2> at
/// n1 * (N + 1) + n2.
struct BipartiteCollectiveVector {
  int n_per_ensemble = 1;
  std::vector<complex> amplitudes;

  std::size_t side() const { return static_cast<std::size_t>(n_per_ensemble) + 1; }
};

enum class Ensemble { first, second };

/// Applies a single-ensemble operator (in the top-sector basis) to one factor.
inline std::vector<complex> apply_local(const ComplexMatrix& op, Ensemble which,
                                        const BipartiteCollectiveVector& psi) {
  const std::size_t d = psi.side();
  if (op.rows() != d || op.cols() != d) throw std::invalid_argument("apply_local: operator size");
  std::vector<complex> out(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) {
        if (which == Ensemble::first)
          out[a * d + b] += op(a, k) * psi.amplitudes[k * d + b];
        else
          out[a * d + b] += op(b, k) * psi.amplitudes[a * d + k];
      }
  return out;
}

struct EprConstraintResiduals {
  double plus_minus = 0.0;  // |(J1+ - J2-) Psi|
  double minus_plus = 0.0;  // |(J1- - J2+) Psi|
  double z = 0.0;           // |(J1z - J2z) Psi|
};

inline EprConstraintResiduals epr_constraint_residuals(const BipartiteCollectiveVector& psi) {
  const SpinSector sector = SpinSector::symmetric(psi.n_per_ensemble);
  const auto jp = spin_matrix(sector, SpinComponent::plus);
  const auto jm = spin_matrix(sector, SpinComponent::minus);
  const auto jz = spin_matrix(sector, SpinComponent::z);
  auto residual = [&](const ComplexMatrix& op1, const ComplexMatrix& op2) {
    const auto a = apply_local(op1, Ensemble::first, psi);
    const auto b = apply_local(op2, Ensemble::second, psi);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
  };
  return {residual(jp, jm), residual(jm, jp), residual(jz, jz)};
}

inline BipartiteCollectiveVector epr_state(int n_per_ensemble) {
  require_qubit_count(n_per_ensemble);
  BipartiteCollectiveVector psi;
  psi.n_per_ensemble = n_per_ensemble;
  const std::size_t d = psi.side();
  psi.amplitudes.assign(d * d, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t n = 0; n < d; ++n) psi.amplitudes[n * d + n] = amp;

  const auto r = epr_constraint_residuals(psi);
  if (r.plus_minus > 1e-12 || r.minus_plus > 1e-12)
    throw NumericalError("epr_state: defining constraints violated");
  return psi;
}

/// <J1z J2z>, <J1+ J2+> and <J1z> in the EPR state.
struct EprCorrelations {
  double jz_jz = 0.0;
  complex jp_jp{};
  double j1z = 0.0;
};

/// Closed sums over the number index n.
inline EprCorrelations epr_correlations_closed_form(int n_per_ensemble) {
  require_qubit_count(n_per_ensemble);
  const double n = n_per_ensemble;
  EprCorrelations c;
  for (int k = 0; k <= n_per_ensemble; ++k) {
    const double m = k - 0.5 * n;
    c.jz_jz += m * m;
    c.j1z += m;
    // J+|n> = sqrt((n + 1)(N - n)) |n + 1>, squared once per ensemble
    if (k < n_per_ensemble) c.jp_jp += (k + 1.0) * (n - k);
  }
  c.jz_jz /= n + 1.0;
  c.jp_jp /= n + 1.0;
  c.j1z /= n + 1.0;
  return c;
}

/// Same correlations by contracting the operators with the state vector.
inline EprCorrelations epr_correlations_contracted(const BipartiteCollectiveVector& psi) {
  const SpinSector sector = SpinSector::symmetric(psi.n_per_ensemble);
  const auto jp = spin_matrix(sector, SpinComponent::plus);
  const auto jz = spin_matrix(sector, SpinComponent::z);

  BipartiteCollectiveVector tmp{psi.n_per_ensemble, apply_local(jz, Ensemble::second, psi)};
  const auto zz = apply_local(jz, Ensemble::first, tmp);
  tmp.amplitudes = apply_local(jp, Ensemble::second, psi);
  const auto pp = apply_local(jp, Ensemble::first, tmp);
  const auto z1 = apply_local(jz, Ensemble::first, psi);

  EprCorrelations c;
  c.jz_jz = inner(psi.amplitudes, zz).real();
  c.jp_jp = inner(psi.amplitudes, pp);
  c.j1z = inner(psi.amplitudes, z1).real();
  return c;
}

/// Cross-ensemble pair matrix diag(v, w, w, v) with corner coherence u.
struct EprPairMatrix {
  double v = 0.0;
  double w = 0.0;
  complex u{};
  int n_per_ensemble = 1;
};

inline EprPairMatrix epr_pair_matrix(int n_per_ensemble) {
  const auto closed = epr_correlations_closed_form(n_per_ensemble);
  const auto contracted = epr_correlations_contracted(epr_state(n_per_ensemble));
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); };
  if (!close(closed.jz_jz, contracted.jz_jz) || !close(closed.jp_jp.real(), contracted.jp_jp.real()) ||
      std::abs(contracted.jp_jp.imag()) > 1e-12)
    throw NumericalError("epr_pair_matrix: closed-form and contracted correlations disagree");
  // <sigma_1z> = 2 <J1z> / N must vanish for the two corners to share one v
  if (std::abs(contracted.j1z) > 1e-12 || std::abs(closed.j1z) > 1e-12)
    throw NumericalError("epr_pair_matrix: nonzero single-qubit polarization");

  const double n2 = static_cast<double>(n_per_ensemble) * n_per_ensemble;
  EprPairMatrix p;
  p.n_per_ensemble = n_per_ensemble;
  p.w = 0.25 - closed.jz_jz / n2;
  p.u = closed.jp_jp / n2;
  p.v = 0.5 * (1.0 - 2.0 * p.w);
  return p;
}

inline SymmetricPairMatrix to_symmetric_pair(const EprPairMatrix& p) {
  SymmetricPairMatrix s;
  s.v_plus = p.v;
  s.v_minus = p.v;
  s.w = p.w;
  s.u = p.u;
  s.n_source_qubits = 2 * p.n_per_ensemble;
  return s;
}

inline double epr_concurrence(const EprPairMatrix& p) { return 2.0 * std::max(0.0, std::abs(p.u) - p.w); }

}  // namespace symconc
