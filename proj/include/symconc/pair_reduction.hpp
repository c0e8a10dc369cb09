#pragma once

// Two-qubit reduced density matrix of an exchange-symmetric state.
//
// Basis order |00>, |01>, |10>, |11>; layout
//
//   [ v+   x+*  x+*  u*  ]
//   [ x+   w    y*   x-* ]
//   [ x+   y    w    x-* ]
//   [ u    x-   x-   v-  ]

#include <cmath>
#include <stdexcept>
#include <string>

#include "symconc/collective.hpp"
#include "symconc/linalg.hpp"

namespace symconc {

struct SymmetricPairMatrix {
  double v_plus = 0.0;
  double v_minus = 0.0;
  complex x_plus{};
  complex x_minus{};
  double w = 0.0;
  complex y{};
  complex u{};
  int n_source_qubits = 2;

  double trace() const { return v_plus + v_minus + 2.0 * w; }
};

inline ComplexMatrix assemble_dense(const SymmetricPairMatrix& p) {
  ComplexMatrix r(4, 4);
  r(0, 0) = p.v_plus;
  r(0, 1) = std::conj(p.x_plus);
  r(0, 2) = std::conj(p.x_plus);
  r(0, 3) = std::conj(p.u);
  r(1, 0) = p.x_plus;
  r(1, 1) = p.w;
  r(1, 2) = std::conj(p.y);
  r(1, 3) = std::conj(p.x_minus);
  r(2, 0) = p.x_plus;
  r(2, 1) = p.y;
  r(2, 2) = p.w;
  r(2, 3) = std::conj(p.x_minus);
  r(3, 0) = p.u;
  r(3, 1) = p.x_minus;
  r(3, 2) = p.x_minus;
  r(3, 3) = p.v_minus;
  return r;
}

/// Smallest eigenvalue of the assembled matrix.
inline double min_eigenvalue(const SymmetricPairMatrix& p) {
  return jacobi_eigen(assemble_dense(p)).values.front();
}

/// Throws NumericalError unless trace is 1 and the spectrum is >= -tol * trace.
/// Nothing is clamped.
inline void check_pair_matrix(const SymmetricPairMatrix& p, double tol = 1e-10) {
  const double tr = p.trace();
  if (std::abs(tr - 1.0) > tol)
    throw NumericalError("pair matrix trace " + std::to_string(tr) + " differs from 1");
  const double lo = min_eigenvalue(p);
  if (lo < -tol * std::abs(tr))
    throw NumericalError("pair matrix is not positive semidefinite (min eigenvalue " +
                         std::to_string(lo) + ")");
}

/// Reduced pair matrix from collective moments; valid for any exchange-symmetric
/// N-qubit state, pure or mixed over sectors.
inline SymmetricPairMatrix pair_from_moments(const CollectiveMoments& m) {
  const int n_qubits = m.n_qubits;
  if (n_qubits < 2)
    throw std::invalid_argument("pair_from_moments: need at least 2 qubits, got " +
                                std::to_string(n_qubits));
  const double n = n_qubits;
  const double nn1 = n * (n - 1.0);

  SymmetricPairMatrix p;
  p.n_source_qubits = n_qubits;
  p.v_plus = (n * n - 2.0 * n + 4.0 * m.sz2 + 4.0 * m.sz * (n - 1.0)) / (4.0 * nn1);
  p.v_minus = (n * n - 2.0 * n + 4.0 * m.sz2 - 4.0 * m.sz * (n - 1.0)) / (4.0 * nn1);
  p.x_plus = ((n - 1.0) * m.sp + m.sp_sz_anti) / (2.0 * nn1);
  p.x_minus = ((n - 1.0) * m.sp - m.sp_sz_anti) / (2.0 * nn1);
  p.w = (n * n - 4.0 * m.sz2) / (4.0 * nn1);
  p.y = complex((2.0 * m.sxy2 - n) / (2.0 * nn1), 0.0);
  p.u = m.sp2 / nn1;

  if (std::abs(p.y.imag()) > 1e-10)
    throw NumericalError("pair_from_moments: y must be real for a symmetric state");
  check_pair_matrix(p);
  return p;
}

/// One- and two-site Pauli expectations of a symmetric pair; the one-site
/// values are shared by both qubits.
struct PauliExpectations {
  double x = 0.0, y = 0.0, z = 0.0;
  double xx = 0.0, xy = 0.0, xz = 0.0;
  double yx = 0.0, yy = 0.0, yz = 0.0;
  double zx = 0.0, zy = 0.0, zz = 0.0;
};

inline SymmetricPairMatrix pauli_pair_matrix(const PauliExpectations& e) {
  const complex sigma_plus(0.5 * e.x, 0.5 * e.y);        // <s1+>
  const complex sigma_plus_z(0.5 * e.xz, 0.5 * e.yz);    // <s1+ s2z>

  SymmetricPairMatrix p;
  p.v_plus = 0.25 * (1.0 + 2.0 * e.z + e.zz);
  p.v_minus = 0.25 * (1.0 - 2.0 * e.z + e.zz);
  p.x_plus = 0.5 * (sigma_plus + sigma_plus_z);
  p.x_minus = 0.5 * (sigma_plus - sigma_plus_z);
  p.w = 0.25 * (1.0 - e.zz);
  // <s1+ s2-> = (xx + yy + i(yx - xy)) / 4
  p.y = complex(0.25 * (e.xx + e.yy), 0.25 * (e.yx - e.xy));
  p.u = complex(0.25 * (e.xx - e.yy), 0.5 * e.xy);

  if (std::abs(p.y.imag()) > 1e-10)
    throw std::invalid_argument("pauli_pair_matrix: expectations are not exchange symmetric");
  check_pair_matrix(p);
  return p;
}

}  // namespace symconc
