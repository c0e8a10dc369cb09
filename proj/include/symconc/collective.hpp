#pragma once

// Collective spin basis |S, M> for N qubits.
//
// Conventions shared by every header in this library:
//  * qubit state |0> is spin up (sigma_z |0> = +|0>), sigma_+ = |0><1|;
//  * sector amplitudes are indexed by n = M + S, so for the top sector n is
//    the number of qubits in |0> and |n>_N = |N/2, n - N/2>;
//  * ladder matrix elements are real and positive (Condon-Shortley).

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symconc/linalg.hpp"

namespace symconc {

/// Largest qubit count accepted anywhere exact integer multiplicities are needed.
inline constexpr int kMaxQubits = 60;

/// Half-integer stored as twice its value so that arithmetic stays exact.
struct HalfInteger {
  int twice = 0;

  static constexpr HalfInteger from_twice(int t) { return HalfInteger{t}; }

  /// Accepts only exact multiples of 1/2.
  static HalfInteger from_double(double x) {
    const double t = 2.0 * x;
    const double r = std::round(t);
    if (!std::isfinite(x) || std::abs(t - r) > 1e-9 || std::abs(r) > 1e6)
      throw std::invalid_argument("HalfInteger: " + std::to_string(x) + " is not a multiple of 1/2");
    return HalfInteger{static_cast<int>(r)};
  }

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger a, HalfInteger b) { return a.twice <=> b.twice; }
};

inline void require_qubit_count(int n_qubits, int minimum = 1) {
  if (n_qubits < minimum)
    throw std::invalid_argument("n_qubits must be >= " + std::to_string(minimum) + ", got " +
                                std::to_string(n_qubits));
  if (n_qubits > kMaxQubits)
    throw std::invalid_argument("n_qubits must be <= " + std::to_string(kMaxQubits) + ", got " +
                                std::to_string(n_qubits));
}

/// One irreducible spin-S block of N qubits.
class SpinSector {
 public:
  SpinSector(int n_qubits, HalfInteger total_spin) : n_qubits_(n_qubits), total_spin_(total_spin) {
    require_qubit_count(n_qubits);
    const int gap = n_qubits - total_spin.twice;  // = 2 (N/2 - S)
    if (total_spin.twice < 0 || gap < 0 || gap % 2 != 0)
      throw std::invalid_argument("SpinSector: S = " + std::to_string(total_spin.value()) +
                                  " is not a spin of " + std::to_string(n_qubits) + " qubits");
  }

  /// The fully symmetric sector S = N/2.
  static SpinSector symmetric(int n_qubits) { return {n_qubits, HalfInteger::from_twice(n_qubits)}; }

  int n_qubits() const { return n_qubits_; }
  HalfInteger total_spin() const { return total_spin_; }
  double spin() const { return total_spin_.value(); }
  std::size_t dimension() const { return static_cast<std::size_t>(total_spin_.twice) + 1; }
  bool is_symmetric() const { return total_spin_.twice == n_qubits_; }

  /// M value of basis index n.
  double m_of(std::size_t n) const { return static_cast<double>(n) - spin(); }

  friend bool operator==(const SpinSector&, const SpinSector&) = default;

 private:
  int n_qubits_;
  HalfInteger total_spin_;
};

/// Normalized pure state inside one sector, amplitudes indexed by n = M + S.
class CollectiveVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  CollectiveVector(SpinSector sector, std::vector<complex> amplitudes)
      : sector_(sector), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != sector_.dimension())
      throw std::invalid_argument("CollectiveVector: expected " + std::to_string(sector_.dimension()) +
                                  " amplitudes, got " + std::to_string(amplitudes_.size()));
    const double norm2 = inner(amplitudes_, amplitudes_).real();
    if (std::abs(norm2 - 1.0) > kNormTolerance)
      throw std::invalid_argument("CollectiveVector: squared norm " + std::to_string(norm2) +
                                  " differs from 1");
  }

  const SpinSector& sector() const { return sector_; }
  const std::vector<complex>& amplitudes() const { return amplitudes_; }
  int n_qubits() const { return sector_.n_qubits(); }

 private:
  SpinSector sector_;
  std::vector<complex> amplitudes_;
};

/// Collective expectation values feeding the two-qubit reduction.
/// <S_x^2 - S_y^2> and <[S_x, S_y]_+> live in sp2 as its real and imaginary parts.
struct CollectiveMoments {
  int n_qubits = 0;
  double sz = 0.0;          // <S_z>
  double sz2 = 0.0;         // <S_z^2>
  complex sp{};             // <S_+>
  complex sp2{};            // <S_+^2>
  double sxy2 = 0.0;        // <S_x^2 + S_y^2>
  complex sp_sz_anti{};     // <S_+ S_z + S_z S_+>

  double sx_minus_sy2() const { return sp2.real(); }
  double sx_sy_anti() const { return sp2.imag(); }
};

enum class SpinComponent { x, y, z, plus, minus };

inline ComplexMatrix spin_matrix(const SpinSector& sector, SpinComponent which) {
  const std::size_t dim = sector.dimension();
  const double s = sector.spin();
  ComplexMatrix out(dim, dim);

  // <M+1| S_+ |M> for M = m_of(n), stored at (n+1, n)
  auto raise = [&](std::size_t n) {
    const double m = sector.m_of(n);
    return std::sqrt(std::max(0.0, s * (s + 1.0) - m * (m + 1.0)));
  };

  switch (which) {
    case SpinComponent::z:
      for (std::size_t n = 0; n < dim; ++n) out(n, n) = sector.m_of(n);
      break;
    case SpinComponent::plus:
      for (std::size_t n = 0; n + 1 < dim; ++n) out(n + 1, n) = raise(n);
      break;
    case SpinComponent::minus:
      for (std::size_t n = 0; n + 1 < dim; ++n) out(n, n + 1) = raise(n);
      break;
    case SpinComponent::x:
      for (std::size_t n = 0; n + 1 < dim; ++n) {
        out(n + 1, n) = 0.5 * raise(n);
        out(n, n + 1) = 0.5 * raise(n);
      }
      break;
    case SpinComponent::y:
      // S_y = (S_+ - S_-) / 2i
      for (std::size_t n = 0; n + 1 < dim; ++n) {
        out(n + 1, n) = complex(0.0, -0.5 * raise(n));
        out(n, n + 1) = complex(0.0, 0.5 * raise(n));
      }
      break;
  }
  return out;
}

namespace detail {

inline double hermitian_expectation(const std::vector<complex>& psi, const ComplexMatrix& op,
                                    const char* name) {
  const complex e = inner(psi, op.apply(psi));
  if (std::abs(e.imag()) > 1e-10)
    throw NumericalError(std::string("moments: expectation of Hermitian operator ") + name +
                         " has imaginary part " + std::to_string(e.imag()));
  return e.real();
}

}  // namespace detail

/// Direct expectation values <psi|O|psi> in the top sector.
inline CollectiveMoments moments_of_vector(const CollectiveVector& state) {
  const SpinSector& sector = state.sector();
  if (!sector.is_symmetric())
    throw std::invalid_argument("moments_of_vector: state must lie in the S = N/2 sector");

  const auto& psi = state.amplitudes();
  const ComplexMatrix sz = spin_matrix(sector, SpinComponent::z);
  const ComplexMatrix sp = spin_matrix(sector, SpinComponent::plus);

  CollectiveMoments m;
  m.n_qubits = sector.n_qubits();
  m.sz = detail::hermitian_expectation(psi, sz, "S_z");
  m.sz2 = detail::hermitian_expectation(psi, sz * sz, "S_z^2");
  // S^2 = S(S+1) on the whole sector
  m.sxy2 = sector.spin() * (sector.spin() + 1.0) - m.sz2;
  m.sp = inner(psi, sp.apply(psi));
  m.sp2 = inner(psi, (sp * sp).apply(psi));
  m.sp_sz_anti = inner(psi, (sp * sz + sz * sp).apply(psi));
  return m;
}

/// Exact binomial coefficient; C(n, k) = 0 outside 0 <= k <= n.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n > kMaxQubits) throw std::invalid_argument("binomial: n exceeds exact range");
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

/// Number of spin-(N/2 - k) irreducible blocks among N qubits:
/// N_k = C(N, k) - C(N, k - 1).
inline std::uint64_t sector_multiplicity(int n_qubits, int k) {
  require_qubit_count(n_qubits);
  if (k < 0 || k > n_qubits / 2)
    throw std::invalid_argument("sector_multiplicity: k = " + std::to_string(k) +
                                " outside [0, " + std::to_string(n_qubits / 2) + "]");
  return binomial(n_qubits, k) - binomial(n_qubits, k - 1);
}

}  // namespace symconc
