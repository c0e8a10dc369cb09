#pragma once

// Gibbs states of collective Heisenberg models
//
//   H = J S^2 + J (Delta - 1) S_z^2      (anisotropic; Delta = 1 isotropic, 0 XX)
//   H = J S^2 + f(S_z)                   (general, f supplied as a function of M)
//
// The spectrum is labelled by (S = N/2 - k, M) with multiplicity N_k, so every
// thermal average is a sum over O(N^2) levels instead of 2^N states. All sums
// are carried out in log space.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "symconc/collective.hpp"
#include "symconc/concurrence.hpp"
#include "symconc/pair_reduction.hpp"

namespace symconc {

struct ThermalModel {
  int n_qubits = 2;
  double coupling = 1.0;    // J > 0 antiferromagnetic, J < 0 ferromagnetic
  double anisotropy = 1.0;  // Delta; ignored when sz_function is set
  double beta = 0.0;        // 1 / T with k_B = 1
  std::function<double(double)> sz_function;  // f(M) for the general model

  static ThermalModel isotropic(int n, double coupling, double beta) {
    return ThermalModel{n, coupling, 1.0, beta, {}};
  }
  static ThermalModel anisotropic(int n, double coupling, double delta, double beta) {
    return ThermalModel{n, coupling, delta, beta, {}};
  }
  static ThermalModel general(int n, double coupling, double beta, std::function<double(double)> f) {
    return ThermalModel{n, coupling, 1.0, beta, std::move(f)};
  }
  /// Unit coupling with sign(x) and beta = |x|, so that beta J = x.
  static ThermalModel from_x(int n, double delta, double x) {
    return ThermalModel{n, x < 0.0 ? -1.0 : 1.0, delta, std::abs(x), {}};
  }

  /// Energy of a basis state in the (S, M) block.
  double energy(double s, double m) const {
    const double casimir = coupling * s * (s + 1.0);
    if (sz_function) return casimir + sz_function(m);
    return casimir + coupling * (anisotropy - 1.0) * m * m;
  }
};

inline void validate(const ThermalModel& model) {
  require_qubit_count(model.n_qubits);
  if (!std::isfinite(model.beta)) throw std::invalid_argument("thermal: beta must be finite");
  if (!std::isfinite(model.coupling)) throw std::invalid_argument("thermal: J must be finite");
  if (!model.sz_function && !std::isfinite(model.anisotropy))
    throw std::invalid_argument("thermal: Delta must be finite");
}

/// One (S, M) level with its log Boltzmann weight including log N_k.
struct ThermalLevel {
  double spin;
  double m;
  double log_weight;
};

inline std::vector<ThermalLevel> thermal_levels(const ThermalModel& model) {
  validate(model);
  const int n = model.n_qubits;
  std::vector<ThermalLevel> levels;
  for (int k = 0; k <= n / 2; ++k) {
    const SpinSector sector(n, HalfInteger::from_twice(n - 2 * k));
    const double log_mult = std::log(static_cast<double>(sector_multiplicity(n, k)));
    for (std::size_t i = 0; i < sector.dimension(); ++i) {
      const double m = sector.m_of(i);
      const double e = model.energy(sector.spin(), m);
      if (!std::isfinite(e)) throw std::invalid_argument("thermal: non-finite level energy");
      levels.push_back({sector.spin(), m, log_mult - model.beta * e});
    }
  }
  return levels;
}

namespace detail {

inline double log_sum_exp(const std::vector<ThermalLevel>& levels) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& l : levels) top = std::max(top, l.log_weight);
  double s = 0.0;
  for (const auto& l : levels) s += std::exp(l.log_weight - top);
  return top + std::log(s);
}

}  // namespace detail

/// log Z over all 2^N states.
inline double log_partition_function(const ThermalModel& model) {
  return detail::log_sum_exp(thermal_levels(model));
}

inline CollectiveMoments thermal_moments(const ThermalModel& model) {
  const auto levels = thermal_levels(model);
  const double log_z = detail::log_sum_exp(levels);
  double sz = 0.0, sz2 = 0.0, sxy2 = 0.0;
  for (const auto& l : levels) {
    const double p = std::exp(l.log_weight - log_z);
    sz += p * l.m;
    sz2 += p * l.m * l.m;
    sxy2 += p * (l.spin * (l.spin + 1.0) - l.m * l.m);
  }
  CollectiveMoments m;
  m.n_qubits = model.n_qubits;
  // An even f (or the Delta models) gives <S_z> = 0 exactly; keep the cancellation clean.
  m.sz = std::abs(sz) < 1e-15 * model.n_qubits ? 0.0 : sz;
  m.sz2 = sz2;
  m.sxy2 = sxy2;
  // H commutes with S_z, so coherences between different M vanish.
  m.sp = 0.0;
  m.sp2 = 0.0;
  m.sp_sz_anti = 0.0;
  return m;
}

inline SymmetricPairMatrix thermal_pair_matrix(const ThermalModel& model) {
  return pair_from_moments(thermal_moments(model));
}

/// Pair concurrence of the Gibbs state, from the x+- = u = 0 closed form.
inline double thermal_concurrence(const ThermalModel& model) {
  require_qubit_count(model.n_qubits, 2);
  const auto p = thermal_pair_matrix(model);
  return concurrence_xy_form(p.v_plus, p.v_minus, p.w, p.y.real());
}

/// max{0, 2|2<S_x^2+S_y^2> - N| - N^2 + 2N - 4<S_z^2>} / (2N(N-1)); requires <S_z> = 0.
inline double concurrence_from_zero_magnetization(const CollectiveMoments& m) {
  const double n = m.n_qubits;
  const double a = 2.0 * std::abs(2.0 * m.sxy2 - n) - n * n + 2.0 * n - 4.0 * m.sz2;
  return std::max(0.0, a) / (2.0 * n * (n - 1.0));
}

/// Isotropic shortcut using <S_x^2 + S_y^2> = 2<S_z^2>.
inline double isotropic_sign_quantity(const CollectiveMoments& m) {
  const double n = m.n_qubits;
  return 2.0 * std::abs(4.0 * m.sz2 - n) - n * n + 2.0 * n - 4.0 * m.sz2;
}

inline double isotropic_concurrence_shortcut(const CollectiveMoments& m) {
  const double n = m.n_qubits;
  return std::max(0.0, isotropic_sign_quantity(m)) / (2.0 * n * (n - 1.0));
}

/// Boundary in x = beta J where the pair concurrence of the (N, Delta) model
/// switches on or off inside [lo, hi].
///
/// A 200-point scan brackets every change of the entangled flag (C > 1e-12);
/// the bracket whose entangled end lies furthest from x = 0 is refined by
/// bisection to 1e-6.
inline double critical_x(int n_qubits, double delta, double lo, double hi) {
  require_qubit_count(n_qubits, 2);
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("critical_x: need a finite interval lo < hi");
  constexpr int kScan = 200;
  constexpr double kEntangled = 1e-12;
  auto entangled = [&](double x) {
    return thermal_concurrence(ThermalModel::from_x(n_qubits, delta, x)) > kEntangled;
  };

  std::vector<double> xs(kScan);
  std::vector<bool> flags(kScan);
  for (int i = 0; i < kScan; ++i) {
    xs[i] = lo + (hi - lo) * i / (kScan - 1);
    flags[i] = entangled(xs[i]);
  }

  int best = -1;
  double best_reach = -1.0;
  for (int i = 0; i + 1 < kScan; ++i) {
    if (flags[i] == flags[i + 1]) continue;
    const double reach = std::abs(flags[i] ? xs[i] : xs[i + 1]);
    if (reach > best_reach) {
      best_reach = reach;
      best = i;
    }
  }
  if (best < 0)
    throw std::invalid_argument("critical_x: concurrence does not change sign in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");

  double a = xs[best], b = xs[best + 1];
  const bool flag_a = flags[best];
  while (b - a > 1e-6) {
    const double mid = 0.5 * (a + b);
    (entangled(mid) == flag_a ? a : b) = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace symconc
