#pragma once

// Oracle-equivalence suites shared by the CLI `verify` command and the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "symconc/collective.hpp"
#include "symconc/concurrence.hpp"
#include "symconc/epr.hpp"
#include "symconc/oracle.hpp"
#include "symconc/pair_reduction.hpp"
#include "symconc/states.hpp"
#include "symconc/thermal.hpp"

namespace symconc {

enum class VerifyLevel { quick, full };

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::string failure;  // first exception message, if any

  bool passed() const { return failure.empty() && max_deviation <= tolerance; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
  }
};

/// Moments -> pair matrix map under test; replaceable so that a deliberately
/// broken reduction can be shown to fail the suites.
using PairBuilder = std::function<SymmetricPairMatrix(const CollectiveMoments&)>;

namespace detail {

class SuiteRecorder {
 public:
  SuiteRecorder(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  template <typename Fn>
  void run_case(Fn&& fn) {
    ++result_.cases;
    try {
      result_.max_deviation = std::max(result_.max_deviation, fn());
    } catch (const std::exception& e) {
      if (result_.failure.empty()) result_.failure = e.what();
      result_.max_deviation = std::numeric_limits<double>::infinity();
    }
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline std::vector<CollectiveVector> pure_family_samples(int n) {
  std::vector<CollectiveVector> out;
  for (double eta : {-2.0, -0.5, 0.0, 0.3, 1.0, 2.5}) out.push_back(spin_coherent(n, {eta}));
  for (int t = -n; t <= n; t += 2) out.push_back(dicke_state(n, HalfInteger::from_twice(t)));
  if (n >= 2)
    for (int i = 0; i <= 12; ++i) out.push_back(twisted_state({2.0 * std::numbers::pi * i / 12.0, n}));
  return out;
}

inline double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace detail

inline VerifyReport run_verification(VerifyLevel level, const PairBuilder& build = pair_from_moments) {
  const bool full = level == VerifyLevel::full;
  const int pure_max = full ? 8 : 5;
  const int thermal_max = full ? 8 : 5;
  const int epr_oracle_max = full ? 6 : 4;
  VerifyReport report;

  {
    detail::SuiteRecorder moments("moments vs Pauli sums", 1e-10);
    detail::SuiteRecorder pairs("pair matrix vs partial trace", 1e-10);
    detail::SuiteRecorder conc("concurrence vs oracle", 1e-9);
    for (int n = 2; n <= pure_max; ++n) {
      for (const auto& v : detail::pure_family_samples(n)) {
        const auto full_state = oracle::symmetrized_full_state(v);
        const Eigen::Matrix4cd traced = oracle::partial_trace_pair(full_state, 0, 1);
        moments.run_case([&] {
          const auto a = moments_of_vector(v);
          const auto b = oracle::pauli_sum_moments(full_state);
          return std::max({std::abs(a.sz - b.sz), std::abs(a.sz2 - b.sz2), std::abs(a.sp - b.sp),
                           std::abs(a.sp2 - b.sp2), std::abs(a.sxy2 - b.sxy2),
                           std::abs(a.sp_sz_anti - b.sp_sz_anti)});
        });
        pairs.run_case([&] {
          return max_abs_diff(assemble_dense(build(moments_of_vector(v))), oracle::to_dense(traced));
        });
        conc.run_case([&] {
          const double a = wootters_general(build(moments_of_vector(v))).concurrence;
          const double b = wootters_general(oracle::to_dense(traced)).concurrence;
          return std::abs(a - b);
        });
      }
    }
    report.suites.push_back(moments.finish());
    report.suites.push_back(pairs.finish());
    report.suites.push_back(conc.finish());
  }

  {
    detail::SuiteRecorder twist("twist closed form vs evolution", 1e-10);
    for (int n = 2; n <= (full ? 12 : 6); ++n)
      for (int i = 0; i < (full ? 100 : 25); ++i) {
        const TwistParam p{2.0 * std::numbers::pi * i / (full ? 100.0 : 25.0), n};
        twist.run_case([&] {
          const auto a = twist_moments(p);
          const auto b = moments_of_vector(twisted_state(p));
          return std::max({std::abs(a.sz - b.sz), std::abs(a.sz2 - b.sz2), std::abs(a.sp2 - b.sp2),
                           std::abs(a.sxy2 - b.sxy2), std::abs(a.sp - b.sp),
                           std::abs(a.sp_sz_anti - b.sp_sz_anti)});
        });
      }
    report.suites.push_back(twist.finish());
  }

  {
    detail::SuiteRecorder closed("closed forms vs general Wootters", 1e-9);
    for (int n = 2; n <= (full ? 12 : 8); ++n) {
      for (int t = -n; t <= n; t += 2) {
        closed.run_case([&] {
          const auto m = HalfInteger::from_twice(t);
          const auto p = build(moments_of_vector(dicke_state(n, m)));
          const double general = wootters_general(p).concurrence;
          return std::max(std::abs(dicke_concurrence(n, m) - general),
                          std::abs(concurrence_xy_form(p.v_plus, p.v_minus, p.w, p.y.real()) - general));
        });
      }
      for (int i = 0; i <= 24; ++i) {
        closed.run_case([&] {
          const auto p = build(twist_moments({2.0 * std::numbers::pi * i / 24.0, n}));
          return std::abs(concurrence_xu_form(p.v_plus, p.v_minus, p.w, p.u) -
                          wootters_general(p).concurrence);
        });
      }
    }
    report.suites.push_back(closed.finish());
  }

  {
    detail::SuiteRecorder thermal("thermal vs exact diagonalization", 1e-9);
    const int grid = full ? 21 : 11;
    for (int n = 2; n <= thermal_max; ++n)
      for (double delta : {0.0, 0.5, 1.0, 2.0})
        for (double sign : {-1.0, 1.0}) {
          const oracle::ThermalSpectrum spectrum(ThermalModel::anisotropic(n, sign, delta, 1.0));
          for (int i = 0; i < grid; ++i) {
            const double beta = 5.0 * i / (grid - 1);
            thermal.run_case([&] {
              const auto model = ThermalModel::anisotropic(n, sign, delta, beta);
              const auto gibbs = spectrum.gibbs(beta);
              const auto m = thermal_moments(model);
              const auto om = oracle::pauli_sum_moments(gibbs);
              const Eigen::Matrix4cd traced = oracle::partial_trace_pair(gibbs, 0, 1);
              return std::max({detail::relative_gap(log_partition_function(model), spectrum.log_partition(beta)),
                               std::abs(m.sz2 - om.sz2), std::abs(m.sxy2 - om.sxy2),
                               max_abs_diff(assemble_dense(build(m)), oracle::to_dense(traced)),
                               std::abs(thermal_concurrence(model) -
                                        wootters_general(oracle::to_dense(traced)).concurrence)});
            });
          }
        }
    report.suites.push_back(thermal.finish());
  }

  {
    detail::SuiteRecorder epr("EPR pair vs oracle", 1e-10);
    for (int n = 1; n <= 30; ++n)
      epr.run_case([&] { return std::abs(epr_concurrence(epr_pair_matrix(n)) * n - 1.0); });
    for (int n = 1; n <= epr_oracle_max; ++n)
      epr.run_case([&] {
        const auto traced = oracle::partial_trace_pair(oracle::epr_full_state(n), 0, n);
        return max_abs_diff(assemble_dense(to_symmetric_pair(epr_pair_matrix(n))), oracle::to_dense(traced));
      });
    report.suites.push_back(epr.finish());
  }

  return report;
}

}  // namespace symconc
