// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every tolerance and runtime budget is pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "symconc/oracle.hpp"
#include "symconc/symconc.hpp"
#include "symconc/verify.hpp"
#include "test_support.hpp"

using namespace symconc;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  double max_dev = 0.0;
  std::string note;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
  void deviation(double dev, double tol, const std::string& what) {
    max_dev = std::max(max_dev, dev);
    check(dev <= tol, what);
  }
};

int failures = 0;

void report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) o.check(false, "runtime " + std::to_string(secs) + " s over budget");
  std::printf("[%s] %d %-40s max_dev=%.3e time=%.2fs/%.0fs%s%s\n", o.ok ? "PASS" : "FAIL", id, title, o.max_dev, secs,
              budget_s, o.note.empty() ? "" : "  ", o.note.c_str());
  if (!o.ok) ++failures;
}

std::string at(const char* what, int n, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s N=%d p=%g", what, n, v);
  return buf;
}

double twist_concurrence(int n, double mu) {
  const auto p = pair_from_moments(twist_moments({mu, n}));
  return concurrence_xu_form(p.v_plus, p.v_minus, p.w, p.u);
}

}  // namespace

int main() {
  report(1, "Dicke closed form", 1.0, [] {
    Outcome o;
    constexpr double kTol = 1e-12;
    for (int n = 2; n <= 30; ++n) {
      if (n % 2 == 0) {
        o.deviation(std::abs(dicke_concurrence(n, HalfInteger::from_twice(0)) - 1.0 / (n - 1)), kTol, at("M=0", n, 0));
      } else {
        // odd N has no M = 0 level; the pair must be rejected
        bool rejected = false;
        try {
          dicke_concurrence(n, HalfInteger::from_twice(0));
        } catch (const std::invalid_argument&) {
          rejected = true;
        }
        o.check(rejected, at("odd N accepted M=0", n, 0));
      }
      for (int s : {-1, 1}) {
        o.deviation(std::abs(dicke_concurrence(n, HalfInteger::from_twice(s * (n - 2))) - 2.0 / n), kTol,
                    at("M=+-(N/2-1)", n, s));
        o.deviation(std::abs(dicke_concurrence(n, HalfInteger::from_twice(s * n))), kTol, at("M=+-N/2", n, s));
      }
    }
    return o;
  });

  report(2, "spin coherent separability", 5.0, [] {
    Outcome o;
    constexpr double kTol = 1e-10;
    for (int n = 2; n <= 10; ++n)
      for (double eta : {-2.0, -0.5, 0.0, 0.3, 1.0, 2.5}) {
        const auto v = spin_coherent(n, {eta});
        o.deviation(wootters_general(pair_from_moments(moments_of_vector(v))).concurrence, kTol, at("general", n, eta));
        o.deviation(oracle::pair_entanglement(oracle::symmetrized_full_state(v)).concurrence, kTol,
                    at("oracle", n, eta));
      }
    return o;
  });

  report(3, "twist symmetry and GHZ zeros", 5.0, [] {
    Outcome o;
    for (int n = 3; n <= 7; ++n) {
      for (int i = 0; i < 101; ++i) {
        const double mu = 2.0 * kPi * i / 100.0;
        o.deviation(std::abs(twist_concurrence(n, mu) - twist_concurrence(n, 2.0 * kPi - mu)), 1e-9,
                    at("C(mu) != C(2pi-mu)", n, mu));
      }
      o.deviation(twist_concurrence(n, kPi), 1e-10, at("C(pi)", n, kPi));
    }
    return o;
  });

  report(4, "oracle equivalence, pure families", 30.0, [] {
    Outcome o;
    for (int n = 2; n <= 8; ++n)
      for (const auto& v : detail::pure_family_samples(n)) {
        const auto traced = oracle::to_dense(oracle::partial_trace_pair(oracle::symmetrized_full_state(v), 0, 1));
        const auto p = pair_from_moments(moments_of_vector(v));
        o.deviation(max_abs_diff(assemble_dense(p), traced), 1e-10, at("matrix", n, 0));
        o.deviation(std::abs(wootters_general(p).concurrence - wootters_general(traced).concurrence), 1e-9,
                    at("concurrence", n, 0));
      }
    return o;
  });

  report(5, "isotropic thermal separability", 10.0, [] {
    Outcome o;
    for (int n = 3; n <= 12; ++n)
      for (int i = 0; i < 101; ++i) {
        const double bj = -5.0 + 10.0 * i / 100.0;
        for (double j : {-1.3, 1.3}) {
          const auto model = ThermalModel::isotropic(n, j, bj / j);
          o.deviation(thermal_concurrence(model), 0.0, at("C", n, bj));
          o.check(isotropic_sign_quantity(thermal_moments(model)) <= 1e-10, at("A > 1e-10", n, bj));
        }
      }
    return o;
  });

  report(6, "XX model structure", 60.0, [] {
    Outcome o;
    for (int i = 0; i <= 100; ++i) {
      const double x = 5.0 * i / 100.0;
      o.deviation(std::abs(thermal_concurrence(ThermalModel::from_x(2, 0.0, x)) -
                           thermal_concurrence(ThermalModel::from_x(2, 0.0, -x))),
                  1e-9, at("N=2 symmetry", 2, x));
    }
    for (int n = 3; n <= 8; ++n) {
      double best_negative = 0.0;
      for (int i = 1; i <= 200; ++i) {
        const double x = 10.0 * i / 200.0;
        o.deviation(thermal_concurrence(ThermalModel::from_x(n, 0.0, x)), 0.0, at("C>0 at x>0", n, x));
        best_negative = std::max(best_negative, thermal_concurrence(ThermalModel::from_x(n, 0.0, -x)));
      }
      o.check(best_negative > 0.0, at("no entanglement for x<0", n, 0));
      const oracle::ThermalSpectrum spectrum(ThermalModel::anisotropic(n, -1.0, 0.0, 1.0));
      const oracle::ThermalSpectrum spectrum_af(ThermalModel::anisotropic(n, 1.0, 0.0, 1.0));
      for (int i = 0; i <= 20; ++i) {
        const double x = -5.0 + 10.0 * i / 20.0;
        const auto model = ThermalModel::from_x(n, 0.0, x);
        const auto gibbs = (x < 0.0 ? spectrum : spectrum_af).gibbs(std::abs(x));
        o.deviation(std::abs(thermal_concurrence(model) - oracle::pair_entanglement(gibbs).concurrence), 1e-9,
                    at("oracle", n, x));
      }
    }
    std::vector<double> xc;
    std::string thresholds;
    for (int n : {5, 15, 25}) {
      xc.push_back(critical_x(n, 0.0, -10.0, 0.0));
      thresholds += (thresholds.empty() ? "x_c(5,15,25) = " : ", ") + std::to_string(xc.back());
    }
    const bool abs_increasing = std::abs(xc[0]) < std::abs(xc[1]) && std::abs(xc[1]) < std::abs(xc[2]);
    const bool signed_increasing = xc[0] < xc[1] && xc[1] < xc[2];
    o.check(abs_increasing, "critical |x| not strictly increasing");
    o.note += (o.note.empty() ? "" : "; ") + thresholds +
              (signed_increasing ? " (signed x_c increasing)" : " (signed x_c not increasing)");
    return o;
  });

  report(7, "EPR concurrence and constraints", 5.0, [] {
    Outcome o;
    for (int n = 1; n <= 30; ++n)
      o.deviation(std::abs(epr_concurrence(epr_pair_matrix(n)) - 1.0 / n), 1e-10, at("C", n, 0));
    for (int n = 1; n <= 10; ++n) {
      const auto r = epr_constraint_residuals(epr_state(n));
      o.deviation(std::max({r.plus_minus, r.minus_plus, r.z}), 1e-12, at("residual", n, 0));
    }
    return o;
  });

  report(8, "Wootters self-consistency", 10.0, [] {
    Outcome o;
    std::mt19937_64 rng(20021);
    for (int k = 0; k < 1000; ++k) {
      const auto rho = testing::random_density_matrix(rng, 1 + k % 4);
      const auto u = testing::kron(testing::random_qubit_unitary(rng), testing::random_qubit_unitary(rng));
      const double c = wootters_general(rho).concurrence;
      o.deviation(std::abs(c - wootters_general(u * rho * u.adjoint()).concurrence), 1e-8, at("LU", 0, k));
      o.check(c >= 0.0 && c <= 1.0, at("range", 0, c));

      const auto xy = testing::random_xy_structure(rng);
      o.deviation(std::abs(concurrence_xy_form(xy.v_plus, xy.v_minus, xy.w, xy.y.real()) -
                           wootters_general(xy).concurrence),
                  1e-9, at("xy form", 0, k));
      const auto xu = testing::random_xu_structure(rng);
      o.deviation(std::abs(concurrence_xu_form(xu.v_plus, xu.v_minus, xu.w, xu.u) - wootters_general(xu).concurrence),
                  1e-9, at("xu form", 0, k));
    }
    return o;
  });

  report(9, "verify --level quick", 10.0, [] {
    Outcome o;
    const auto r = run_verification(VerifyLevel::quick);
    for (const auto& s : r.suites) {
      o.max_dev = std::max(o.max_dev, s.max_deviation);
      o.check(s.passed(), "suite failed: " + s.name);
    }
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
