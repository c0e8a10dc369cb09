#include <gtest/gtest.h>

#include <cmath>

#include "symconc/thermal.hpp"

namespace symconc {
namespace {

TEST(ThermalLevels, CountAllBasisStates) {
  for (int n = 1; n <= 20; ++n) {
    const auto levels = thermal_levels(ThermalModel::isotropic(n, 1.0, 0.0));
    double total = 0.0;
    for (const auto& l : levels) total += std::exp(l.log_weight);
    EXPECT_NEAR(total, std::ldexp(1.0, n), 1e-9 * std::ldexp(1.0, n));
  }
}

TEST(ThermalModel, EnergyOfAnisotropicAndGeneralModels) {
  const auto aniso = ThermalModel::anisotropic(4, 2.0, 0.5, 1.0);
  EXPECT_DOUBLE_EQ(aniso.energy(2.0, 1.0), 2.0 * 6.0 + 2.0 * (0.5 - 1.0) * 1.0);
  const auto gen = ThermalModel::general(4, 1.0, 1.0, [](double m) { return 3.0 * m; });
  EXPECT_DOUBLE_EQ(gen.energy(1.0, -1.0), 2.0 - 3.0);
  const auto fx = ThermalModel::from_x(3, 0.0, -2.5);
  EXPECT_EQ(fx.coupling, -1.0);
  EXPECT_EQ(fx.beta, 2.5);
}

TEST(ThermalModel, RejectsNonFiniteParameters) {
  EXPECT_THROW(thermal_levels(ThermalModel::isotropic(3, 1.0, INFINITY)), std::invalid_argument);
  EXPECT_THROW(thermal_levels(ThermalModel::anisotropic(3, 1.0, NAN, 1.0)), std::invalid_argument);
  EXPECT_THROW(thermal_levels(ThermalModel::isotropic(0, 1.0, 1.0)), std::invalid_argument);
  EXPECT_THROW(thermal_concurrence(ThermalModel::isotropic(1, 1.0, 1.0)), std::invalid_argument);
}

TEST(ThermalConcurrence, InfiniteTemperatureIsSeparable) {
  for (int n = 2; n <= 10; ++n) {
    const auto p = thermal_pair_matrix(ThermalModel::anisotropic(n, 1.0, 0.3, 0.0));
    EXPECT_NEAR(p.v_plus, 0.25, 1e-14);
    EXPECT_NEAR(p.w, 0.25, 1e-14);
    EXPECT_NEAR(p.y.real(), 0.0, 1e-14);
    EXPECT_EQ(thermal_concurrence(ThermalModel::anisotropic(n, 1.0, 0.3, 0.0)), 0.0);
  }
}

TEST(ThermalConcurrence, TwoQubitHeisenbergWernerForm) {
  // singlet at 0, triplet at 2J; C = max(0, (1 - 3 e^{-2x}) / (1 + 3 e^{-2x}))
  for (int i = -50; i <= 50; ++i) {
    const double x = i / 10.0;
    const double b = 3.0 * std::exp(-2.0 * x);
    EXPECT_NEAR(thermal_concurrence(ThermalModel::from_x(2, 1.0, x)), std::max(0.0, (1.0 - b) / (1.0 + b)), 1e-12)
        << x;
  }
}

TEST(ThermalConcurrence, IsotropicModelIsSeparableBeyondTwoQubits) {
  for (int n = 3; n <= 12; ++n)
    for (int i = -50; i <= 50; ++i) {
      const auto model = ThermalModel::from_x(n, 1.0, i / 10.0);
      const auto m = thermal_moments(model);
      EXPECT_EQ(thermal_concurrence(model), 0.0);
      EXPECT_LE(isotropic_sign_quantity(m), 1e-10);
      EXPECT_NEAR(m.sxy2, 2.0 * m.sz2, 1e-9 * n * n);
    }
}

TEST(ThermalConcurrence, ShortcutsAgreeWithPairRoute) {
  for (int n = 2; n <= 9; ++n)
    for (double delta : {0.0, 0.5, 1.0, 1.7})
      for (int i = -20; i <= 20; ++i) {
        const auto model = ThermalModel::from_x(n, delta, i / 4.0);
        const auto m = thermal_moments(model);
        EXPECT_EQ(m.sz, 0.0);
        EXPECT_NEAR(concurrence_from_zero_magnetization(m), thermal_concurrence(model), 1e-12);
        if (delta == 1.0) EXPECT_NEAR(isotropic_concurrence_shortcut(m), thermal_concurrence(model), 1e-12);
      }
}

TEST(ThermalConcurrence, StableAtLargeCoupling) {
  for (int n : {2, 5, 20, 60})
    for (double x : {-500.0, -50.0, 50.0, 500.0}) {
      const auto model = ThermalModel::from_x(n, 0.0, x);
      const double c = thermal_concurrence(model);
      EXPECT_TRUE(std::isfinite(c));
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
      EXPECT_TRUE(std::isfinite(log_partition_function(model)));
    }
}

TEST(ThermalConcurrence, XxModelEntangledOnlyForFerromagneticSign) {
  for (int n = 3; n <= 8; ++n) {
    double max_c = 0.0;
    for (int i = 1; i <= 100; ++i) {
      EXPECT_EQ(thermal_concurrence(ThermalModel::from_x(n, 0.0, 0.05 * i)), 0.0);
      max_c = std::max(max_c, thermal_concurrence(ThermalModel::from_x(n, 0.0, -0.05 * i)));
    }
    EXPECT_GT(max_c, 1e-3) << n;
  }
}

TEST(ThermalConcurrence, TwoQubitXxSymmetricInX) {
  for (int i = 0; i <= 50; ++i) {
    const double x = i / 10.0;
    EXPECT_NEAR(thermal_concurrence(ThermalModel::from_x(2, 0.0, x)),
                thermal_concurrence(ThermalModel::from_x(2, 0.0, -x)), 1e-12);
  }
}

TEST(ThermalMoments, OddLinearTermMagnetizes) {
  const auto model = ThermalModel::general(5, 1.0, 1.5, [](double m) { return 0.8 * m; });
  const auto m = thermal_moments(model);
  EXPECT_LT(m.sz, -0.1);
  const auto mirrored = thermal_moments(ThermalModel::general(5, 1.0, 1.5, [](double m) { return -0.8 * m; }));
  EXPECT_NEAR(m.sz, -mirrored.sz, 1e-13);
  EXPECT_NEAR(m.sz2, mirrored.sz2, 1e-13);
}

TEST(CriticalX, BoundaryIsWhereConcurrenceSwitches) {
  for (int n : {3, 5, 8}) {
    const double xc = critical_x(n, 0.0, -10.0, 10.0);
    EXPECT_LT(xc, 0.0);
    const double c_in = thermal_concurrence(ThermalModel::from_x(n, 0.0, xc - 1e-3));
    const double c_out = thermal_concurrence(ThermalModel::from_x(n, 0.0, xc + 1e-3));
    EXPECT_TRUE((c_in > 0.0) != (c_out > 0.0)) << n;
  }
  EXPECT_THROW(critical_x(4, 1.0, -5.0, 5.0), std::invalid_argument);
  EXPECT_THROW(critical_x(4, 0.0, 1.0, 1.0), std::invalid_argument);
}

TEST(ThermalMoments, IsotropicSzSquaredBound) {
  for (int n = 2; n <= 30; ++n)
    for (int i = -25; i <= 25; ++i) {
      const auto m = thermal_moments(ThermalModel::from_x(n, 1.0, i / 5.0));
      const double s = 0.5 * n;
      EXPECT_LE(m.sz2, s * (s + 1.0) / 3.0 + 1e-10);
    }
}

TEST(ThermalMoments, UnitAnisotropyReducesToIsotropic) {
  for (int n = 2; n <= 15; ++n)
    for (double beta : {0.0, 0.7, 3.0}) {
      const auto a = thermal_moments(ThermalModel::anisotropic(n, -0.8, 1.0, beta));
      const auto b = thermal_moments(ThermalModel::isotropic(n, -0.8, beta));
      EXPECT_EQ(a.sz2, b.sz2);
      EXPECT_EQ(a.sxy2, b.sxy2);
    }
}

TEST(ThermalMoments, LargeSystemsStayFinite) {
  const auto model = ThermalModel::from_x(60, 0.0, -5.0);
  EXPECT_TRUE(std::isfinite(log_partition_function(model)));
  const auto p = thermal_pair_matrix(model);
  EXPECT_NEAR(p.trace(), 1.0, 1e-12);
}

}  // namespace
}  // namespace symconc
