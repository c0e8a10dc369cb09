#include <gtest/gtest.h>

#include <cmath>

#include "symconc/epr.hpp"

namespace symconc {
namespace {

TEST(EprState, NormalizedAndSatisfiesConstraints) {
  for (int n = 1; n <= 12; ++n) {
    const auto psi = epr_state(n);
    EXPECT_NEAR(inner(psi.amplitudes, psi.amplitudes).real(), 1.0, 1e-14);
    const auto r = epr_constraint_residuals(psi);
    EXPECT_LT(r.plus_minus, 1e-12);
    EXPECT_LT(r.minus_plus, 1e-12);
    EXPECT_LT(r.z, 1e-12);
  }
}

TEST(EprState, ProductStateViolatesConstraints) {
  BipartiteCollectiveVector psi{3, std::vector<complex>(16)};
  psi.amplitudes[0] = 1.0;
  const auto r = epr_constraint_residuals(psi);
  EXPECT_GT(r.plus_minus, 0.5);
  EXPECT_LT(r.z, 1e-15);  // equal excitation numbers already satisfy the z constraint
}

TEST(EprCorrelations, ClosedSumsMatchContraction) {
  for (int n = 1; n <= 20; ++n) {
    const auto a = epr_correlations_closed_form(n);
    const auto b = epr_correlations_contracted(epr_state(n));
    EXPECT_NEAR(a.jz_jz, b.jz_jz, 1e-12 * n * n);
    EXPECT_NEAR(std::abs(a.jp_jp - b.jp_jp), 0.0, 1e-12 * n * n);
    EXPECT_NEAR(a.j1z, 0.0, 1e-14);
    EXPECT_NEAR(b.j1z, 0.0, 1e-12);
    const double nd = n;
    EXPECT_NEAR(a.jz_jz, nd * (nd + 2.0) / 12.0, 1e-12 * n * n);
    EXPECT_NEAR(a.jp_jp.real(), nd * (nd + 2.0) / 6.0, 1e-12 * n * n);
  }
}

TEST(EprPairMatrix, ConcurrenceIsInverseEnsembleSize) {
  for (int n = 1; n <= 60; ++n) {
    const auto p = epr_pair_matrix(n);
    EXPECT_NEAR(2.0 * p.v + 2.0 * p.w, 1.0, 1e-14);
    EXPECT_NEAR(epr_concurrence(p), 1.0 / n, 1e-13);
  }
}

TEST(EprPairMatrix, SymmetricEmbeddingKeepsStructure) {
  const auto p = to_symmetric_pair(epr_pair_matrix(4));
  EXPECT_EQ(p.v_plus, p.v_minus);
  EXPECT_EQ(p.y, complex(0.0));
  EXPECT_EQ(p.x_plus, complex(0.0));
  EXPECT_NEAR(p.trace(), 1.0, 1e-14);
}

TEST(EprState, RejectsEmptyEnsemble) { EXPECT_THROW(epr_state(0), std::invalid_argument); }

TEST(EprPairMatrix, PositiveWithUnitTrace) {
  for (int n = 1; n <= 30; ++n) {
    const auto p = to_symmetric_pair(epr_pair_matrix(n));
    EXPECT_NEAR(p.trace(), 1.0, 1e-14);
    EXPECT_GE(min_eigenvalue(p), -1e-14);
  }
}

}  // namespace
}  // namespace symconc
