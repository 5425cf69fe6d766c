// Copyright 2026 The cvbroadcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvbroadcast/gaussian_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cvbroadcast/optics.hpp"
#include "test_support.hpp"

namespace cvb {
namespace {

using testing::MatrixNear;

template <class A, class B>
concept DirectSummable = requires(const A& a, const B& b) { direct_sum(a, b); };

TEST(IdentityCm, IsVacuum) {
  for (int n : {1, 2, 3}) {
    const auto cm = identity_cm(n);
    EXPECT_EQ(cm.n_modes(), n);
    EXPECT_EQ(cm.entries(), Matrix::Identity(2 * n, 2 * n));
  }
}

TEST(IdentityCm, RejectsZeroModes) { EXPECT_THROW(identity_cm(0), std::invalid_argument); }

TEST(CovarianceMatrix, RejectsMalformedInput) {
  EXPECT_THROW(CovarianceMatrix(Matrix::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(CovarianceMatrix(Matrix::Identity(2, 4)), std::invalid_argument);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 0.1;
  EXPECT_THROW(CovarianceMatrix{asym}, std::invalid_argument);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(CovarianceMatrix{nan}, std::invalid_argument);
}

TEST(DirectSum, PadsSqueezerWithAncilla) {
  const auto padded = direct_sum(single_mode_squeezer(SqueezeParams(1.0)), SymplecticTransform::identity(1));
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << std::exp(1.0), std::exp(-1.0), 1.0, 1.0;
  EXPECT_TRUE(MatrixNear(padded.entries(), expected, 0.0));
}

TEST(DirectSum, VacuaCompose) {
  EXPECT_EQ(direct_sum(identity_cm(1), identity_cm(1)).entries(), Matrix::Identity(4, 4));
}

TEST(DirectSum, MixingKindsDoesNotCompile) {
  static_assert(DirectSummable<CovarianceMatrix, CovarianceMatrix>);
  static_assert(DirectSummable<SymplecticTransform, SymplecticTransform>);
  static_assert(!DirectSummable<CovarianceMatrix, SymplecticTransform>);
  static_assert(!DirectSummable<SymplecticTransform, CovarianceMatrix>);
}

TEST(DirectSum, TwoModeSqueezedWithAncillasMatchesEightByEightLayout) {
  const SqueezeParams p(0.6);
  const double c = p.c(), s = p.s();
  const auto sigma = permute(direct_sum(two_mode_squeezed_cm(p), identity_cm(2)), {1, 3, 2, 4});
  Matrix expected(8, 8);
  expected << c, 0, 0, 0, s, 0, 0, 0,
              0, c, 0, 0, 0, -s, 0, 0,
              0, 0, 1, 0, 0, 0, 0, 0,
              0, 0, 0, 1, 0, 0, 0, 0,
              s, 0, 0, 0, c, 0, 0, 0,
              0, -s, 0, 0, 0, c, 0, 0,
              0, 0, 0, 0, 0, 0, 1, 0,
              0, 0, 0, 0, 0, 0, 0, 1;
  EXPECT_TRUE(MatrixNear(sigma.entries(), expected, 0.0));
}

TEST(Apply, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(11);
  const CovarianceMatrix sigma(testing::random_state(2, rng, 3.0));
  EXPECT_TRUE(MatrixNear(apply(SymplecticTransform::identity(2), sigma).entries(), sigma.entries(), 1e-15));
}

TEST(Apply, SqueezesVacuum) {
  for (double r : {0.0, 0.3, 1.0, 2.0}) {
    const auto out = apply(single_mode_squeezer(SqueezeParams(r)), identity_cm(1));
    Matrix expected = Matrix::Zero(2, 2);
    expected.diagonal() << std::exp(2 * r), std::exp(-2 * r);
    EXPECT_TRUE(MatrixNear(out.entries(), expected, testing::scaled_tol(1e-15, expected)));
  }
}

TEST(Apply, RejectsDimensionMismatch) {
  EXPECT_THROW(apply(SymplecticTransform::identity(2), identity_cm(1)), std::invalid_argument);
}

TEST(Reduce, ExtractsBlocks) {
  EXPECT_EQ(reduce(identity_cm(2), {1}).entries(), Matrix::Identity(2, 2));
  const SqueezeParams p(0.7);
  const auto one = reduce(two_mode_squeezed_cm(p), {1});
  EXPECT_TRUE(MatrixNear(one.entries(), p.c() * Matrix::Identity(2, 2), 0.0));
}

TEST(Reduce, KeepsRequestedOrder) {
  Matrix m = Matrix::Identity(4, 4);
  m(0, 0) = 2.0;
  m(2, 2) = 3.0;
  const auto swapped = reduce(CovarianceMatrix(m), {2, 1});
  EXPECT_DOUBLE_EQ(swapped(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(swapped(2, 2), 2.0);
}

TEST(Reduce, RejectsInvalidSelections) {
  EXPECT_THROW(reduce(identity_cm(2), {3}), std::out_of_range);
  EXPECT_THROW(reduce(identity_cm(2), {0}), std::out_of_range);
  EXPECT_THROW(ModeSelection({1, 1}), std::invalid_argument);
  EXPECT_THROW(ModeSelection(std::vector<int>{}), std::invalid_argument);
}

TEST(Reduce, ComposesOverRandomSelections) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const CovarianceMatrix sigma(testing::random_state(6, rng, 2.0));
    std::vector<int> modes(6);
    std::iota(modes.begin(), modes.end(), 1);
    std::shuffle(modes.begin(), modes.end(), rng);
    const int first_size = 2 + static_cast<int>(rng() % 5);
    std::vector<int> first(modes.begin(), modes.begin() + first_size);
    std::vector<int> positions(first_size);
    std::iota(positions.begin(), positions.end(), 1);
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(1 + rng() % first_size);

    std::vector<int> composed;
    for (int pos : positions) composed.push_back(first[pos - 1]);
    const auto twice = reduce(reduce(sigma, ModeSelection(first)), ModeSelection(positions));
    const auto once = reduce(sigma, ModeSelection(composed));
    EXPECT_EQ(twice.entries(), once.entries());
  }
}

TEST(Permute, IdentityOrderIsNoOp) {
  std::mt19937_64 rng(5);
  const CovarianceMatrix sigma(testing::random_state(3, rng, 2.0));
  EXPECT_EQ(permute(sigma, {1, 2, 3}).entries(), sigma.entries());
}

TEST(Permute, InverseRestoresInputExactly) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const CovarianceMatrix sigma(testing::random_state(5, rng, 2.0));
    const SymplecticTransform s(testing::random_symplectic(5, rng));
    std::vector<int> order(5);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    const ModeSelection sel(order);
    EXPECT_EQ(permute(permute(sigma, sel), sel.inverse()).entries(), sigma.entries());
    EXPECT_EQ(permute(permute(s, sel), sel.inverse()).entries(), s.entries());
  }
}

TEST(Permute, SwapExchangesBlocks) {
  const SymplecticTransform a(testing::squeeze(0.4));
  const SymplecticTransform b(testing::rotation(0.3));
  EXPECT_EQ(permute(direct_sum(a, b), {2, 1}).entries(), direct_sum(b, a).entries());
}

TEST(Permute, RejectsNonPermutation) {
  EXPECT_THROW(permute(identity_cm(3), {1, 2}), std::invalid_argument);
  EXPECT_THROW(permute(identity_cm(2), {1, 3}), std::invalid_argument);
}

TEST(IsSymplectic, Basics) {
  const auto id = is_symplectic(SymplecticTransform::identity(3));
  EXPECT_TRUE(id.symplectic);
  EXPECT_EQ(id.residual, 0.0);
  EXPECT_TRUE(is_symplectic(single_mode_squeezer(SqueezeParams(1.0))).symplectic);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  const auto check = is_symplectic(SymplecticTransform(bad));
  EXPECT_FALSE(check.symplectic);
  EXPECT_DOUBLE_EQ(check.residual, 1.0);
}

TEST(IsPhysical, VacuumSaturatesBound) {
  for (int n : {1, 2, 3, 4}) {
    const auto check = is_physical(identity_cm(n));
    EXPECT_TRUE(check.physical) << n;
    EXPECT_NEAR(check.margin, 0.0, 1e-15) << n;
  }
}

TEST(IsPhysical, PureSqueezedStates) {
  for (double r : {0.0, 0.5, 1.0, 3.0}) {
    const auto check = is_physical(apply(single_mode_squeezer(SqueezeParams(r)), identity_cm(1)));
    EXPECT_TRUE(check.physical) << r;
    EXPECT_NEAR(check.margin, 0.0, 1e-12) << r;
  }
}

TEST(IsPhysical, BelowVacuumNoise) {
  EXPECT_FALSE(is_physical(CovarianceMatrix(0.5 * Matrix::Identity(2, 2))).physical);
  EXPECT_FALSE(is_physical(CovarianceMatrix(0.5 * Matrix::Identity(6, 6))).physical);
  EXPECT_FALSE(is_physical(CovarianceMatrix(-2.0 * Matrix::Identity(2, 2))).physical);
}

TEST(IsPhysical, AgreesWithHermitianEigenOracle) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> shrink(0.6, 1.4);
  int physical = 0, unphysical = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    const Matrix sigma = shrink(rng) * testing::random_state(n, rng, 1.5);
    const double oracle = testing::min_eigenvalue_sigma_plus_ij(sigma);
    if (std::abs(oracle) < 1e-6) continue;  // too close to the boundary to call
    const auto check = is_physical(CovarianceMatrix(sigma));
    EXPECT_EQ(check.physical, oracle > 0.0) << "n=" << n << " oracle=" << oracle << " margin=" << check.margin;
    (oracle > 0.0 ? physical : unphysical)++;
  }
  EXPECT_GT(physical, 50);
  EXPECT_GT(unphysical, 50);
}

TEST(IsPhysical, DetectsIndefiniteZeroDiagonal) {
  // sigma + iJ has a zero pivot with a nonzero column after elimination.
  Matrix m = Matrix::Identity(6, 6);
  m(0, 2) = m(2, 0) = 1.5;
  EXPECT_FALSE(is_physical(CovarianceMatrix(m)).physical);
}

TEST(Properties, ApplyPreservesSymmetryAndPhysicality) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const CovarianceMatrix sigma(testing::random_state(n, rng, 2.0));
    const SymplecticTransform s(testing::random_symplectic(n, rng));
    const auto out = apply(s, sigma);
    EXPECT_LE((out.entries() - out.entries().transpose()).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_TRUE(is_physical(out).physical);
  }
}

TEST(Properties, RandomSymplecticHasUnitDeterminant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SymplecticTransform s(testing::random_symplectic(1 + trial % 6, rng));
    EXPECT_TRUE(is_symplectic(s).symplectic);
    EXPECT_NEAR(s.entries().determinant(), 1.0, 1e-9);
  }
}

TEST(Properties, DirectSumThenReduceRecoversFirstOperand) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int na = 1 + trial % 3, nb = 1 + (trial / 3) % 3;
    const CovarianceMatrix a(testing::random_state(na, rng, 2.0));
    const CovarianceMatrix b(testing::random_state(nb, rng, 2.0));
    std::vector<int> first(na);
    std::iota(first.begin(), first.end(), 1);
    EXPECT_EQ(reduce(direct_sum(a, b), ModeSelection(first)).entries(), a.entries());
  }
}

TEST(SymplecticForm, SquaresToMinusIdentity) {
  const Matrix j = symplectic_form(3);
  EXPECT_EQ(j + j.transpose(), Matrix::Zero(6, 6));
  EXPECT_EQ(j * j, -Matrix::Identity(6, 6));
}

}  // namespace
}  // namespace cvb
