// Copyright 2026 The esfano Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "esfano/errors.hpp"
#include "esfano/invariants.hpp"
#include "groups.hpp"
#include "oracles.hpp"

namespace esfano::invariants {
namespace {

const Rationals kQ;
using MQ = Matrix<Rationals>;
using P = Polynomial<Rationals>;
using L = LinearForm<Rationals>;

const auto kPm = close_group(kQ, 2, {MQ::from_ints(kQ, {{-1, 0}, {0, -1}})});
const auto kSwap = close_group(kQ, 2, {MQ::from_ints(kQ, {{0, 1}, {1, 0}})});
const auto kS3 = close_group(kQ, 3, {MQ::from_ints(kQ, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                                     MQ::from_ints(kQ, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})});

P var(std::size_t n, std::size_t i) { return P::variable(kQ, n, i); }

TEST(Orbit, KnownValues) {
  EXPECT_EQ(orbit_of_form(L::coordinate(kQ, 2, 0), kPm), (std::vector<L>{L(kQ, {1, 0}), L(kQ, {-1, 0})}));
  EXPECT_EQ(orbit_of_form(L::coordinate(kQ, 2, 0), kSwap), (std::vector<L>{L(kQ, {1, 0}), L(kQ, {0, 1})}));
  EXPECT_EQ(orbit_of_form(L(kQ, {1, 1}), kSwap), (std::vector<L>{L(kQ, {1, 1})}));
  EXPECT_EQ(orbit_of_form(L::coordinate(kQ, 3, 0), kS3).size(), 3u);
  EXPECT_THROW(orbit_of_form(L::coordinate(kQ, 3, 0), kPm), DimensionMismatch);
}

TEST(OrbitChern, KnownValues) {
  const std::vector<L> pm{L(kQ, {1}), L(kQ, {-1})};
  EXPECT_EQ(orbit_chern<Rationals>(pm, 2), var(1, 0) * var(1, 0) * Rational(-1));
  const std::vector<L> coords{L::coordinate(kQ, 3, 0), L::coordinate(kQ, 3, 1), L::coordinate(kQ, 3, 2)};
  EXPECT_EQ(orbit_chern<Rationals>(coords, 1), var(3, 0) + var(3, 1) + var(3, 2));
  const std::vector<L> sd{L(kQ, {1, 1}), L(kQ, {1, -1})};
  EXPECT_EQ(orbit_chern<Rationals>(sd, 2), var(2, 0) * var(2, 0) - var(2, 1) * var(2, 1));
  EXPECT_THROW(orbit_chern<Rationals>(sd, 3), DomainError);
  EXPECT_THROW(orbit_chern<Rationals>(sd, 0), DomainError);
}

TEST(Reynolds, KnownValues) {
  const P x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(reynolds(x * x, kPm), x * x);
  EXPECT_TRUE(reynolds(x, kPm).is_zero());
  EXPECT_EQ(reynolds(x * x, kSwap), (x * x + y * y) * Rational(1, 2));
}

TEST(IsInvariant, KnownValues) {
  const P x = var(2, 0), y = var(2, 1);
  EXPECT_TRUE(is_invariant(x * y, kPm));
  EXPECT_FALSE(is_invariant(x, kPm));
  EXPECT_TRUE(is_invariant(elem_sym(2, 3, kQ), kS3));
  EXPECT_FALSE(is_invariant(var(3, 0) * var(3, 1), kS3));
}

TEST(InvariantDim, KnownValues) {
  EXPECT_EQ(invariant_dim(kPm, 2), 3u);
  EXPECT_EQ(invariant_dim(kPm, 3), 0u);
  EXPECT_EQ(invariant_dim(kSwap, 2), 2u);
  EXPECT_EQ(invariant_dim(kSwap, 0), 1u);
  // Partitions of D into parts of size at most 3.
  const std::size_t s3_dims[] = {1, 1, 2, 3, 4, 5, 7};
  for (std::uint32_t d = 0; d <= 6; ++d) EXPECT_EQ(invariant_dim(kS3, d), s3_dims[d]);
}

TEST(PullbackSymmetric, KnownValues) {
  const std::vector<L> pm{L(kQ, {1}), L(kQ, {-1})};
  EXPECT_EQ(pullback_symmetric(elem_sym(2, 2, kQ), std::span<const L>(pm)), var(1, 0) * var(1, 0) * Rational(-1));
  const std::vector<L> coords{L::coordinate(kQ, 3, 0), L::coordinate(kQ, 3, 1), L::coordinate(kQ, 3, 2)};
  EXPECT_EQ(pullback_symmetric(elem_sym(1, 3, kQ), std::span<const L>(coords)), var(3, 0) + var(3, 1) + var(3, 2));
  const std::vector<L> sd{L(kQ, {1, 1}), L(kQ, {1, -1})};
  EXPECT_EQ(pullback_symmetric(var(2, 0) * var(2, 1), std::span<const L>(sd)),
            var(2, 0) * var(2, 0) - var(2, 1) * var(2, 1));
  EXPECT_THROW(pullback_symmetric(var(2, 0), std::span<const L>(sd)), DomainError);
  EXPECT_THROW(pullback_symmetric(elem_sym(1, 3, kQ), std::span<const L>(sd)), DimensionMismatch);
}

TEST(SubalgebraDims, KnownValues) {
  const P x = var(2, 0), y = var(2, 1);
  const std::vector<P> quadrics{x * x, y * y, (x + y) * (x + y)};
  EXPECT_EQ(subalgebra_graded_dims<Rationals>(quadrics, 2), (std::vector<std::size_t>{1, 0, 3}));
  EXPECT_EQ(subalgebra_graded_dims<Rationals>(quadrics, 4)[4], 5u);
  const std::vector<P> esym{elem_sym(1, 3, kQ), elem_sym(2, 3, kQ), elem_sym(3, 3, kQ)};
  EXPECT_EQ(subalgebra_graded_dims<Rationals>(esym, 3)[3], 3u);
  const std::vector<P> bad{x + y * y};
  EXPECT_THROW(subalgebra_graded_dims<Rationals>(bad, 2), DomainError);
}

TEST(GenerationCheck, KnownValues) {
  const std::vector<L> pm_seeds{L::coordinate(kQ, 2, 0), L::coordinate(kQ, 2, 1), L(kQ, {1, 1})};
  EXPECT_TRUE(generation_check<Rationals>(kPm, pm_seeds, 4).generated());
  const std::vector<L> x1{L::coordinate(kQ, 2, 0)};
  EXPECT_TRUE(generation_check<Rationals>(kSwap, x1, 4).generated());

  const auto trivial = close_group(kQ, 2, {});
  const auto short_report = generation_check<Rationals>(trivial, x1, 1);
  EXPECT_FALSE(short_report.generated());
  EXPECT_TRUE(short_report.degrees[0].equal());
  EXPECT_EQ(short_report.degrees[1].subalgebra_dim, 1u);
  EXPECT_EQ(short_report.degrees[1].invariant_dim, 2u);
}

TEST(CharacteristicGuard, Enforced) {
  const PrimeField f3(3);
  const auto g = close_group(f3, 2, {Matrix<PrimeField>::from_ints(f3, {{0, 1}, {1, 0}})});
  EXPECT_EQ(invariant_dim(g, 2), 2u);
  // The trivial group over F_2 has order 1 < 2; the swap group has order 2.
  const PrimeField f2(2);
  EXPECT_NO_THROW(close_group(f2, 1, {Matrix<PrimeField>::from_ints(f2, {{1}})}));
  EXPECT_THROW(close_group(f2, 2, {Matrix<PrimeField>::from_ints(f2, {{0, 1}, {1, 0}})}), CharacteristicError);
}

TEST(Z2Example, Certified) {
  const auto rep = z2_counterexample_report();
  EXPECT_TRUE(rep.xy_invariant);
  EXPECT_EQ(rep.trials, 50u);
  EXPECT_EQ(rep.single_image_hits, 0u);
  EXPECT_TRUE(rep.polarization_identity);
  EXPECT_TRUE(rep.algebra_membership);
  EXPECT_TRUE(rep.certified());
}

TEST(OrbitChern, AlwaysInvariant) {
  std::mt19937_64 rng(71);
  int pullbacks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_group(rng);
    const auto orbit = orbit_of_form(testing::random_form(g.dimension(), rng), g);
    ASSERT_EQ(g.order() % orbit.size(), 0u);
    for (std::size_t r = 1; r <= orbit.size(); ++r) {
      const auto c = orbit_chern<Rationals>(orbit, r);
      ASSERT_TRUE(is_invariant(c, g)) << "trial " << trial << " r " << r;
      // elem_sym(r, m) has C(m, r) terms, so the pullback comparison stays on small orbits.
      if (orbit.size() <= 8) {
        ASSERT_EQ(pullback_symmetric(elem_sym(r, orbit.size(), kQ), std::span<const L>(orbit)), c);
        ++pullbacks;
      }
      ASSERT_EQ(reynolds(c, g), c);
    }
  }
  EXPECT_GT(pullbacks, 100);
}

TEST(Reynolds, IdempotentProjection) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_group(rng);
    const P f = testing::random_polynomial(kQ, g.dimension(), rng, 3, 3);
    const P r = reynolds(f, g);
    ASSERT_TRUE(is_invariant(r, g));
    ASSERT_EQ(reynolds(r, g), r);
  }
}

TEST(SubalgebraDims, BoundedByInvariantDims) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_group(rng, 12);
    std::vector<L> seeds;
    for (std::size_t k = 0, n = 1 + rng() % 2; k < n; ++k) seeds.push_back(testing::random_form(g.dimension(), rng));
    const auto rep = generation_check<Rationals>(g, seeds, 3);
    for (const auto& d : rep.degrees) ASSERT_LE(d.subalgebra_dim, d.invariant_dim) << "trial " << trial;
  }
}

}  // namespace
}  // namespace esfano::invariants
