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

namespace esfano::invariants {
namespace {

const Rationals kQ;
using MQ = Matrix<Rationals>;

const MQ kMinusI = MQ::from_ints(kQ, {{-1, 0}, {0, -1}});
const MQ kSwap = MQ::from_ints(kQ, {{0, 1}, {1, 0}});

TEST(CloseGroup, Orders) {
  EXPECT_EQ(close_group(kQ, 2, {kMinusI}).order(), 2u);
  EXPECT_EQ(close_group(kQ, 2, {kSwap}).order(), 2u);
  EXPECT_EQ(close_group(kQ, 2, {MQ::from_ints(kQ, {{0, -1}, {1, 0}})}).order(), 4u);
  EXPECT_EQ(close_group(kQ, 2, {kSwap, kMinusI}).order(), 4u);
  EXPECT_EQ(close_group(kQ, 3, testing::generator_pool(3)).order(), 48u);
  EXPECT_EQ(close_group(kQ, 2, {}).order(), 1u);
}

TEST(CloseGroup, Failures) {
  EXPECT_THROW(close_group(kQ, 2, {MQ::from_ints(kQ, {{1, 1}, {1, 1}})}), RankDeficient);
  EXPECT_THROW(close_group(kQ, 1, {MQ::from_ints(kQ, {{2}})}, 100), BudgetExceeded);
  EXPECT_THROW(close_group(kQ, 2, {MQ::from_ints(kQ, {{1}})}), DimensionMismatch);
  const PrimeField f2(2);
  EXPECT_THROW(close_group(f2, 2, {Matrix<PrimeField>::from_ints(f2, {{0, 1}, {1, 0}})}), CharacteristicError);
  const PrimeField f3(3);
  EXPECT_THROW(close_group(f3, 2, {Matrix<PrimeField>::from_ints(f3, {{0, -1}, {1, 0}})}), CharacteristicError);
  const PrimeField f5(5);
  EXPECT_EQ(close_group(f5, 2, {Matrix<PrimeField>::from_ints(f5, {{0, -1}, {1, 0}})}).order(), 4u);
}

TEST(GroupAction, FromElementsValidates) {
  EXPECT_EQ(GroupAction<Rationals>::from_elements(kQ, 2, {MQ::identity(kQ, 2), kMinusI}).order(), 2u);
  EXPECT_THROW(GroupAction<Rationals>::from_elements(kQ, 2, {kMinusI}), DomainError);
  EXPECT_THROW(GroupAction<Rationals>::from_elements(kQ, 2, {MQ::identity(kQ, 2), kSwap, kMinusI}), DomainError);
  EXPECT_THROW(GroupAction<Rationals>::from_elements(kQ, 2, {MQ::identity(kQ, 2), MQ::identity(kQ, 2)}),
               DomainError);
}

TEST(PermutationAction, HomomorphismLawChecked) {
  const auto g = close_group(kQ, 2, {MQ::from_ints(kQ, {{0, -1}, {1, 0}})});
  const MQ u = MQ::from_ints(kQ, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  const auto rho = derive_permutation_rep(u, g);
  EXPECT_TRUE(check_equivariance(u, g, rho));
  // Sending a generator of order 4 to the identity while keeping its square
  // nontrivial breaks the law.
  auto broken = rho.images();
  const std::size_t r = *g.index_of(MQ::from_ints(kQ, {{0, -1}, {1, 0}}));
  broken[r] = {0, 1, 2, 3};
  EXPECT_THROW(PermutationAction::make(g, broken), DomainError);
  EXPECT_THROW(PermutationAction::make(g, {{0, 1}}), DimensionMismatch);
  EXPECT_THROW(PermutationAction::make(g, {{0, 0}, {0, 1}, {0, 1}, {0, 1}}), DomainError);
}

TEST(Equivariance, KnownValues) {
  const auto swap = close_group(kQ, 2, {kSwap});
  const auto rho_swap = PermutationAction::make(swap, {{0, 1}, {1, 0}});
  EXPECT_TRUE(check_equivariance(MQ::identity(kQ, 2), swap, rho_swap));
  EXPECT_FALSE(check_equivariance(MQ::from_ints(kQ, {{1, 0}, {0, 2}}), swap, rho_swap));

  const auto pm = close_group(kQ, 2, {kMinusI});
  const auto rho_pm = PermutationAction::make(pm, {{0, 1}, {1, 0}});
  EXPECT_TRUE(check_equivariance(MQ::from_ints(kQ, {{1, 0}, {-1, 0}}), pm, rho_pm));
  EXPECT_THROW(check_equivariance(MQ::from_ints(kQ, {{1, 0, 0}, {0, 1, 0}}), pm, rho_pm), DimensionMismatch);
}

TEST(DerivePermutationRep, KnownValues) {
  const auto pm = close_group(kQ, 2, {kMinusI});
  const auto rho = derive_permutation_rep(MQ::from_ints(kQ, {{1, 0}, {-1, 0}}), pm);
  EXPECT_EQ(rho.images(), (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));

  const auto swap = close_group(kQ, 2, {kSwap});
  EXPECT_EQ(derive_permutation_rep(MQ::identity(kQ, 2), swap).images(),
            (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));

  EXPECT_THROW(derive_permutation_rep(MQ::from_ints(kQ, {{1, 0}, {0, 2}}), pm), NotInvariantSet);
  EXPECT_THROW(derive_permutation_rep(MQ::from_ints(kQ, {{1, 0}, {1, 0}}), pm), DomainError);
}

TEST(DerivePermutationRep, EquivariantOnRandomOrbitUnions) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_group(rng);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0, seeds = 1 + rng() % 2; k < seeds; ++k)
      for (const auto& f : orbit_of_form(testing::random_form(g.dimension(), rng), g))
        if (std::find(rows.begin(), rows.end(), f.coefficients()) == rows.end()) rows.push_back(f.coefficients());
    const MQ u(kQ, rows);
    const auto rho = derive_permutation_rep(u, g);
    ASSERT_TRUE(check_equivariance(u, g, rho));
  }
}

}  // namespace
}  // namespace esfano::invariants
