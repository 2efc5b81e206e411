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
#include "esfano/fano.hpp"
#include "oracles.hpp"

namespace esfano::fano {
namespace {

const Rationals kQ;
using L = LinearForm<Rationals>;

TEST(Reciprocals, KnownValues) {
  const std::vector<L> independent{L(kQ, {1, 0}), L(kQ, {0, 1}), L(kQ, {1, 1})};
  EXPECT_TRUE(reciprocal_relation_space<Rationals>(independent).empty());

  const std::vector<L> doubled{L(kQ, {1}), L(kQ, {2})};
  const auto basis = reciprocal_relation_space<Rationals>(doubled);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (std::vector<Rational>{1, -2}));

  const std::vector<L> repeated{L(kQ, {1, 0}), L(kQ, {1, 0}), L(kQ, {0, 1})};
  EXPECT_EQ(reciprocal_relation_space<Rationals>(repeated).size(), 1u);
}

TEST(Reciprocals, ZeroFormThrows) {
  const std::vector<L> forms{L(kQ, {1, 0}), L(kQ, {0, 0})};
  EXPECT_THROW(reciprocal_relation_space<Rationals>(forms), DomainError);
}

// Class count by pairwise 2x2 minors, independent of the normalisation used
// by proportionality_classes.
std::size_t classes_by_minors(const std::vector<L>& forms) {
  std::vector<std::size_t> rep(forms.size());
  std::size_t count = 0;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    rep[j] = j;
    for (std::size_t i = 0; i < j; ++i) {
      Matrix<Rationals> pair(kQ, {forms[i].coefficients(), forms[j].coefficients()});
      if (testing::rank_by_minors(pair) == 1) {
        rep[j] = rep[i];
        break;
      }
    }
    count += rep[j] == j;
  }
  return count;
}

TEST(Reciprocals, DimensionLawOnRandomSets) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t base = 1 + rng() % 4;
    std::vector<L> pool;
    while (pool.size() < base) {
      auto v = testing::random_matrix(kQ, 1, n, rng, 2).row(0);
      L f(kQ, v);
      if (!f.is_zero()) pool.push_back(f);
    }
    std::vector<L> forms;
    for (std::size_t k = 0, total = 1 + rng() % 5; k < total; ++k) {
      const L& f = pool[rng() % pool.size()];
      Rational c = 0;
      while (is_zero(c)) c = testing::random_scalar(kQ, rng, 3);
      forms.push_back(f.scaled(c));
    }
    const auto basis = reciprocal_relation_space<Rationals>(forms);
    ASSERT_EQ(basis.size(), forms.size() - classes_by_minors(forms)) << "trial " << trial;

    // Each relation holds at random points where no form vanishes.
    for (const auto& lambda : basis) {
      for (int k = 0; k < 5; ++k) {
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < n; ++i) pt.push_back(testing::random_scalar(kQ, rng, 9));
        Rational sum = 0;
        bool defined = true;
        for (std::size_t j = 0; j < forms.size(); ++j) {
          const Rational v = forms[j].to_polynomial().evaluate(pt);
          if (is_zero(v)) {
            defined = false;
            break;
          }
          sum += lambda[j] / v;
        }
        if (defined) {
          ASSERT_TRUE(is_zero(sum));
        }
      }
    }
  }
}

TEST(Reciprocals, PairwiseNonProportionalGivesZeroSpace) {
  std::mt19937_64 rng(52);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<L> forms;
    for (std::size_t k = 0, total = 2 + rng() % 4; k < total; ++k)
      forms.emplace_back(kQ, testing::random_matrix(kQ, 1, n, rng, 3).row(0));
    bool ok = true;
    for (const auto& f : forms) ok = ok && !f.is_zero();
    if (!ok || classes_by_minors(forms) != forms.size()) continue;
    ASSERT_TRUE(reciprocal_relation_space<Rationals>(forms).empty());
    ++checked;
  }
}

}  // namespace
}  // namespace esfano::fano
