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

#include <cmath>
#include <random>

#include "esfano/errors.hpp"
#include "esfano/fano.hpp"
#include "oracles.hpp"

namespace esfano::fano {
namespace {

const Rationals kQ;

TEST(PlaneMatrix, RejectsDegenerateInput) {
  EXPECT_THROW(PlaneMatrix(Matrix<Rationals>::from_ints(kQ, {{1, 1}, {2, 2}})), RankDeficient);
  EXPECT_THROW(PlaneMatrix(Matrix<Rationals>::from_ints(kQ, {{1}, {0}})), DomainError);
  EXPECT_THROW(PlaneMatrix(Matrix<Rationals>(kQ, 0, 3)), DomainError);
}

TEST(Charts, SmallCases) {
  const auto line = charts_covering(1, 2);
  ASSERT_EQ(line.size(), 2u);
  EXPECT_EQ(line[0].avoided, (std::vector<std::size_t>{0}));
  EXPECT_EQ(line[1].avoided, (std::vector<std::size_t>{1}));
  EXPECT_EQ(charts_covering(2, 4).size(), 6u);
  EXPECT_EQ(charts_covering(3, 7).size(), 35u);
}

TEST(Charts, EveryRandomPlaneFitsSomeChart) {
  std::mt19937_64 rng(5);
  const PrimeField f5(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 3, m = d + 1 + rng() % 3;
    const PlaneMatrix plane(testing::random_full_rank(f5, d, m, rng));
    bool found = false;
    for (const auto& chart : charts_covering(d, m)) {
      const auto block = plane.matrix().select_columns(chart.identity_columns);
      if (!is_zero(testing::leibniz_det(block))) {
        found = true;
        const auto a = chart_coordinates(plane, chart);
        ASSERT_EQ(rref(chart_matrix(chart, a)).reduced, rref(plane.matrix()).reduced);
      }
    }
    ASSERT_TRUE(found);
    const Chart fit = fitting_chart(plane);
    ASSERT_FALSE(is_zero(testing::leibniz_det(plane.matrix().select_columns(fit.identity_columns))));
  }
}

TEST(ChartEquations, ConicOnTheFirstChart) {
  const auto chart = Chart::from_avoided(3, {1, 2});
  const auto eqs = fano_chart_equations<Rationals>(1, 3, chart, kQ);
  ASSERT_EQ(eqs.size(), 1u);
  using P = Polynomial<Rationals>;
  const P a = P::variable(kQ, 2, 0), b = P::variable(kQ, 2, 1);
  EXPECT_EQ(eqs[0], a + b + a * b);
  EXPECT_EQ(to_string(eqs[0], chart_unknown_names(chart)), "a1_2*a1_3 + a1_2 + a1_3");
}

TEST(ChartEquations, LineCase) {
  const auto eqs = fano_chart_equations<Rationals>(1, 2, Chart::from_avoided(2, {1}), kQ);
  ASSERT_EQ(eqs.size(), 1u);
  using P = Polynomial<Rationals>;
  EXPECT_EQ(eqs[0], P::variable(kQ, 1, 0) + P::constant(kQ, 1, 1));
}

TEST(ChartEquations, CountIsNumberOfSMonomials) {
  EXPECT_EQ(fano_chart_equations<Rationals>(2, 4, Chart::from_avoided(4, {2, 3}), kQ).size(), 4u);
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t m = d + 1; m <= 6; ++m) {
      std::vector<std::size_t> avoided;
      for (std::size_t j = d; j < m; ++j) avoided.push_back(j);
      const auto eqs = fano_chart_equations<Rationals>(d, m, Chart::from_avoided(m, avoided), kQ);
      EXPECT_EQ(static_cast<std::int64_t>(eqs.size()),
                binomial(static_cast<std::int64_t>(d + m - 2), static_cast<std::int64_t>(d - 1)));
      for (const auto& e : eqs) EXPECT_LE(e.degree(), static_cast<int>(m - 1));
    }
  EXPECT_THROW(fano_chart_equations<Rationals>(3, 3, Chart::from_avoided(3, {}), kQ), DomainError);
}

// Satisfying every chart equation is the same as E_{m-1} vanishing on the plane.
template <ExactField F>
void check_chart_consistency(const F& field, std::size_t d, std::size_t m, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const auto charts = charts_covering(d, m);
  int members = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const Chart& chart = charts[rng() % charts.size()];
    const auto eqs = fano_chart_equations<F>(d, m, chart, field);
    Matrix<F> a(field, d, m - d);
    if (trial % 2 == 0) {
      // Drift toward members: start from a known member's chart coordinates.
      const auto& pool = enumerate_isolated(d, field);
      if (2 * d == m && !pool.empty()) {
        const auto& plane = pool[rng() % pool.size()].second;
        if (auto inv = try_inverse(plane.matrix().select_columns(chart.identity_columns)))
          a = (*inv * plane.matrix()).select_columns(chart.avoided);
      }
    } else {
      a = testing::random_matrix(field, d, m - d, rng, 2);
    }
    std::vector<typename F::value_type> point;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < m - d; ++k) point.push_back(a(i, k));
    bool all_zero = true;
    for (const auto& e : eqs) all_zero = all_zero && is_zero(e.evaluate(point));
    const bool direct = is_member_direct(PlaneMatrix<F>(chart_matrix(chart, a)));
    ASSERT_EQ(all_zero, direct) << "trial " << trial;
    members += direct;
  }
  if (2 * d == m) {
    EXPECT_GT(members, 0);
  }
}

TEST(ChartEquations, ConsistentWithDirectTest) {
  check_chart_consistency(kQ, 2, 4, 21, 60);
  check_chart_consistency(kQ, 1, 3, 22, 60);
  check_chart_consistency(PrimeField(3), 2, 4, 23, 60);
  check_chart_consistency(PrimeField(3), 2, 5, 24, 40);
  check_chart_consistency(PrimeField(2), 3, 6, 25, 40);
}

TEST(ChartEquations, ConsistentOnEveryF3Point) {
  const PrimeField f3(3);
  for (auto [d, m] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}}) {
    const Chart chart = charts_covering(d, m).front();
    const auto eqs = fano_chart_equations<PrimeField>(d, m, chart, f3);
    const std::size_t n = d * (m - d);
    std::vector<Fp> point(n, f3.zero());
    for (std::size_t code = 0; code < static_cast<std::size_t>(std::pow(3, n)); ++code) {
      std::size_t c = code;
      Matrix<PrimeField> a(f3, d, m - d);
      for (std::size_t v = 0; v < n; ++v, c /= 3) {
        point[v] = f3.from_int(static_cast<std::int64_t>(c % 3));
        a(v / (m - d), v % (m - d)) = point[v];
      }
      bool all_zero = true;
      for (const auto& e : eqs) all_zero = all_zero && is_zero(e.evaluate(point));
      ASSERT_EQ(all_zero, is_member_direct(PlaneMatrix<PrimeField>(chart_matrix(chart, a))));
    }
  }
}

TEST(ExpectedDimension, Values) {
  EXPECT_EQ(expected_dimension(2, 4), 0);
  EXPECT_EQ(expected_dimension(3, 6), -12);
  EXPECT_EQ(expected_dimension(1, 3), 1);
  for (std::int64_t d = 3; d <= 8; ++d) EXPECT_LT(expected_dimension(d, 2 * d), 0);
  EXPECT_THROW(expected_dimension(0, 3), DomainError);
  EXPECT_THROW(expected_dimension(3, 3), DomainError);
}

}  // namespace
}  // namespace esfano::fano
