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

#pragma once

// Candidate (d-1)-planes as full-rank d x m matrices, the coordinate charts
// [I | A] covering the Grassmannian, and the chart equations cutting out the
// Fano scheme of Z(E_{m-1}).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/linalg.hpp"
#include "esfano/polynomial.hpp"
#include "esfano/scalar.hpp"

namespace esfano::fano {

template <ExactField F>
class PlaneMatrix {
 public:
  using Scalar = typename F::value_type;

  explicit PlaneMatrix(Matrix<F> t) : t_(std::move(t)) {
    if (t_.rows() == 0) throw DomainError("plane matrix needs at least one row");
    if (t_.rows() > t_.cols())
      throw DomainError("plane matrix " + t_.shape() + " has more rows than columns");
    if (rank(t_) != t_.rows()) throw RankDeficient("plane matrix " + t_.shape() + " is not of full row rank");
  }

  const Matrix<F>& matrix() const { return t_; }
  const F& field() const { return t_.field(); }
  std::size_t d() const { return t_.rows(); }
  std::size_t m() const { return t_.cols(); }

  friend bool operator==(const PlaneMatrix&, const PlaneMatrix&) = default;

 private:
  Matrix<F> t_;
};

// The chart of d-planes meeting span{e_i : i in avoided} trivially. Such a
// plane has a unique basis with identity columns at identity_columns.
struct Chart {
  std::vector<std::size_t> avoided;
  std::vector<std::size_t> identity_columns;

  static Chart from_avoided(std::size_t m, std::vector<std::size_t> avoided) {
    std::vector<bool> in(m, false);
    for (auto j : avoided) {
      if (j >= m || in[j]) throw DomainError("chart index out of range or repeated");
      in[j] = true;
    }
    std::sort(avoided.begin(), avoided.end());
    Chart c{std::move(avoided), {}};
    for (std::size_t j = 0; j < m; ++j)
      if (!in[j]) c.identity_columns.push_back(j);
    return c;
  }

  std::size_t d() const { return identity_columns.size(); }
  std::size_t m() const { return avoided.size() + identity_columns.size(); }

  friend bool operator==(const Chart&, const Chart&) = default;
};

// All C(m, m-d) charts, avoided sets in lexicographic order.
inline std::vector<Chart> charts_covering(std::size_t d, std::size_t m) {
  if (d < 1 || d > m)
    throw DomainError("charts_covering needs 1 <= d <= m, got d=" + std::to_string(d) +
                      ", m=" + std::to_string(m));
  const std::size_t k = m - d;
  std::vector<Chart> charts;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    charts.push_back(Chart::from_avoided(m, subset));
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return charts;
}

// First chart (in charts_covering order) on which the plane lies.
template <ExactField F>
Chart fitting_chart(const PlaneMatrix<F>& t) {
  for (auto& chart : charts_covering(t.d(), t.m()))
    if (rank(t.matrix().select_columns(chart.identity_columns)) == t.d()) return chart;
  throw RankDeficient("no chart contains the plane");  // unreachable for full-rank input
}

// The A block of the chart basis: T' = M^{-1} T with M the identity-column
// block, restricted to the avoided columns.
template <ExactField F>
Matrix<F> chart_coordinates(const PlaneMatrix<F>& t, const Chart& chart) {
  if (chart.m() != t.m() || chart.d() != t.d()) throw DimensionMismatch("chart does not fit plane");
  auto m_inv = try_inverse(t.matrix().select_columns(chart.identity_columns));
  if (!m_inv) throw DomainError("plane is not in the given chart");
  return (*m_inv * t.matrix()).select_columns(chart.avoided);
}

// Inverse of chart_coordinates: identity at the chart's identity columns and
// the columns of `a` at the avoided positions.
template <ExactField F>
Matrix<F> chart_matrix(const Chart& chart, const Matrix<F>& a) {
  const std::size_t d = chart.d();
  if (a.rows() != d || a.cols() != chart.avoided.size())
    throw DimensionMismatch("chart block has shape " + a.shape());
  Matrix<F> t(a.field(), d, chart.m());
  for (std::size_t k = 0; k < d; ++k) t(k, chart.identity_columns[k]) = a.field().one();
  for (std::size_t k = 0; k < chart.avoided.size(); ++k)
    for (std::size_t i = 0; i < d; ++i) t(i, chart.avoided[k]) = a(i, k);
  return t;
}

// Unknown a_{i,k} (row i, k-th avoided column) is variable i*(m-d) + k.
inline std::size_t chart_unknown_index(const Chart& chart, std::size_t row, std::size_t k) {
  return row * chart.avoided.size() + k;
}

// Names unknowns a<row>_<column>, 1-based, column being the matrix column.
inline VariableNamer chart_unknown_names(const Chart& chart) {
  return [chart](std::size_t var) {
    const std::size_t width = chart.avoided.size();
    return "a" + std::to_string(var / width + 1) + "_" + std::to_string(chart.avoided[var % width] + 1);
  };
}

// Coefficients of E_{m-1}((s) * T), T = [I | A] placed by the chart, as
// polynomials in the d(m-d) entries of A. One equation per degree-(m-1)
// monomial in s (zero equations included), in GrlexDescending order.
template <ExactField F>
std::vector<Polynomial<F>> fano_chart_equations(std::size_t d, std::size_t m, const Chart& chart,
                                                const F& field) {
  if (d < 1 || d >= m)
    throw DomainError("fano_chart_equations needs 1 <= d < m, got d=" + std::to_string(d) +
                      ", m=" + std::to_string(m));
  if (chart.d() != d || chart.m() != m) throw DimensionMismatch("chart does not match (d, m)");
  const std::size_t width = m - d;
  const std::size_t unknowns = d * width;
  const std::size_t n = d + unknowns;  // s_1..s_d, then the a's

  std::vector<Polynomial<F>> forms(m, Polynomial<F>(field, n));
  for (std::size_t k = 0; k < d; ++k)
    forms[chart.identity_columns[k]] = Polynomial<F>::variable(field, n, k);
  for (std::size_t k = 0; k < width; ++k) {
    Polynomial<F> form(field, n);
    for (std::size_t i = 0; i < d; ++i) {
      ExponentVector e(n);
      e.set(i, 1);
      e.set(d + chart_unknown_index(chart, i, k), 1);
      form.add_term(e, field.one());
    }
    forms[chart.avoided[k]] = std::move(form);
  }

  const auto by_s = collect_leading(esym_top_at<F>(forms), d);
  std::vector<Polynomial<F>> equations;
  for (const auto& mono : monomials_of_degree(d, static_cast<std::uint32_t>(m - 1))) {
    auto it = by_s.find(mono);
    equations.push_back(it == by_s.end() ? Polynomial<F>(field, unknowns) : it->second);
  }
  return equations;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  if (r > std::numeric_limits<std::int64_t>::max()) throw DomainError("binomial overflows int64");
  return static_cast<std::int64_t>(r);
}

// Naive dimension count d(m-d) - C(d+m-2, d-1) of the Fano scheme.
inline std::int64_t expected_dimension(std::int64_t d, std::int64_t m) {
  if (d < 1 || d >= m)
    throw DomainError("expected_dimension needs 1 <= d < m, got d=" + std::to_string(d) +
                      ", m=" + std::to_string(m));
  return d * (m - d) - binomial(d + m - 2, d - 1);
}

}  // namespace esfano::fano
