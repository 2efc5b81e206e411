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

#include <cstddef>
#include <span>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/linalg.hpp"
#include "esfano/polynomial.hpp"
#include "esfano/scalar.hpp"

namespace esfano::fano {

// Basis of {lambda : sum_j lambda_j / f_j == 0} for nonzero linear forms f_j.
// Denominators are cleared, giving sum_j lambda_j prod_{k != j} f_k == 0,
// a linear system in lambda read off monomial by monomial. Each basis vector
// is scaled so its first nonzero entry is 1.
template <ExactField F>
std::vector<std::vector<typename F::value_type>> reciprocal_relation_space(
    std::span<const LinearForm<F>> forms) {
  using Scalar = typename F::value_type;
  if (forms.empty()) return {};
  const F& field = forms.front().field();
  const std::size_t n = forms.front().num_vars();
  const std::size_t count = forms.size();
  for (const auto& f : forms) {
    if (f.num_vars() != n) throw DimensionMismatch("forms in different variable counts");
    if (f.is_zero()) throw DomainError("reciprocal of a zero form");
  }

  std::vector<Polynomial<F>> polys;
  for (const auto& f : forms) polys.push_back(f.to_polynomial());
  const auto one = Polynomial<F>::constant(field, n, field.one());
  std::vector<Polynomial<F>> suffix(count + 1, one);
  for (std::size_t j = count; j-- > 1;) suffix[j] = suffix[j + 1] * polys[j];
  std::vector<Polynomial<F>> cofactors;
  Polynomial<F> prefix = one;
  for (std::size_t j = 0; j < count; ++j) {
    cofactors.push_back(prefix * suffix[j + 1]);
    prefix *= polys[j];
  }

  const auto monomials = monomials_of_degree(n, static_cast<std::uint32_t>(count - 1));
  Matrix<F> system(field, monomials.size(), count);
  for (std::size_t r = 0; r < monomials.size(); ++r)
    for (std::size_t j = 0; j < count; ++j) system(r, j) = cofactors[j].coefficient(monomials[r]);

  auto basis = nullspace(system);
  for (auto& v : basis) {
    std::size_t lead = 0;
    while (is_zero(v[lead])) ++lead;
    const Scalar scale = inverse(v[lead]);
    for (auto& x : v) x = x * scale;
  }
  return basis;
}

}  // namespace esfano::fano
