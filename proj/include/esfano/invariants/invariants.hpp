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

// Polynomial invariants of finite matrix groups: orbits of linear forms,
// orbit Chern classes, the Reynolds operator, graded dimensions of the
// invariant ring and of subalgebras, and the degree-by-degree check that
// orbit Chern classes generate the invariants.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/invariants/group.hpp"
#include "esfano/linalg.hpp"
#include "esfano/polynomial.hpp"
#include "esfano/scalar.hpp"

namespace esfano::invariants {

// f o g, i.e. x_i replaced by (g x)_i.
template <ExactField F>
Polynomial<F> act(const Polynomial<F>& f, const Matrix<F>& g) {
  if (g.rows() != f.num_vars() || g.cols() != f.num_vars())
    throw DimensionMismatch("act: " + g.shape() + " matrix on " + std::to_string(f.num_vars()) + " variables");
  std::vector<Polynomial<F>> images;
  for (std::size_t i = 0; i < g.rows(); ++i) images.push_back(LinearForm<F>(g.field(), g.row(i)).to_polynomial());
  return substitute<F>(f, images, f.num_vars());
}

// {f o phi_s}, deduplicated, in order of first appearance along the group's
// element list.
template <ExactField F>
std::vector<LinearForm<F>> orbit_of_form(const LinearForm<F>& f, const GroupAction<F>& phi) {
  if (f.num_vars() != phi.dimension()) throw DimensionMismatch("form and group act on different spaces");
  std::vector<LinearForm<F>> orbit;
  for (const auto& g : phi.elements()) {
    LinearForm<F> image = f.compose(g);
    if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(std::move(image));
  }
  return orbit;
}

// E_r evaluated at the orbit's forms.
template <ExactField F>
Polynomial<F> orbit_chern(std::span<const LinearForm<F>> orbit, std::size_t r) {
  if (r < 1 || r > orbit.size())
    throw DomainError("orbit_chern needs 1 <= r <= " + std::to_string(orbit.size()) + ", got " + std::to_string(r));
  std::vector<Polynomial<F>> values;
  for (const auto& f : orbit) values.push_back(f.to_polynomial());
  return esym_at<F>(orbit.front().field(), orbit.front().num_vars(), values, r);
}

template <ExactField F>
Polynomial<F> reynolds(const Polynomial<F>& f, const GroupAction<F>& phi) {
  check_characteristic(f.field(), phi.order());
  Polynomial<F> sum(f.field(), f.num_vars());
  for (const auto& g : phi.elements()) sum += act(f, g);
  return sum * inverse(f.field().from_int(static_cast<std::int64_t>(phi.order())));
}

template <ExactField F>
bool is_invariant(const Polynomial<F>& f, const GroupAction<F>& phi) {
  for (const auto& g : phi.elements())
    if (!(act(f, g) == f)) return false;
  return true;
}

// Dimension of the degree-D invariants: rank of the Reynolds images of the
// degree-D monomials.
template <ExactField F>
std::size_t invariant_dim(const GroupAction<F>& phi, std::uint32_t degree) {
  check_characteristic(phi.field(), phi.order());
  const F& field = phi.field();
  std::vector<Polynomial<F>> images;
  for (const auto& e : monomials_of_degree(phi.dimension(), degree)) {
    Polynomial<F> mono(field, phi.dimension());
    mono.add_term(e, field.one());
    images.push_back(reynolds(mono, phi));
  }
  return span_rank<F>(images);
}

// Invariance under every adjacent transposition of the variables.
template <ExactField F>
bool is_symmetric(const Polynomial<F>& p) {
  const std::size_t n = p.num_vars();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::swap(perm[i], perm[i + 1]);
    if (!(permute_variables(p, perm) == p)) return false;
  }
  return true;
}

// p(f_1(x), ..., f_m(x)) for a symmetric p in m variables.
template <ExactField F>
Polynomial<F> pullback_symmetric(const Polynomial<F>& p, std::span<const LinearForm<F>> forms) {
  if (forms.size() != p.num_vars())
    throw DimensionMismatch("pullback_symmetric: " + std::to_string(forms.size()) + " forms for " +
                            std::to_string(p.num_vars()) + " variables");
  if (forms.empty()) throw DomainError("pullback_symmetric: empty form list");
  if (!is_symmetric(p)) throw DomainError("pullback_symmetric: polynomial is not symmetric");
  std::vector<Polynomial<F>> values;
  for (const auto& f : forms) {
    if (f.num_vars() != forms.front().num_vars()) throw DimensionMismatch("forms in different variable counts");
    values.push_back(f.to_polynomial());
  }
  return substitute<F>(p, values, forms.front().num_vars());
}

// dims[k] = dimension of the span of all products of generators of total
// degree k, for k = 0..D. Uses A_k = sum_g g * A_{k - deg g}.
template <ExactField F>
std::vector<std::size_t> subalgebra_graded_dims(std::span<const Polynomial<F>> gens, std::uint32_t degree) {
  std::vector<std::size_t> dims(degree + 1, 0);
  dims[0] = 1;
  if (gens.empty()) return dims;
  const F& field = gens.front().field();
  const std::size_t n = gens.front().num_vars();

  std::vector<std::pair<std::uint32_t, const Polynomial<F>*>> useful;
  for (const auto& g : gens) {
    if (g.num_vars() != n || !(g.field() == field)) throw DimensionMismatch("generators from different rings");
    if (!g.is_homogeneous()) throw DomainError("inhomogeneous generator");
    if (g.degree() >= 1) useful.emplace_back(static_cast<std::uint32_t>(g.degree()), &g);
  }

  std::vector<std::vector<Polynomial<F>>> bases(degree + 1);
  bases[0].push_back(Polynomial<F>::constant(field, n, field.one()));
  for (std::uint32_t k = 1; k <= degree; ++k) {
    std::vector<Polynomial<F>> products;
    for (const auto& [e, g] : useful)
      if (e <= k)
        for (const auto& b : bases[k - e]) products.push_back(*g * b);
    bases[k] = reduced_basis<F>(products);
    dims[k] = bases[k].size();
  }
  return dims;
}

struct DegreeComparison {
  std::uint32_t degree = 0;
  std::size_t subalgebra_dim = 0;
  std::size_t invariant_dim = 0;
  bool equal() const { return subalgebra_dim == invariant_dim; }
};

template <ExactField F>
struct GenerationReport {
  std::vector<std::vector<LinearForm<F>>> orbits;
  std::vector<Polynomial<F>> chern_classes;
  std::vector<DegreeComparison> degrees;

  // False means the seeds were insufficient through the checked degree.
  bool generated() const {
    for (const auto& d : degrees)
      if (!d.equal()) return false;
    return true;
  }
};

// All orbit Chern classes of the seeds' orbits against the invariant ring,
// degree by degree up to D.
template <ExactField F>
GenerationReport<F> generation_check(const GroupAction<F>& phi, std::span<const LinearForm<F>> seeds,
                                     std::uint32_t degree) {
  check_characteristic(phi.field(), phi.order());
  GenerationReport<F> report;
  for (const auto& seed : seeds) {
    auto orbit = orbit_of_form(seed, phi);
    for (std::size_t r = 1; r <= orbit.size(); ++r) {
      auto c = orbit_chern<F>(orbit, r);
      if (!c.is_zero()) report.chern_classes.push_back(std::move(c));
    }
    report.orbits.push_back(std::move(orbit));
  }
  const auto sub = subalgebra_graded_dims<F>(report.chern_classes, degree);
  for (std::uint32_t k = 0; k <= degree; ++k) report.degrees.push_back({k, sub[k], invariant_dim(phi, k)});
  return report;
}

// The Z/2 = {+-I} action on Q[x, y]: xy is invariant, is never a symmetric
// pullback along a single invariant form multiset, yet lies in the algebra
// generated by orbit Chern classes.
struct Z2Report {
  bool xy_invariant = false;
  std::size_t trials = 0;
  // Trials where every quadratic symmetric pullback was a multiple of
  // q = sum_i (a_i x + b_i y)^2.
  std::size_t pullbacks_on_square_sum_line = 0;
  // Trials where q had a nonzero x^2 or y^2 coefficient, forcing c = 0 in
  // xy = c q.
  std::size_t coefficient_obstructions = 0;
  // Trials where xy fell in the span of the pullbacks (expected: none).
  std::size_t single_image_hits = 0;
  bool polarization_identity = false;
  bool algebra_membership = false;

  bool certified() const {
    return xy_invariant && pullbacks_on_square_sum_line == trials && coefficient_obstructions == trials &&
           single_image_hits == 0 && polarization_identity && algebra_membership;
  }
};

inline Z2Report z2_counterexample_report(std::uint64_t seed = 0, std::size_t trials = 50) {
  using P = Polynomial<Rationals>;
  using L = LinearForm<Rationals>;
  const Rationals q;
  const auto minus_identity = Matrix<Rationals>::from_ints(q, {{-1, 0}, {0, -1}});
  const auto group = close_group(q, 2, {minus_identity});
  const P x = P::variable(q, 2, 0), y = P::variable(q, 2, 1);
  const P xy = x * y;

  Z2Report report;
  report.xy_invariant = is_invariant(xy, group);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> pairs(1, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = pairs(rng);
    std::vector<L> forms;
    P square_sum(q, 2);
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t a = 0, b = 0;
      while (a == 0 && b == 0) {
        a = coeff(rng);
        b = coeff(rng);
      }
      L f(q, {q.from_int(a), q.from_int(b)});
      forms.push_back(f);
      forms.push_back(f.scaled(q.from_int(-1)));
      const P fp = f.to_polynomial();
      square_sum += fp * fp;
    }
    // Quadratic symmetric polynomials in 2k variables are spanned by E_1^2 and E_2.
    const std::size_t m = 2 * k;
    const P e1 = elem_sym(1, m, q);
    const std::vector<P> images{pullback_symmetric<Rationals>(e1 * e1, forms),
                                pullback_symmetric<Rationals>(elem_sym(2, m, q), forms)};

    bool on_line = true;
    for (const auto& img : images) on_line = on_line && span_rank<Rationals>(std::vector<P>{square_sum, img}) <= 1;
    report.pullbacks_on_square_sum_line += on_line;

    const auto sq_x = square_sum.coefficient(ExponentVector{2, 0});
    const auto sq_y = square_sum.coefficient(ExponentVector{0, 2});
    report.coefficient_obstructions += !is_zero(sq_x) || !is_zero(sq_y);

    report.single_image_hits += in_span<Rationals>(xy, images);
    ++report.trials;
  }

  const P sum = x + y;
  report.polarization_identity = xy == (sum * sum - x * x - y * y) * Rational(1, 2);

  const std::vector<L> seeds{L::coordinate(q, 2, 0), L::coordinate(q, 2, 1), L(q, {q.one(), q.one()})};
  std::vector<P> chern;
  for (const auto& s : seeds) {
    const auto orbit = orbit_of_form(s, group);
    for (std::size_t r = 1; r <= orbit.size(); ++r) chern.push_back(orbit_chern<Rationals>(orbit, r));
  }
  std::vector<P> quadratic;
  for (const auto& c : chern)
    if (c.degree() == 2) quadratic.push_back(c);
  report.algebra_membership = in_span<Rationals>(xy, quadratic);
  return report;
}

}  // namespace esfano::invariants
