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

// Sparse multivariate polynomials over an exact field. Variables are
// positional (0..n-1); names only appear when formatting. Terms are kept in
// descending graded-lexicographic order with no stored zero coefficients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/linalg.hpp"
#include "esfano/scalar.hpp"

namespace esfano {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t num_vars) : e_(num_vars, 0) {}
  explicit ExponentVector(std::vector<std::uint32_t> e) : e_(std::move(e)) { recount(); }
  ExponentVector(std::initializer_list<std::uint32_t> e) : e_(e) { recount(); }

  static ExponentVector unit(std::size_t num_vars, std::size_t var, std::uint32_t power = 1) {
    ExponentVector v(num_vars);
    v.set(var, power);
    return v;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t total_degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  void set(std::size_t i, std::uint32_t power) {
    degree_ = degree_ - e_[i] + power;
    e_[i] = power;
  }

  // Exponents [first, first + count) as a vector of their own.
  ExponentVector slice(std::size_t first, std::size_t count) const {
    return ExponentVector(std::vector<std::uint32_t>(e_.begin() + first, e_.begin() + first + count));
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("monomials in different variable counts");
    ExponentVector c = a;
    for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
    c.degree_ += b.degree_;
    return c;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }

 private:
  void recount() {
    degree_ = 0;
    for (auto x : e_) degree_ += x;
  }

  std::vector<std::uint32_t> e_;
  std::uint64_t degree_ = 0;
};

// Higher total degree first; ties broken lexicographically, larger first.
struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.exponents() > b.exponents();
  }
};

// All exponent vectors of total degree `degree` in `num_vars` variables, in
// GrlexDescending order.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
  std::vector<ExponentVector> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(num_vars, 0);
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == num_vars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      fill(i + 1, left - k);
    }
  };
  fill(0, degree);
  return out;
}

template <ExactField F>
class Polynomial {
 public:
  using Field = F;
  using Scalar = typename F::value_type;
  using TermMap = std::map<ExponentVector, Scalar, GrlexDescending>;

  Polynomial(F field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}

  static Polynomial constant(F field, std::size_t num_vars, const Scalar& c) {
    Polynomial p(field, num_vars);
    p.add_term(ExponentVector(num_vars), c);
    return p;
  }

  static Polynomial variable(F field, std::size_t num_vars, std::size_t var) {
    if (var >= num_vars) throw DomainError("variable index out of range");
    Polynomial p(field, num_vars);
    p.add_term(ExponentVector::unit(num_vars, var), field.one());
    return p;
  }

  const F& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  std::int64_t degree() const {
    return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.begin()->first.total_degree());
  }

  bool is_homogeneous() const {
    return terms_.empty() ||
           terms_.begin()->first.total_degree() == terms_.rbegin()->first.total_degree();
  }

  Scalar coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const ExponentVector& e, const Scalar& c) {
    if (e.size() != num_vars_)
      throw DimensionMismatch("monomial with " + std::to_string(e.size()) + " exponents in a " +
                              std::to_string(num_vars_) + "-variable ring");
    if (esfano::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = it->second + c;
    if (esfano::is_zero(it->second)) terms_.erase(it);
  }

  Polynomial& operator+=(const Polynomial& b) {
    check_compatible(b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& b) {
    check_compatible(b);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Scalar& c) {
    if (esfano::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v = v * c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        const Scalar prod = ca * cb;
        auto [it, inserted] = r.terms_.try_emplace(ea + eb, prod);
        if (!inserted) it->second = it->second + prod;
      }
    std::erase_if(r.terms_, [](const auto& t) { return esfano::is_zero(t.second); });
    return r;
  }

  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(field_, num_vars_, field_.one());
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("evaluation point has wrong length");
    Scalar total = field_.zero();
    for (const auto& [e, c] : terms_) {
      Scalar v = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) v = v * point[i];
      total = total + v;
    }
    return total;
  }

  // Largest-first term; the polynomial must be nonzero.
  const std::pair<const ExponentVector, Scalar>& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.begin();
  }

 private:
  void check_compatible(const Polynomial& b) const {
    if (!(field_ == b.field_)) throw FieldMismatch("polynomials over " + field_.name() + " and " +
                                                   b.field_.name());
    if (num_vars_ != b.num_vars_)
      throw DimensionMismatch("polynomials in " + std::to_string(num_vars_) + " and " +
                              std::to_string(b.num_vars_) + " variables");
  }

  F field_;
  std::size_t num_vars_;
  TermMap terms_;
};

template <ExactField F>
class LinearForm {
 public:
  using Scalar = typename F::value_type;

  LinearForm(F field, std::vector<Scalar> coefficients)
      : field_(field), coefficients_(std::move(coefficients)) {}

  static LinearForm coordinate(F field, std::size_t num_vars, std::size_t var) {
    std::vector<Scalar> c(num_vars, field.zero());
    c.at(var) = field.one();
    return LinearForm(field, std::move(c));
  }

  const F& field() const { return field_; }
  std::size_t num_vars() const { return coefficients_.size(); }
  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  const Scalar& operator[](std::size_t i) const { return coefficients_[i]; }

  bool is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Scalar& c) { return esfano::is_zero(c); });
  }

  Polynomial<F> to_polynomial() const {
    Polynomial<F> p(field_, num_vars());
    for (std::size_t i = 0; i < num_vars(); ++i)
      p.add_term(ExponentVector::unit(num_vars(), i), coefficients_[i]);
    return p;
  }

  LinearForm scaled(const Scalar& c) const {
    LinearForm r = *this;
    for (auto& v : r.coefficients_) v = v * c;
    return r;
  }

  // The form x -> f(M x), i.e. the row vector f times M.
  LinearForm compose(const Matrix<F>& m) const {
    if (m.rows() != num_vars()) throw DimensionMismatch("form/matrix size mismatch");
    std::vector<Scalar> out(m.cols(), field_.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (esfano::is_zero(coefficients_[i])) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + coefficients_[i] * m(i, j);
    }
    return LinearForm(field_, std::move(out));
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.field_ == b.field_ && a.coefficients_ == b.coefficients_;
  }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    return a.coefficients_ < b.coefficients_;
  }

 private:
  F field_;
  std::vector<Scalar> coefficients_;
};

// The m column forms L_j(s) = sum_i T(i, j) s_i of a d x m matrix.
template <ExactField F>
std::vector<LinearForm<F>> column_forms(const Matrix<F>& t) {
  std::vector<LinearForm<F>> forms;
  forms.reserve(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) forms.emplace_back(t.field(), t.column(j));
  return forms;
}

// E_r(values) via the coefficient of t^r in prod (1 + v t), truncated at t^r.
template <ExactField F>
Polynomial<F> esym_at(const F& field, std::size_t num_vars, std::span<const Polynomial<F>> values,
                      std::size_t r) {
  std::vector<Polynomial<F>> e(r + 1, Polynomial<F>(field, num_vars));
  e[0] = Polynomial<F>::constant(field, num_vars, field.one());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = std::min(i + 1, r); k >= 1; --k) e[k] += e[k - 1] * values[i];
  return e[r];
}

template <ExactField F>
Polynomial<F> elem_sym(std::size_t r, std::size_t m, const F& field) {
  if (r > m)
    throw DomainError("elem_sym: r = " + std::to_string(r) + " exceeds m = " + std::to_string(m));
  std::vector<Polynomial<F>> vars;
  for (std::size_t j = 0; j < m; ++j) vars.push_back(Polynomial<F>::variable(field, m, j));
  return esym_at<F>(field, m, vars, r);
}

// E_{m-1}(v_1..v_m) = sum_j prod_{k != j} v_k from prefix and suffix products.
template <ExactField F>
Polynomial<F> esym_top_at(std::span<const Polynomial<F>> values) {
  if (values.empty()) throw DomainError("esym_top_at: empty value list");
  const std::size_t m = values.size();
  const F& field = values.front().field();
  const std::size_t n = values.front().num_vars();
  const auto one = Polynomial<F>::constant(field, n, field.one());
  std::vector<Polynomial<F>> suffix(m + 1, one);
  for (std::size_t j = m - 1; j >= 1; --j) suffix[j] = suffix[j + 1] * values[j];
  Polynomial<F> prefix = one;
  Polynomial<F> total(field, n);
  for (std::size_t j = 0; j < m; ++j) {
    total += prefix * suffix[j + 1];
    if (j + 1 < m) prefix *= values[j];
  }
  return total;
}

template <ExactField F>
Polynomial<F> esym_top_at_forms(std::span<const LinearForm<F>> forms) {
  if (forms.empty()) throw DomainError("esym_top_at_forms: empty form list");
  std::vector<Polynomial<F>> polys;
  polys.reserve(forms.size());
  for (const auto& f : forms) {
    if (f.num_vars() != forms.front().num_vars())
      throw DimensionMismatch("forms in different variable counts");
    polys.push_back(f.to_polynomial());
  }
  return esym_top_at<F>(polys);
}

// f(values[0], ..., values[n-1]).
template <ExactField F>
Polynomial<F> substitute(const Polynomial<F>& f, std::span<const Polynomial<F>> values,
                         std::size_t target_vars) {
  if (values.size() != f.num_vars())
    throw DimensionMismatch("substitute: " + std::to_string(values.size()) + " values for " +
                            std::to_string(f.num_vars()) + " variables");
  const F& field = f.field();
  // powers[j][k] = values[j]^k, grown on demand.
  std::vector<std::vector<Polynomial<F>>> powers(values.size());
  auto power = [&](std::size_t j, std::uint32_t k) -> const Polynomial<F>& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(Polynomial<F>::constant(field, target_vars, field.one()));
    while (pw.size() <= k) pw.push_back(pw.back() * values[j]);
    return pw[k];
  };
  Polynomial<F> result(field, target_vars);
  for (const auto& [e, c] : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(field, target_vars, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) term *= power(j, e[j]);
    result += term;
  }
  return result;
}

// f evaluated at the column forms of t (d rows, m = f.num_vars() columns).
template <ExactField F>
Polynomial<F> substitute_linear_forms(const Polynomial<F>& f, const Matrix<F>& t) {
  if (t.cols() != f.num_vars())
    throw DimensionMismatch("substitute_linear_forms: matrix has " + std::to_string(t.cols()) +
                            " columns, polynomial has " + std::to_string(f.num_vars()) +
                            " variables");
  if (!(t.field() == f.field())) throw FieldMismatch("substitute_linear_forms: field mismatch");
  std::vector<Polynomial<F>> values;
  for (const auto& form : column_forms(t)) values.push_back(form.to_polynomial());
  return substitute<F>(f, values, t.rows());
}

template <ExactField F>
typename Polynomial<F>::TermMap coefficient_extraction(const Polynomial<F>& g) {
  return g.terms();
}

// Splits g by the exponents of its first `leading` variables. Each value is a
// polynomial in the remaining num_vars - leading variables.
template <ExactField F>
std::map<ExponentVector, Polynomial<F>, GrlexDescending> collect_leading(const Polynomial<F>& g,
                                                                         std::size_t leading) {
  if (leading > g.num_vars()) throw DomainError("collect_leading: too many leading variables");
  const std::size_t rest = g.num_vars() - leading;
  std::map<ExponentVector, Polynomial<F>, GrlexDescending> out;
  for (const auto& [e, c] : g.terms()) {
    auto [it, inserted] = out.try_emplace(e.slice(0, leading), g.field(), rest);
    it->second.add_term(e.slice(leading, rest), c);
  }
  return out;
}

template <ExactField F>
Polynomial<F> permute_variables(const Polynomial<F>& f, const std::vector<std::size_t>& perm) {
  if (perm.size() != f.num_vars()) throw DimensionMismatch("permutation length mismatch");
  Polynomial<F> r(f.field(), f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector moved(f.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) moved.set(perm[i], e[i]);
    r.add_term(moved, c);
  }
  return r;
}

// A reduced basis of span(polys): the nonzero rows of the row-reduced
// coefficient matrix over the monomials that occur.
template <ExactField F>
std::vector<Polynomial<F>> reduced_basis(std::span<const Polynomial<F>> polys) {
  if (polys.empty()) return {};
  const F& field = polys.front().field();
  const std::size_t n = polys.front().num_vars();
  std::map<ExponentVector, std::size_t, GrlexDescending> column;
  for (const auto& p : polys) {
    if (p.num_vars() != n || !(p.field() == field))
      throw DimensionMismatch("reduced_basis: polynomials from different rings");
    for (const auto& [e, c] : p.terms()) column.try_emplace(e, 0);
  }
  std::vector<ExponentVector> monomials;
  for (auto& [e, idx] : column) {
    idx = monomials.size();
    monomials.push_back(e);
  }
  Matrix<F> coeffs(field, polys.size(), monomials.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [e, c] : polys[r].terms()) coeffs(r, column.at(e)) = c;
  const auto echelon = rref(std::move(coeffs));
  std::vector<Polynomial<F>> basis;
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
    Polynomial<F> b(field, n);
    for (std::size_t k = 0; k < monomials.size(); ++k) b.add_term(monomials[k], echelon.reduced(r, k));
    basis.push_back(std::move(b));
  }
  return basis;
}

template <ExactField F>
std::size_t span_rank(std::span<const Polynomial<F>> polys) {
  return reduced_basis<F>(polys).size();
}

template <ExactField F>
bool in_span(const Polynomial<F>& p, std::span<const Polynomial<F>> polys) {
  std::vector<Polynomial<F>> extended(polys.begin(), polys.end());
  extended.push_back(p);
  return span_rank<F>(extended) == span_rank<F>(polys);
}

using VariableNamer = std::function<std::string(std::size_t)>;

inline VariableNamer indexed_names(std::string prefix) {
  return [prefix = std::move(prefix)](std::size_t i) { return prefix + std::to_string(i + 1); };
}

inline std::string monomial_to_string(const ExponentVector& e, const VariableNamer& name) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

template <ExactField F>
std::string to_string(const Polynomial<F>& p, const VariableNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string coeff = to_string(c);
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    std::string term;
    if (e.total_degree() == 0)
      term = coeff;
    else if (coeff == "1")
      term = monomial_to_string(e, name);
    else
      term = coeff + "*" + monomial_to_string(e, name);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

template <ExactField F>
std::string to_string(const Polynomial<F>& p) {
  return to_string(p, indexed_names("x"));
}

}  // namespace esfano
