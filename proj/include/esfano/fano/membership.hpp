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

// Fano membership of a plane: the direct test (E_{m-1} at the column forms
// vanishes identically) and the structural classification into the two
// certificate families (two zero columns, or proportionality classes whose
// scalar reciprocals sum to zero).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/fano/plane.hpp"
#include "esfano/linalg.hpp"
#include "esfano/polynomial.hpp"
#include "esfano/scalar.hpp"

namespace esfano::fano {

template <ExactField F>
struct ProportionalityClasses {
  using Scalar = typename F::value_type;

  // Member indices per class; classes ordered by their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  // Normalized so the first nonzero entry is 1.
  std::vector<std::vector<Scalar>> representatives;
  // vectors[j] == scalars[j] * representatives[class_of[j]].
  std::vector<Scalar> scalars;
  std::vector<std::size_t> class_of;
};

template <ExactField F>
ProportionalityClasses<F> proportionality_classes(
    const std::vector<std::vector<typename F::value_type>>& vectors) {
  using Scalar = typename F::value_type;
  ProportionalityClasses<F> out;
  std::map<std::vector<Scalar>, std::size_t> index;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const auto& v = vectors[j];
    std::size_t lead = 0;
    while (lead < v.size() && is_zero(v[lead])) ++lead;
    if (lead == v.size()) throw DomainError("proportionality classes of a zero vector");
    const Scalar c = v[lead];
    const Scalar c_inv = inverse(c);
    std::vector<Scalar> normalized;
    normalized.reserve(v.size());
    for (const auto& x : v) normalized.push_back(x * c_inv);
    auto [it, inserted] = index.try_emplace(normalized, out.classes.size());
    if (inserted) {
      out.classes.emplace_back();
      out.representatives.push_back(std::move(normalized));
    }
    out.classes[it->second].push_back(j);
    out.class_of.push_back(it->second);
    out.scalars.push_back(c);
  }
  return out;
}

struct ZeroPair {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const ZeroPair&, const ZeroPair&) = default;
};

template <ExactField F>
struct PartitionCertificate {
  using Scalar = typename F::value_type;

  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<Scalar>> representatives;
  std::vector<Scalar> scalars;

  std::size_t num_classes() const { return classes.size(); }
  friend bool operator==(const PartitionCertificate&, const PartitionCertificate&) = default;
};

// The witness is an s-monomial whose coefficient in E_{m-1}((s) * T) is
// nonzero. It is empty only if the structural and direct routes disagree.
struct NonMember {
  std::optional<ExponentVector> witness;
};

template <ExactField F>
using Certificate = std::variant<ZeroPair, PartitionCertificate<F>, NonMember>;

template <ExactField F>
struct MembershipVerdict {
  bool member = false;
  Certificate<F> certificate;
  // Partition certificates only: the number of classes equals d, so the
  // plane is the whole class span V_{pi,c}.
  bool spans_full_class_space = false;

  std::string kind() const {
    switch (certificate.index()) {
      case 0: return "zero_pair";
      case 1: return "partition";
      default: return "non_member";
    }
  }
};

template <ExactField F>
Polynomial<F> direct_expansion(const PlaneMatrix<F>& t) {
  const auto forms = column_forms(t.matrix());
  return esym_top_at_forms<F>(forms);
}

template <ExactField F>
bool is_member_direct(const PlaneMatrix<F>& t) {
  return direct_expansion(t).is_zero();
}

namespace detail {

template <ExactField F>
std::optional<ExponentVector> leading_monomial(const Polynomial<F>& p) {
  if (p.is_zero()) return std::nullopt;
  return p.leading_term().first;
}

}  // namespace detail

template <ExactField F>
MembershipVerdict<F> classify(const PlaneMatrix<F>& t) {
  using Scalar = typename F::value_type;
  const Matrix<F>& mat = t.matrix();
  const F& field = t.field();

  std::vector<std::size_t> zero_columns;
  for (std::size_t j = 0; j < t.m(); ++j)
    if (mat.column_is_zero(j)) zero_columns.push_back(j);

  if (zero_columns.size() >= 2) return {true, ZeroPair{zero_columns[0], zero_columns[1]}, false};

  if (zero_columns.size() == 1) {
    // E_{m-1} collapses to the product of the other column forms, which is
    // nonzero in a polynomial ring.
    Polynomial<F> product = Polynomial<F>::constant(field, t.d(), field.one());
    for (std::size_t j = 0; j < t.m(); ++j)
      if (j != zero_columns[0]) product *= LinearForm<F>(field, mat.column(j)).to_polynomial();
    return {false, NonMember{detail::leading_monomial(product)}, false};
  }

  std::vector<std::vector<Scalar>> columns;
  for (std::size_t j = 0; j < t.m(); ++j) columns.push_back(mat.column(j));
  auto groups = proportionality_classes<F>(columns);

  bool reciprocals_vanish = true;
  for (const auto& cls : groups.classes) {
    Scalar sum = field.zero();
    for (auto j : cls) sum = sum + inverse(groups.scalars[j]);
    if (!is_zero(sum)) {
      reciprocals_vanish = false;
      break;
    }
  }

  if (!reciprocals_vanish)
    return {false, NonMember{detail::leading_monomial(direct_expansion(t))}, false};

  PartitionCertificate<F> cert{std::move(groups.classes), std::move(groups.representatives),
                               std::move(groups.scalars)};
  const bool full = cert.num_classes() == t.d();
  return {true, std::move(cert), full};
}

// Re-checks a certificate against the matrix without re-deriving it.
// Malformed certificates yield false.
template <ExactField F>
bool verify_certificate(const PlaneMatrix<F>& t, const Certificate<F>& certificate) {
  using Scalar = typename F::value_type;
  const Matrix<F>& mat = t.matrix();
  const F& field = t.field();
  const std::size_t d = t.d();
  const std::size_t m = t.m();

  if (const auto* zp = std::get_if<ZeroPair>(&certificate)) {
    return zp->first != zp->second && zp->first < m && zp->second < m &&
           mat.column_is_zero(zp->first) && mat.column_is_zero(zp->second);
  }

  if (const auto* nm = std::get_if<NonMember>(&certificate)) {
    if (!nm->witness || nm->witness->size() != d) return false;
    return !is_zero(direct_expansion(t).coefficient(*nm->witness));
  }

  const auto& cert = std::get<PartitionCertificate<F>>(certificate);
  if (cert.scalars.size() != m || cert.representatives.size() != cert.classes.size()) return false;

  std::vector<std::size_t> class_of(m, cert.classes.size());
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    if (cert.classes[i].size() < 2) return false;
    for (auto j : cert.classes[i]) {
      if (j >= m || class_of[j] != cert.classes.size()) return false;
      class_of[j] = i;
    }
  }
  for (auto c : class_of)
    if (c == cert.classes.size()) return false;

  for (const auto& v : cert.representatives) {
    if (v.size() != d) return false;
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_zero(x); })) return false;
  }

  for (std::size_t j = 0; j < m; ++j) {
    const Scalar& c = cert.scalars[j];
    if (is_zero(c)) return false;
    const auto& v = cert.representatives[class_of[j]];
    for (std::size_t i = 0; i < d; ++i)
      if (!(mat(i, j) == c * v[i])) return false;
  }

  for (const auto& cls : cert.classes) {
    Scalar sum = field.zero();
    for (auto j : cls) sum = sum + inverse(cert.scalars[j]);
    if (!is_zero(sum)) return false;
  }

  for (std::size_t a = 0; a < cert.representatives.size(); ++a)
    for (std::size_t b = a + 1; b < cert.representatives.size(); ++b) {
      Matrix<F> pair(field, {cert.representatives[a], cert.representatives[b]});
      if (rank(pair) != 2) return false;
    }
  return true;
}

}  // namespace esfano::fano
