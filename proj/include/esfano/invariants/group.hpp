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

// Finite matrix groups acting on V, permutation actions on m symbols, and
// the intertwining condition rho_s U = U phi_s between them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/linalg.hpp"
#include "esfano/scalar.hpp"

namespace esfano::invariants {

inline constexpr std::size_t kDefaultClosureBudget = 10'000;

// Characteristic must be 0 or exceed the group order.
template <ExactField F>
void check_characteristic(const F& field, std::size_t order) {
  const auto p = field.characteristic();
  if (p != 0 && p <= order)
    throw CharacteristicError("characteristic " + std::to_string(p) + " does not exceed the group order " +
                              std::to_string(order));
}

template <ExactField F>
class GroupAction;

template <ExactField F>
GroupAction<F> close_group(const F& field, std::size_t n, const std::vector<Matrix<F>>& generators,
                           std::size_t budget = kDefaultClosureBudget);

template <ExactField F>
class GroupAction {
 public:
  // Checks that the list contains the identity and is closed under products
  // and inverses. Quadratic in the order; close_group is the usual entry.
  static GroupAction from_elements(F field, std::size_t n, std::vector<Matrix<F>> elements) {
    GroupAction g(field, n, std::move(elements));
    if (!g.index_of(Matrix<F>::identity(field, n))) throw DomainError("element list lacks the identity");
    for (std::size_t a = 0; a < g.order(); ++a) {
      auto inv = try_inverse(g.elements_[a]);
      if (!inv || !g.index_of(*inv)) throw DomainError("element list is not closed under inverses");
      for (std::size_t b = 0; b < g.order(); ++b)
        if (!g.index_of(g.elements_[a] * g.elements_[b]))
          throw DomainError("element list is not closed under multiplication");
    }
    return g;
  }

  const F& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix<F>>& elements() const { return elements_; }
  const Matrix<F>& operator[](std::size_t s) const { return elements_[s]; }

  std::optional<std::size_t> index_of(const Matrix<F>& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t product_index(std::size_t a, std::size_t b) const {
    return *index_of(elements_[a] * elements_[b]);
  }

 private:
  template <ExactField G>
  friend GroupAction<G> close_group(const G&, std::size_t, const std::vector<Matrix<G>>&, std::size_t);

  GroupAction(F field, std::size_t n, std::vector<Matrix<F>> elements)
      : field_(field), n_(n), elements_(std::move(elements)) {
    for (std::size_t s = 0; s < elements_.size(); ++s) {
      const auto& g = elements_[s];
      if (g.rows() != n_ || g.cols() != n_) throw DimensionMismatch("group element has shape " + g.shape());
      if (!(g.field() == field_)) throw FieldMismatch("group element over another field");
      if (!index_.try_emplace(g, s).second) throw DomainError("repeated group element");
    }
    check_characteristic(field_, order());
  }

  F field_;
  std::size_t n_;
  std::vector<Matrix<F>> elements_;
  std::map<Matrix<F>, std::size_t> index_;
};

// Breadth-first closure of the generators under right multiplication,
// starting from the identity. Element order is deterministic.
template <ExactField F>
GroupAction<F> close_group(const F& field, std::size_t n, const std::vector<Matrix<F>>& generators,
                           std::size_t budget) {
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator has shape " + g.shape());
    if (rank(g) != n) throw RankDeficient("non-invertible generator");
  }
  std::vector<Matrix<F>> elements{Matrix<F>::identity(field, n)};
  std::map<Matrix<F>, std::size_t> seen{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : generators) {
      Matrix<F> x = elements[i] * g;
      if (seen.contains(x)) continue;
      if (elements.size() == budget)
        throw BudgetExceeded("group closure exceeds " + std::to_string(budget) + " elements");
      seen.emplace(x, elements.size());
      elements.push_back(std::move(x));
    }
  return GroupAction<F>(field, n, std::move(elements));
}

// images[s][j] is where element s sends symbol j. As matrices, rho_s has a 1
// at (j, images[s][j]), so rho_{st} = rho_s rho_t reads
// images[st][j] == images[t][images[s][j]].
class PermutationAction {
 public:
  template <ExactField F>
  static PermutationAction make(const GroupAction<F>& group, std::vector<std::vector<std::size_t>> images) {
    if (images.size() != group.order())
      throw DimensionMismatch("one permutation per group element required");
    const std::size_t m = images.empty() ? 0 : images.front().size();
    for (const auto& perm : images) {
      if (perm.size() != m) throw DimensionMismatch("permutations of different sizes");
      std::vector<bool> hit(m, false);
      for (auto j : perm) {
        if (j >= m || hit[j]) throw DomainError("image list is not a permutation");
        hit[j] = true;
      }
    }
    for (std::size_t s = 0; s < group.order(); ++s)
      for (std::size_t t = 0; t < group.order(); ++t) {
        const auto& st = images[group.product_index(s, t)];
        for (std::size_t j = 0; j < m; ++j)
          if (st[j] != images[t][images[s][j]])
            throw DomainError("permutation assignment is not a homomorphism");
      }
    return PermutationAction(m, std::move(images));
  }

  std::size_t m() const { return m_; }
  const std::vector<std::vector<std::size_t>>& images() const { return images_; }
  const std::vector<std::size_t>& operator[](std::size_t s) const { return images_[s]; }

  template <ExactField F>
  Matrix<F> matrix(std::size_t s, const F& field) const {
    Matrix<F> rho(field, m_, m_);
    for (std::size_t j = 0; j < m_; ++j) rho(j, images_[s][j]) = field.one();
    return rho;
  }

  friend bool operator==(const PermutationAction&, const PermutationAction&) = default;

 private:
  PermutationAction(std::size_t m, std::vector<std::vector<std::size_t>> images)
      : m_(m), images_(std::move(images)) {}

  std::size_t m_;
  std::vector<std::vector<std::size_t>> images_;
};

template <ExactField F>
bool check_equivariance(const Matrix<F>& u, const GroupAction<F>& phi, const PermutationAction& rho) {
  if (u.cols() != phi.dimension() || u.rows() != rho.m() || rho.images().size() != phi.order())
    throw DimensionMismatch("U is " + u.shape() + " but the actions need " + std::to_string(rho.m()) + "x" +
                            std::to_string(phi.dimension()));
  for (std::size_t s = 0; s < phi.order(); ++s)
    if (!(rho.matrix(s, u.field()) * u == u * phi[s])) return false;
  return true;
}

// The permutation of U's rows induced by row_j -> row_j * phi_s.
template <ExactField F>
PermutationAction derive_permutation_rep(const Matrix<F>& u, const GroupAction<F>& phi) {
  using Scalar = typename F::value_type;
  if (u.cols() != phi.dimension()) throw DimensionMismatch("U has " + std::to_string(u.cols()) + " columns");
  std::map<std::vector<Scalar>, std::size_t> row_index;
  for (std::size_t j = 0; j < u.rows(); ++j)
    if (!row_index.try_emplace(u.row(j), j).second) throw DomainError("rows of U are not distinct");
  std::vector<std::vector<std::size_t>> images;
  for (std::size_t s = 0; s < phi.order(); ++s) {
    const Matrix<F> moved = u * phi[s];
    auto& perm = images.emplace_back();
    for (std::size_t j = 0; j < u.rows(); ++j) {
      auto it = row_index.find(moved.row(j));
      if (it == row_index.end())
        throw NotInvariantSet("row " + std::to_string(j + 1) + " leaves the row set under element " +
                              std::to_string(s + 1));
      perm.push_back(it->second);
    }
  }
  return PermutationAction::make(phi, std::move(images));
}

}  // namespace esfano::invariants
