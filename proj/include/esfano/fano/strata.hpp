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

// Strata of the Fano scheme indexed by column partitions: their dimension
// and random members drawn from the class spans V_{pi,c}.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/fano/plane.hpp"
#include "esfano/linalg.hpp"
#include "esfano/scalar.hpp"

namespace esfano::fano {

// Blocks of 0-based column indices.
using Partition = std::vector<std::vector<std::size_t>>;

// Returns m, the size of the set the partition covers.
inline std::size_t validate_partition(const Partition& pi) {
  std::size_t m = 0;
  for (const auto& block : pi) {
    if (block.empty()) throw DomainError("partition has an empty block");
    m += block.size();
  }
  std::vector<bool> seen(m, false);
  for (const auto& block : pi)
    for (auto j : block) {
      if (j >= m || seen[j]) throw DomainError("blocks do not partition {1.." + std::to_string(m) + "}");
      seen[j] = true;
    }
  return m;
}

// Per class, the scalars satisfy one reciprocal relation modulo one overall
// scaling: sum over classes of (|class| - 2) = m - 2 * #classes.
inline std::int64_t stratum_dimension(const Partition& pi) {
  const auto m = static_cast<std::int64_t>(validate_partition(pi));
  for (const auto& block : pi)
    if (block.size() < 2) throw DomainError("singleton class cannot satisfy the reciprocal condition");
  return m - 2 * static_cast<std::int64_t>(pi.size());
}

template <ExactField F>
bool reciprocals_vanish(const Partition& pi, const std::vector<typename F::value_type>& c,
                        const F& field) {
  for (const auto& block : pi) {
    typename F::value_type sum = field.zero();
    for (auto j : block) {
      if (is_zero(c[j])) return false;
      sum = sum + inverse(c[j]);
    }
    if (!is_zero(sum)) return false;
  }
  return true;
}

// Random nonzero scalars with vanishing reciprocal sum on every block (all
// blocks of size >= 2). Entries are small integers except the last of each
// block, which is solved for.
template <ExactField F, class Rng>
std::vector<typename F::value_type> random_valid_scalars(const Partition& pi, const F& field, Rng& rng) {
  using Scalar = typename F::value_type;
  const std::size_t m = validate_partition(pi);
  std::vector<Scalar> c(m, field.one());
  std::uniform_int_distribution<std::int64_t> draw(-6, 6);
  for (const auto& block : pi) {
    if (block.size() < 2) throw DomainError("singleton class cannot satisfy the reciprocal condition");
    for (int attempt = 0;; ++attempt) {
      if (attempt == 10000)
        throw DomainError("no valid scalars found for a block of size " + std::to_string(block.size()) +
                          " over " + field.name());
      Scalar sum = field.zero();
      bool ok = true;
      for (std::size_t k = 0; k + 1 < block.size(); ++k) {
        Scalar v = field.from_int(draw(rng));
        if (is_zero(v)) {
          ok = false;
          break;
        }
        c[block[k]] = v;
        sum = sum + inverse(v);
      }
      if (!ok || is_zero(sum)) continue;
      c[block.back()] = -inverse(sum);
      break;
    }
  }
  return c;
}

// A d-plane inside V_{pi,c}. With d == #classes this is V_{pi,c} itself,
// rows being the class vectors w_i = sum_{j in class i} c_j e_j; otherwise
// the rows are a random full-rank integer combination of the w_i.
template <ExactField F>
PlaneMatrix<F> sample_member(const Partition& pi, const std::vector<typename F::value_type>& c,
                             std::size_t d, std::uint64_t seed, const F& field) {
  const std::size_t m = validate_partition(pi);
  if (c.size() != m) throw DimensionMismatch("one scalar per column required");
  if (!reciprocals_vanish(pi, c, field))
    throw DomainError("invalid scalars: some class has a nonzero reciprocal sum");
  const std::size_t k = pi.size();
  if (d < 1 || d > k)
    throw DomainError("sample_member needs 1 <= d <= #classes = " + std::to_string(k));

  Matrix<F> w(field, k, m);
  for (std::size_t i = 0; i < k; ++i)
    for (auto j : pi[i]) w(i, j) = c[j];
  if (d == k) return PlaneMatrix<F>(std::move(w));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(-3, 3);
  while (true) {
    Matrix<F> mix(field, d, k);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < k; ++j) mix(i, j) = field.from_int(draw(rng));
    // The w_i have disjoint supports, so rank(mix * w) == rank(mix).
    if (rank(mix) == d) return PlaneMatrix<F>(mix * w);
  }
}

}  // namespace esfano::fano
