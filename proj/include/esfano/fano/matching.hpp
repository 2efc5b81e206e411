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

// Perfect matchings of {1..2d} and the isolated Fano points they label:
// for each matching, the d-plane cut out by x_a + x_b = 0 over its pairs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/fano/membership.hpp"
#include "esfano/fano/plane.hpp"
#include "esfano/linalg.hpp"
#include "esfano/scalar.hpp"

namespace esfano::fano {

// Pairs are 0-based, each with first < second, sorted by first element.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }

  // 1-based, e.g. "{1,3}{2,4}".
  std::string to_string() const {
    std::string s;
    for (const auto& [a, b] : pairs) s += "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
    return s;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

// (2d-1)!! = 1 * 3 * ... * (2d-1).
inline std::uint64_t odd_double_factorial(std::uint64_t d) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k < 2 * d; k += 2) r *= k;
  return r;
}

// Visits every matching in lexicographic order of the sorted pair lists:
// the smallest unused element is paired with each larger unused one in turn.
inline void for_each_matching(std::size_t two_d, const std::function<void(const Matching&)>& visit) {
  if (two_d < 2 || two_d % 2 != 0)
    throw DomainError("matchings need an even set size >= 2, got " + std::to_string(two_d));
  Matching current;
  std::vector<bool> used(two_d, false);
  std::function<void()> extend = [&] {
    std::size_t first = 0;
    while (first < two_d && used[first]) ++first;
    if (first == two_d) {
      visit(current);
      return;
    }
    used[first] = true;
    for (std::size_t partner = first + 1; partner < two_d; ++partner) {
      if (used[partner]) continue;
      used[partner] = true;
      current.pairs.emplace_back(first, partner);
      extend();
      current.pairs.pop_back();
      used[partner] = false;
    }
    used[first] = false;
  };
  extend();
}

inline std::vector<Matching> matchings(std::size_t two_d) {
  std::vector<Matching> out;
  for_each_matching(two_d, [&](const Matching& mt) { out.push_back(mt); });
  return out;
}

// Row alpha is e_a - e_b for the alpha-th pair (a, b).
template <ExactField F>
PlaneMatrix<F> matching_plane(const Matching& matching, const F& field) {
  const std::size_t d = matching.size();
  Matrix<F> t(field, d, 2 * d);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    t(alpha, matching.pairs[alpha].first) = field.one();
    t(alpha, matching.pairs[alpha].second) = -field.one();
  }
  return PlaneMatrix<F>(std::move(t));
}

// The partition certificate of a matching plane: classes are the pairs,
// representatives the unit vectors, scalars +1 / -1.
template <ExactField F>
PartitionCertificate<F> matching_certificate(const Matching& matching, const F& field) {
  const std::size_t d = matching.size();
  PartitionCertificate<F> cert;
  cert.scalars.assign(2 * d, field.one());
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    const auto [a, b] = matching.pairs[alpha];
    cert.classes.push_back({a, b});
    std::vector<typename F::value_type> unit(d, field.zero());
    unit[alpha] = field.one();
    cert.representatives.push_back(std::move(unit));
    cert.scalars[b] = -field.one();
  }
  return cert;
}

template <ExactField F>
std::vector<std::pair<Matching, PlaneMatrix<F>>> enumerate_isolated(std::size_t d, const F& field) {
  if (d < 1) throw DomainError("enumerate_isolated needs d >= 1");
  std::vector<std::pair<Matching, PlaneMatrix<F>>> out;
  for_each_matching(2 * d, [&](const Matching& mt) { out.emplace_back(mt, matching_plane(mt, field)); });
  return out;
}

}  // namespace esfano::fano
