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

// Exhaustive enumeration of the d-subspaces of F_p^m (each once, as its
// reduced row echelon matrix) and the classify-versus-direct cross check
// over all of them.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "esfano/errors.hpp"
#include "esfano/fano/membership.hpp"
#include "esfano/fano/plane.hpp"
#include "esfano/linalg.hpp"
#include "esfano/scalar.hpp"

namespace esfano::fano {

inline constexpr std::uint64_t kDefaultSubspaceBudget = 1'000'000;

// Number of d-dimensional subspaces of F_q^m.
inline Integer gaussian_binomial(std::size_t m, std::size_t d, std::uint64_t q) {
  if (d > m) return 0;
  Integer num = 1, den = 1, qi = q;
  for (std::size_t i = 0; i < d; ++i) {
    Integer qm = boost::multiprecision::pow(qi, static_cast<unsigned>(m - i));
    Integer qk = boost::multiprecision::pow(qi, static_cast<unsigned>(i + 1));
    num *= qm - 1;
    den *= qk - 1;
  }
  return num / den;
}

// Pivot column sets in lexicographic order.
inline std::vector<std::vector<std::size_t>> pivot_sets(std::size_t d, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s(d);
  for (std::size_t i = 0; i < d; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = d;
    while (i > 0 && s[i - 1] == m - d + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < d; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// Visits every RREF matrix with the given pivots. Free entries (right of the
// row's pivot, outside pivot columns) run through F_p like an odometer in
// row-major order, last entry fastest.
inline void for_each_rref_with_pivots(std::size_t d, std::size_t m, const PrimeField& field,
                                      const std::vector<std::size_t>& pivots,
                                      const std::function<void(const Matrix<PrimeField>&)>& visit) {
  std::vector<bool> is_pivot(m, false);
  for (auto j : pivots) is_pivot[j] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = pivots[i] + 1; j < m; ++j)
      if (!is_pivot[j]) free.emplace_back(i, j);

  Matrix<PrimeField> t(field, d, m);
  for (std::size_t i = 0; i < d; ++i) t(i, pivots[i]) = field.one();
  std::vector<std::uint32_t> digits(free.size(), 0);
  const std::uint32_t p = field.modulus();
  while (true) {
    visit(t);
    std::size_t k = free.size();
    while (k > 0) {
      --k;
      if (++digits[k] < p) {
        t(free[k].first, free[k].second) = Fp(digits[k], p);
        break;
      }
      digits[k] = 0;
      t(free[k].first, free[k].second) = field.zero();
      if (k == 0) return;
    }
    if (free.empty()) return;
  }
}

inline void check_budget(std::size_t d, std::size_t m, const PrimeField& field, std::uint64_t budget) {
  if (d < 1 || d > m)
    throw DomainError("subspace enumeration needs 1 <= d <= m, got d=" + std::to_string(d) +
                      ", m=" + std::to_string(m));
  const Integer count = gaussian_binomial(m, d, field.modulus());
  if (count > budget)
    throw BudgetExceeded(std::to_string(d) + "-subspaces of " + field.name() + "^" + std::to_string(m) +
                         " number " + count.str() + ", above the budget of " + std::to_string(budget));
}

inline void for_each_subspace(std::size_t d, std::size_t m, const PrimeField& field, std::uint64_t budget,
                              const std::function<void(const Matrix<PrimeField>&)>& visit) {
  check_budget(d, m, field, budget);
  for (const auto& pivots : pivot_sets(d, m)) for_each_rref_with_pivots(d, m, field, pivots, visit);
}

struct BruteForceResult {
  std::uint64_t total = 0;
  std::vector<PlaneMatrix<PrimeField>> members;
};

inline BruteForceResult brute_force_members(std::size_t d, std::size_t m, const PrimeField& field,
                                            std::uint64_t budget = kDefaultSubspaceBudget) {
  BruteForceResult out;
  for_each_subspace(d, m, field, budget, [&](const Matrix<PrimeField>& t) {
    ++out.total;
    PlaneMatrix<PrimeField> plane(t);
    if (is_member_direct(plane)) out.members.push_back(std::move(plane));
  });
  return out;
}

struct CrossCheckReport {
  std::size_t d = 0;
  std::size_t m = 0;
  std::uint32_t p = 0;
  std::uint64_t total = 0;
  std::uint64_t members = 0;
  // Keys zero_pair, partition, non_member; always all present.
  std::map<std::string, std::uint64_t> certificate_kinds{{"zero_pair", 0}, {"partition", 0}, {"non_member", 0}};
  // Number of classes of partition certificates -> count.
  std::map<std::size_t, std::uint64_t> partition_classes;
  // Partition members whose class count equals d.
  std::uint64_t full_class_span = 0;
  // Planes on which classify and the direct test disagree, or whose
  // certificate fails verification.
  std::vector<Matrix<PrimeField>> mismatches;

  bool members_all_zero_pair() const { return certificate_kinds.at("zero_pair") == members; }

  void merge(const CrossCheckReport& other) {
    total += other.total;
    members += other.members;
    for (const auto& [k, v] : other.certificate_kinds) certificate_kinds[k] += v;
    for (const auto& [k, v] : other.partition_classes) partition_classes[k] += v;
    full_class_span += other.full_class_span;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  }
};

namespace detail {

inline void check_one(const Matrix<PrimeField>& t, CrossCheckReport& report) {
  PlaneMatrix<PrimeField> plane(t);
  const bool direct = is_member_direct(plane);
  const auto verdict = classify(plane);
  ++report.total;
  ++report.certificate_kinds[verdict.kind()];
  if (verdict.member) {
    ++report.members;
    if (const auto* cert = std::get_if<PartitionCertificate<PrimeField>>(&verdict.certificate)) {
      ++report.partition_classes[cert->num_classes()];
      if (verdict.spans_full_class_space) ++report.full_class_span;
    }
  }
  if (verdict.member != direct || !verify_certificate(plane, verdict.certificate))
    report.mismatches.push_back(t);
}

}  // namespace detail

// Asserts classify(T).member == is_member_direct(T) on every d-subspace of
// F_p^m. Work is split by pivot set across `workers` threads; chunks are
// merged in pivot-set order so the report does not depend on the count.
inline CrossCheckReport cross_check(std::size_t d, std::size_t m, const PrimeField& field,
                                    std::uint64_t budget = kDefaultSubspaceBudget, unsigned workers = 1) {
  check_budget(d, m, field, budget);
  const auto sets = pivot_sets(d, m);
  std::vector<CrossCheckReport> chunks(sets.size());
  auto run = [&](std::size_t idx) {
    for_each_rref_with_pivots(d, m, field, sets[idx],
                              [&](const Matrix<PrimeField>& t) { detail::check_one(t, chunks[idx]); });
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < sets.size();) run(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CrossCheckReport report;
  report.d = d;
  report.m = m;
  report.p = field.modulus();
  for (const auto& c : chunks) report.merge(c);
  return report;
}

}  // namespace esfano::fano
