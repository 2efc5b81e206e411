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

// Subcommand bodies. Each returns a Report; errors propagate as esfano::Error
// and are turned into exit status 2 by the caller.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "esfano/cli/document.hpp"
#include "esfano/cli/report.hpp"
#include "esfano/errors.hpp"
#include "esfano/fano.hpp"
#include "esfano/invariants.hpp"
#include "esfano/linalg.hpp"
#include "esfano/polynomial.hpp"
#include "esfano/scalar.hpp"

namespace esfano::cli {

using nlohmann::json;

template <class Scalar>
json scalars_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <ExactField F>
json matrix_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalars_json(m.row(i)));
  return out;
}

inline json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

inline json exponents_json(const ExponentVector& e) {
  json out = json::array();
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e[i]);
  return out;
}

template <ExactField F>
json certificate_json(const fano::MembershipVerdict<F>& verdict) {
  json c;
  c["kind"] = verdict.kind();
  if (const auto* zp = std::get_if<fano::ZeroPair>(&verdict.certificate)) {
    c["zero_columns"] = {zp->first + 1, zp->second + 1};
  } else if (const auto* pc = std::get_if<fano::PartitionCertificate<F>>(&verdict.certificate)) {
    json classes = json::array();
    for (const auto& cls : pc->classes) classes.push_back(one_based(cls));
    json reps = json::array();
    for (const auto& v : pc->representatives) reps.push_back(scalars_json(v));
    c["classes"] = classes;
    c["representatives"] = reps;
    c["scalars"] = scalars_json(pc->scalars);
    c["num_classes"] = pc->num_classes();
    c["spans_full_v_pi_c"] = verdict.spans_full_class_space;
  } else {
    const auto& nm = std::get<fano::NonMember>(verdict.certificate);
    if (nm.witness) {
      c["witness"] = monomial_to_string(*nm.witness, indexed_names("s"));
      c["witness_exponents"] = exponents_json(*nm.witness);
    } else {
      c["witness"] = nullptr;
    }
  }
  return c;
}

inline Report cmd_classify(const MatrixDocument& doc) {
  return with_field(doc.field, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    const fano::PlaneMatrix<F> plane(to_matrix(doc, field));
    const auto expansion = fano::direct_expansion(plane);
    const bool direct = expansion.is_zero();
    const auto verdict = fano::classify(plane);
    const bool verified = fano::verify_certificate(plane, verdict.certificate);

    Report r{"classify"};
    r.result["field"] = field.name();
    r.result["d"] = plane.d();
    r.result["m"] = plane.m();
    r.result["matrix"] = matrix_json(plane.matrix());
    r.result["member"] = verdict.member;
    r.result["direct"] = {{"member", direct}, {"expansion", to_string(expansion, indexed_names("s"))}};
    r.result["structural"] = {{"member", verdict.member}, {"certificate", certificate_json(verdict)},
                              {"certificate_verified", verified}};
    const bool agree = direct == verdict.member && verified;
    r.result["agree"] = agree;
    if (!agree) {
      r.result["error"] = "internal error: structural and direct verdicts disagree";
      r.status = kNegative;
    }
    return r;
  });
}

inline Report cmd_equations(std::size_t d, std::size_t m, const std::vector<std::size_t>& avoided_one_based,
                            const FieldDescriptor& desc) {
  if (d < 1 || d >= m) throw DomainError("equations need 1 <= d < m");
  std::vector<std::size_t> avoided;
  if (avoided_one_based.empty()) {
    for (std::size_t j = d; j < m; ++j) avoided.push_back(j);
  } else {
    for (auto j : avoided_one_based) {
      if (j < 1) throw DomainError("chart columns are 1-based");
      avoided.push_back(j - 1);
    }
  }
  if (avoided.size() != m - d) throw DomainError("a chart avoids exactly m - d columns");
  const auto chart = fano::Chart::from_avoided(m, avoided);
  return with_field(desc, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    const auto eqs = fano::fano_chart_equations<F>(d, m, chart, field);
    const auto names = fano::chart_unknown_names(chart);
    Report r{"equations"};
    r.result["field"] = field.name();
    r.result["d"] = d;
    r.result["m"] = m;
    r.result["chart"] = {{"avoided", one_based(chart.avoided)}, {"identity_columns", one_based(chart.identity_columns)}};
    json unknowns = json::array();
    for (std::size_t v = 0; v < d * (m - d); ++v) unknowns.push_back(names(v));
    r.result["unknowns"] = unknowns;
    r.result["count"] = eqs.size();
    json list = json::array();
    const auto monos = monomials_of_degree(d, static_cast<std::uint32_t>(m - 1));
    for (std::size_t k = 0; k < eqs.size(); ++k)
      list.push_back({{"s_monomial", monomial_to_string(monos[k], indexed_names("s"))},
                      {"polynomial", to_string(eqs[k], names)}});
    r.result["equations"] = list;
    r.result["expected_dimension"] = fano::expected_dimension(static_cast<std::int64_t>(d), static_cast<std::int64_t>(m));
    return r;
  });
}

inline Report cmd_isolated(std::size_t d, const FieldDescriptor& desc) {
  if (d < 1) throw DomainError("isolated needs d >= 1");
  return with_field(desc, [&](const auto& field) {
    const auto points = fano::enumerate_isolated(d, field);
    Report r{"isolated"};
    r.result["field"] = field.name();
    r.result["d"] = d;
    r.result["m"] = 2 * d;
    r.result["count"] = points.size();
    r.result["expected_count"] = fano::odd_double_factorial(d);
    json list = json::array();
    bool all_members = true;
    for (const auto& [mt, plane] : points) {
      const bool member = fano::is_member_direct(plane);
      all_members = all_members && member;
      list.push_back({{"matching", mt.to_string()}, {"rows", matrix_json(plane.matrix())}, {"member", member}});
    }
    r.result["points"] = list;
    r.result["all_members"] = all_members;
    if (!all_members || points.size() != fano::odd_double_factorial(d)) r.status = kNegative;
    return r;
  });
}

inline Report cmd_brute(std::size_t d, std::size_t m, std::uint64_t p, std::uint64_t budget) {
  const PrimeField field(p);
  const auto res = fano::brute_force_members(d, m, field, budget);
  Report r{"brute"};
  r.result["field"] = field.name();
  r.result["d"] = d;
  r.result["m"] = m;
  r.result["total"] = res.total;
  r.result["member_count"] = res.members.size();
  json list = json::array();
  for (const auto& plane : res.members) list.push_back(matrix_json(plane.matrix()));
  r.result["members"] = list;
  return r;
}

inline Report cmd_xcheck(std::size_t d, std::size_t m, std::uint64_t p, std::uint64_t budget, unsigned workers) {
  const PrimeField field(p);
  const auto rep = fano::cross_check(d, m, field, budget, workers);
  Report r{"xcheck"};
  r.result["field"] = field.name();
  r.result["d"] = d;
  r.result["m"] = m;
  r.result["total"] = rep.total;
  r.result["members"] = rep.members;
  r.result["certificate_kinds"] = rep.certificate_kinds;
  json hist = json::array();
  for (const auto& [k, n] : rep.partition_classes) hist.push_back({{"num_classes", k}, {"count", n}});
  r.result["partition_classes"] = hist;
  r.result["full_class_span"] = rep.full_class_span;
  r.result["members_all_zero_pair"] = rep.members_all_zero_pair();
  r.result["mismatch_count"] = rep.mismatches.size();
  json mism = json::array();
  for (const auto& t : rep.mismatches) mism.push_back(matrix_json(t));
  r.result["mismatches"] = mism;
  if (!rep.mismatches.empty()) r.status = kNegative;
  return r;
}

inline Report cmd_reciprocals(const MatrixDocument& doc) {
  return with_field(doc.field, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    const auto mat = to_matrix(doc, field);
    std::vector<LinearForm<F>> forms;
    for (std::size_t i = 0; i < mat.rows(); ++i) forms.emplace_back(field, mat.row(i));
    const auto basis = fano::reciprocal_relation_space<F>(forms);
    const auto classes = fano::proportionality_classes<F>(mat.to_rows());
    Report r{"reciprocals"};
    r.result["field"] = field.name();
    r.result["forms"] = forms.size();
    r.result["proportionality_classes"] = classes.classes.size();
    r.result["dimension"] = basis.size();
    json b = json::array();
    for (const auto& v : basis) b.push_back(scalars_json(v));
    r.result["basis"] = b;
    return r;
  });
}

// An invariants scenario: a group given by generators, seed forms and a
// degree bound, over Q or F_p.
struct Scenario {
  FieldDescriptor field;
  std::size_t dimension = 0;
  std::vector<std::vector<std::vector<std::string>>> generators;
  std::vector<std::vector<std::string>> seeds;
  std::uint32_t degree = 0;
};

inline Scenario parse_scenario(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }
  Scenario s;
  try {
    s.field = FieldDescriptor::parse(j.value("field", std::string("Q")), j.value("prime", std::uint64_t{0}));
    s.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& g : j.at("generators")) {
      auto& mat = s.generators.emplace_back();
      for (const auto& row : g) {
        auto& out = mat.emplace_back();
        for (const auto& v : row) out.push_back(detail::scalar_text(v));
      }
    }
    for (const auto& f : j.at("seeds")) {
      auto& out = s.seeds.emplace_back();
      for (const auto& v : f) out.push_back(detail::scalar_text(v));
    }
    s.degree = j.at("degree").get<std::uint32_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario is missing or mistypes a field: ") + e.what());
  }
  return s;
}

// Built-in scenarios besides "z2-example".
inline const char* builtin_scenario(std::string_view name) {
  if (name == "pm-identity")
    return R"({"field": "Q", "dimension": 2, "generators": [[[-1, 0], [0, -1]]],
               "seeds": [[1, 0], [0, 1], [1, 1]], "degree": 4})";
  if (name == "swap")
    return R"({"field": "Q", "dimension": 2, "generators": [[[0, 1], [1, 0]]],
               "seeds": [[1, 0]], "degree": 6})";
  if (name == "s3")
    return R"({"field": "Q", "dimension": 3,
               "generators": [[[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]]],
               "seeds": [[1, 0, 0]], "degree": 6})";
  return nullptr;
}

inline Report cmd_z2_example(std::uint64_t seed) {
  const auto z = invariants::z2_counterexample_report(seed);
  Report r{"invariants"};
  r.result["scenario"] = "z2-example";
  r.result["xy_invariant"] = z.xy_invariant;
  r.result["trials"] = z.trials;
  r.result["pullbacks_on_square_sum_line"] = z.pullbacks_on_square_sum_line;
  r.result["coefficient_obstructions"] = z.coefficient_obstructions;
  r.result["single_image_hits"] = z.single_image_hits;
  r.result["single_image_membership"] = z.single_image_hits > 0;
  r.result["polarization_identity"] = z.polarization_identity;
  r.result["algebra_membership"] = z.algebra_membership;
  r.result["certified"] = z.certified();
  if (!z.certified()) r.status = kNegative;
  return r;
}

inline Report cmd_invariants(const Scenario& s, std::string_view name) {
  return with_field(s.field, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    std::vector<Matrix<F>> gens;
    for (const auto& g : s.generators) {
      Matrix<F> mat = to_matrix(MatrixDocument{s.field, g}, field);
      gens.push_back(std::move(mat));
    }
    std::vector<LinearForm<F>> seeds;
    for (const auto& f : s.seeds) {
      std::vector<typename F::value_type> coeffs;
      for (const auto& x : f) coeffs.push_back(field.parse(x));
      if (coeffs.size() != s.dimension) throw DimensionMismatch("seed form has the wrong length");
      seeds.emplace_back(field, std::move(coeffs));
    }
    const auto group = invariants::close_group(field, s.dimension, gens);
    const auto rep = invariants::generation_check<F>(group, seeds, s.degree);

    Report r{"invariants"};
    r.result["scenario"] = std::string(name);
    r.result["field"] = field.name();
    r.result["dimension"] = s.dimension;
    r.result["group_order"] = group.order();
    json orbits = json::array();
    for (const auto& orbit : rep.orbits) {
      json o = json::array();
      for (const auto& f : orbit) o.push_back(to_string(f.to_polynomial()));
      orbits.push_back(o);
    }
    r.result["orbits"] = orbits;
    json chern = json::array();
    for (const auto& c : rep.chern_classes) chern.push_back(to_string(c));
    r.result["orbit_chern_classes"] = chern;
    json degrees = json::array();
    for (const auto& d : rep.degrees)
      degrees.push_back({{"degree", d.degree},
                         {"subalgebra_dim", d.subalgebra_dim},
                         {"invariant_dim", d.invariant_dim},
                         {"status", d.equal() ? "equal" : "short"}});
    r.result["degrees"] = degrees;
    r.result["generated"] = rep.generated();
    if (!rep.generated()) r.status = kNegative;
    return r;
  });
}

}  // namespace esfano::cli
