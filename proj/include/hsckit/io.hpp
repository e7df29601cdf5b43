#pragma once

// JSON encodings of roots, verdicts, tensors, surface records and
// extremization results.

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsckit/cspace.hpp"
#include "hsckit/curvature.hpp"
#include "hsckit/extremize.hpp"
#include "hsckit/geography.hpp"
#include "hsckit/rootsys.hpp"

namespace hsckit::io {

using nlohmann::json;

// -- roots ------------------------------------------------------------------

inline json to_json(const Root& r) { return r.coeffs; }

inline json roots_to_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const auto& r : roots)
    out.push_back(to_json(r));
  return out;
}

inline json to_json(const RootSystem& rs) {
  return {{"family", std::string(1, to_char(rs.type().family))},
          {"rank", rs.rank()},
          {"cartan", rs.cartan()},
          {"count", rs.positive_roots().size()},
          {"highest_root", to_json(highest_root(rs))},
          {"positive_roots", roots_to_json(rs.positive_roots())}};
}

inline json to_json(const CSpaceVerdict& v) {
  json census = json::object();
  for (const auto& [k, count] : v.level_census)
    census[std::to_string(k)] = count;
  return {{"family", std::string(1, to_char(v.descriptor.type.family))},
          {"rank", v.descriptor.type.rank},
          {"node", v.descriptor.node},
          {"census", census},
          {"max_level", v.max_level},
          {"positive", v.itoh_positive},
          {"evidence", roots_to_json(v.evidence)}};
}

inline json to_json(const AuditEntry& e) {
  json j = to_json(e.verdict);
  j["category"] = to_string(e.category);
  j["published_positive"] = e.published_positive;
  j["source"] = e.source;
  return j;
}

inline json to_json(const AuditReport& report) {
  json entries = json::array();
  json summary = json::object();
  for (auto c : {AuditCategory::AgreePositive, AuditCategory::AgreeNegative,
                 AuditCategory::Disagree})
    summary[to_string(c)] = report.in(c).size();
  for (const auto& e : report.entries)
    entries.push_back(to_json(e));
  return {{"entries", entries}, {"summary", summary}};
}

// -- tensors ----------------------------------------------------------------

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json direction_to_json(const Direction& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(complex_to_json(v[i]));
  return out;
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

/// Raw array from the tensor format. The first listed entry of each orbit
/// fills all its images; a later entry in an already-filled orbit is written
/// at its own index only, so the conflict survives into validation.
inline CurvatureArray array_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw FormatError("tensor JSON needs \"n\" and \"entries\"");
  const int n = j.at("n").get<int>();
  if (n < 1)
    throw FormatError("tensor dimension must be positive");
  CurvatureArray a(n);
  std::set<TensorIndex> filled;
  for (const auto& e : j.at("entries")) {
    const TensorIndex x{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                        e.at("l").get<int>()};
    for (int idx : {x.i, x.j, x.k, x.l})
      if (idx < 0 || idx >= n)
        throw FormatError("tensor index out of range 0.." + std::to_string(n - 1));
    const cplx value(e.value("re", 0.0), e.value("im", 0.0));
    if (filled.insert(orbit_representative(x)).second)
      set_orbit(a, x, value);
    a[x] = value;
  }
  return a;
}

inline KahlerCurvatureTensor tensor_from_json(const json& j) {
  return KahlerCurvatureTensor::canonicalize(array_from_json(j));
}

/// One entry per nonzero orbit, at its lexicographically smallest index.
inline json to_json(const KahlerCurvatureTensor& t) {
  const int n = t.dim();
  json entries = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const TensorIndex x{i, j, k, l};
          const cplx v = t(i, j, k, l);
          if (v == cplx{} || !(orbit_representative(x) == x))
            continue;
          entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l},
                             {"re", v.real()}, {"im", v.imag()}});
        }
  return {{"n", n}, {"entries", entries}};
}

inline json to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"orbit", {v.orbit.i, v.orbit.j, v.orbit.k, v.orbit.l}},
                          {"magnitude", v.magnitude}});
  return {{"ok", r.ok()}, {"max_violation", r.max_violation}, {"violations", violations}};
}

inline json to_json(const EinsteinFramePoint& p) {
  return {{"H", p.H}, {"A", p.A}, {"B", complex_to_json(p.B)}};
}

inline json to_json(const ExtremizeResult& r) {
  json j = {{"min_value", r.min_value},
            {"max_value", r.max_value},
            {"argmin", direction_to_json(r.argmin)},
            {"argmax", direction_to_json(r.argmax)},
            {"iterations_used", r.iterations_used},
            {"converged", r.converged}};
  j["oracle_min"] = r.oracle_min ? json(*r.oracle_min) : json(nullptr);
  j["oracle_max"] = r.oracle_max ? json(*r.oracle_max) : json(nullptr);
  return j;
}

inline json to_json(const DistinguishedFrame& f) {
  return {{"frame", matrix_to_json(f.frame)},
          {"point", to_json(f.point)},
          {"residual", f.residual},
          {"min_value", f.min_value}};
}

// -- surfaces ---------------------------------------------------------------

inline json to_json(const SurfaceRecord& r) {
  json j = {{"name", r.name}, {"source", r.source}, {"flags", r.flags}};
  if (r.c1sq) j["c1sq"] = *r.c1sq;
  if (r.c2) j["c2"] = *r.c2;
  if (r.pg) j["pg"] = *r.pg;
  if (r.q) j["q"] = *r.q;
  if (r.K2) j["K2"] = *r.K2;
  return j;
}

inline SurfaceRecord surface_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name"))
    throw FormatError("surface record needs a \"name\"");
  auto opt = [&j](const char* key) -> std::optional<std::int64_t> {
    if (!j.contains(key) || j.at(key).is_null())
      return std::nullopt;
    return j.at(key).get<std::int64_t>();
  };
  SurfaceRecord r;
  r.name = j.at("name").get<std::string>();
  r.c1sq = opt("c1sq");
  r.c2 = opt("c2");
  r.pg = opt("pg");
  r.q = opt("q");
  r.K2 = opt("K2");
  r.source = j.value("source", std::string{});
  r.flags = j.value("flags", std::vector<std::string>{});
  return r;
}

inline json surfaces_to_json(const std::vector<SurfaceRecord>& records) {
  json out = json::array();
  for (const auto& r : records)
    out.push_back(to_json(r));
  return out;
}

inline std::vector<SurfaceRecord> surfaces_from_json(const json& j) {
  if (!j.is_array())
    throw FormatError("surface file must be a JSON array");
  std::vector<SurfaceRecord> out;
  for (const auto& e : j)
    out.push_back(surface_from_json(e));
  return out;
}

inline json to_json(const GeographyVerdict& v) {
  json j = to_json(v.record);
  j["passes"] = v.passes;
  j["margin"] = v.margin;
  return j;
}

} // namespace hsckit::io
