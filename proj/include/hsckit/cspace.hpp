#pragma once

// Positivity criterion for Kahler C-spaces (g, alpha_r) with b_2 = 1: the
// invariant Kahler-Einstein metric has positive holomorphic sectional
// curvature when no positive root has coefficient >= 3 at the marked node.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hsckit/rootsys.hpp"

namespace hsckit {

struct CSpaceDescriptor {
  LieType type;
  int node; // 1-based marked simple root

  friend bool operator==(const CSpaceDescriptor&, const CSpaceDescriptor&) = default;

  std::string name() const {
    return "(" + type.name() + ", alpha_" + std::to_string(node) + ")";
  }
};

struct CSpaceVerdict {
  CSpaceDescriptor descriptor;
  std::map<int, std::size_t> level_census; // k >= 1 -> |Delta_r^+(k)|
  int max_level = 0;
  bool itoh_positive = false;
  std::vector<Root> evidence; // roots with n_r >= 3
};

inline CSpaceVerdict itoh_positive(const RootSystem& rs, int node) {
  require_node(rs, node);
  CSpaceVerdict v{{rs.type(), node}, {}, 0, false, {}};
  for (const auto& root : rs.positive_roots()) {
    const int k = root.at(node);
    if (k == 0)
      continue;
    ++v.level_census[k];
    v.max_level = std::max(v.max_level, k);
    if (k >= 3)
      v.evidence.push_back(root);
  }
  v.itoh_positive = v.max_level <= 2;
  return v;
}

inline CSpaceVerdict itoh_positive(const CSpaceDescriptor& d) {
  return itoh_positive(positive_roots(d.type), d.node);
}

inline std::vector<CSpaceVerdict> classify_all(const RootSystem& rs) {
  std::vector<CSpaceVerdict> out;
  out.reserve(static_cast<std::size_t>(rs.rank()));
  for (int r = 1; r <= rs.rank(); ++r)
    out.push_back(itoh_positive(rs, r));
  return out;
}

inline std::vector<CSpaceVerdict> classify_all(LieType t) {
  return classify_all(positive_roots(t));
}

// ---------------------------------------------------------------------------
// Audit against the published list of positive cases.

/// One row of the published list: every node of a classical family, or an
/// explicit set of exceptional nodes. Stored verbatim; never derived.
struct PublishedPositiveEntry {
  LieFamily family;
  int rank;               // 0 for a classical sequence (any rank)
  std::vector<int> nodes; // empty: all nodes
  std::string source;
};

inline const std::vector<PublishedPositiveEntry>& published_positive_list() {
  static const std::vector<PublishedPositiveEntry> list = {
      {LieFamily::A, 0, {}, "published: classical type A, all r"},
      {LieFamily::B, 0, {}, "published: classical type B, all r"},
      {LieFamily::C, 0, {}, "published: classical type C, all r"},
      {LieFamily::D, 0, {}, "published: classical type D, all r"},
      {LieFamily::E, 6, {1, 2, 3, 4, 5, 6}, "published: (E6, alpha_p), p = 1..6"},
      {LieFamily::E, 7, {1, 2, 6, 7}, "published: (E7, alpha_p), p in {1,2,6,7}"},
      {LieFamily::E, 8, {1, 8}, "published: (E8, alpha_p), p in {1,8}"},
      {LieFamily::F, 4, {1, 4}, "published: (F4, alpha_1), (F4, alpha_4)"},
      {LieFamily::G, 2, {2}, "published: (G2, alpha_2)"},
  };
  return list;
}

/// Whether the published list claims (type, node) positive, and the source
/// line that makes the claim (empty when absent).
inline std::pair<bool, std::string> published_claim(const CSpaceDescriptor& d) {
  for (const auto& e : published_positive_list()) {
    if (e.family != d.type.family || (e.rank != 0 && e.rank != d.type.rank))
      continue;
    if (e.nodes.empty() ||
        std::find(e.nodes.begin(), e.nodes.end(), d.node) != e.nodes.end())
      return {true, e.source};
  }
  return {false, "absent from published positive list"};
}

enum class AuditCategory { AgreePositive, AgreeNegative, Disagree };

inline const char* to_string(AuditCategory c) {
  switch (c) {
  case AuditCategory::AgreePositive: return "agree-positive";
  case AuditCategory::AgreeNegative: return "agree-negative";
  case AuditCategory::Disagree: return "disagree";
  }
  return "";
}

struct AuditEntry {
  CSpaceVerdict verdict;
  bool published_positive;
  std::string source;
  AuditCategory category;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  std::vector<const AuditEntry*> in(AuditCategory c) const {
    std::vector<const AuditEntry*> out;
    for (const auto& e : entries)
      if (e.category == c)
        out.push_back(&e);
    return out;
  }
};

inline AuditEntry audit_verdict(CSpaceVerdict v) {
  auto [claimed, source] = published_claim(v.descriptor);
  AuditCategory cat;
  if (claimed == v.itoh_positive)
    cat = claimed ? AuditCategory::AgreePositive : AuditCategory::AgreeNegative;
  else
    cat = AuditCategory::Disagree;
  return AuditEntry{std::move(v), claimed, std::move(source), cat};
}

/// Types covered by the default audit: classical ranks in
/// [classical_min, classical_max] and every exceptional type.
inline std::vector<LieType> default_audit_types(int classical_min = 2,
                                                int classical_max = 8) {
  std::vector<LieType> types;
  for (LieFamily f : {LieFamily::A, LieFamily::B, LieFamily::C, LieFamily::D})
    for (int n = classical_min; n <= classical_max; ++n)
      if (is_admissible({f, n}))
        types.push_back({f, n});
  for (int n : {6, 7, 8})
    types.push_back({LieFamily::E, n});
  types.push_back({LieFamily::F, 4});
  types.push_back({LieFamily::G, 2});
  return types;
}

inline AuditReport audit(const std::vector<LieType>& types) {
  AuditReport report;
  for (const auto& t : types)
    for (auto& v : classify_all(t))
      report.entries.push_back(audit_verdict(std::move(v)));
  return report;
}

inline AuditReport audit_against_published() { return audit(default_audit_types()); }

} // namespace hsckit
