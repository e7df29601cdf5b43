// Level census of every exceptional C-space, next to the published verdict.
//
//   $ ./exceptional_census
//   type       node  levels (k:count)          max  computed  published  audit
//   ...

#include <cstdio>
#include <string>

#include "hsckit/cspace.hpp"

using namespace hsckit;

int main() {
  std::printf("%-10s %4s  %-30s %3s  %-8s  %-9s  %s\n", "type", "node", "levels (k:count)", "max",
              "computed", "published", "audit");
  for (LieType t : {LieType{LieFamily::G, 2}, LieType{LieFamily::F, 4}, LieType{LieFamily::E, 6},
                    LieType{LieFamily::E, 7}, LieType{LieFamily::E, 8}}) {
    for (const auto& v : classify_all(t)) {
      const auto e = audit_verdict(v);
      std::string census;
      for (const auto& [k, n] : v.level_census)
        census += std::to_string(k) + ":" + std::to_string(n) + " ";
      std::printf("%-10s %4d  %-30s %3d  %-8s  %-9s  %s\n", t.name().c_str(), v.descriptor.node,
                  census.c_str(), v.max_level, v.itoh_positive ? "positive" : "-",
                  e.published_positive ? "positive" : "-", to_string(e.category));
      if (e.category == AuditCategory::Disagree && !v.evidence.empty()) {
        std::string w;
        for (int c : v.evidence.front().coeffs)
          w += std::to_string(c) + " ";
        std::printf("%17s witness of level %d: ( %s)\n", "", v.max_level, w.c_str());
      }
    }
  }
}
