#pragma once

// Chern numbers of surfaces of general type and the obstruction
// c2 <= 3 c1^2 to a Kahler-Einstein metric with negative holomorphic
// sectional curvature.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsckit/error.hpp"

namespace hsckit {

struct ChernPair {
  std::int64_t c1sq;
  std::int64_t c2;

  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

struct SurfaceRecord {
  std::string name;
  std::optional<std::int64_t> c1sq;
  std::optional<std::int64_t> c2;
  std::optional<std::int64_t> pg;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> K2;
  std::string source;
  std::vector<std::string> flags;

  friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

struct GeographyVerdict {
  SurfaceRecord record;
  bool passes;         // c2 <= 3 c1^2
  std::int64_t margin; // 3 c1^2 - c2
};

inline GeographyVerdict check_inequality(const SurfaceRecord& r) {
  if (!r.c1sq || !r.c2)
    throw MissingChernNumbers("record '" + r.name + "' lacks c1^2 or c2");
  const std::int64_t margin = 3 * *r.c1sq - *r.c2;
  return {r, margin >= 0, margin};
}

inline bool passes(ChernPair c) { return c.c2 <= 3 * c.c1sq; }

/// c1^2 = K^2 and c2 = 12 chi - K^2 with chi = 1 - q + p_g.
inline ChernPair noether_fill(std::int64_t pg, std::int64_t q, std::int64_t K2) {
  if (K2 < 1 || pg < 0 || q < 0)
    throw std::invalid_argument("noether_fill needs K2 >= 1, pg >= 0, q >= 0");
  return {K2, 12 * (1 - q + pg) - K2};
}

/// Blowing up k points lowers c1^2 by k and raises the Euler number by k.
inline ChernPair blowup_transform(ChernPair c, std::int64_t k) {
  if (k < 0)
    throw std::invalid_argument("number of blow-ups must be non-negative");
  return {c.c1sq - k, c.c2 + k};
}

namespace detail {

inline std::string verdict_word(ChernPair c) { return passes(c) ? "passes" : "fails"; }

inline std::string pair_string(ChernPair c) {
  return "(" + std::to_string(c.c1sq) + ", " + std::to_string(c.c2) + ")";
}

} // namespace detail

/// Noether cross-check of stated Chern numbers against (p_g, q, K^2). Returns
/// one flag per mismatch, each carrying the verdict the completed numbers
/// would give; nothing is corrected.
inline std::vector<std::string> consistency_flags(const SurfaceRecord& r) {
  std::vector<std::string> flags;
  if (!r.pg || !r.q || !r.K2 || *r.K2 < 1)
    return flags;
  const ChernPair filled = noether_fill(*r.pg, *r.q, *r.K2);
  const bool c1_ok = !r.c1sq || *r.c1sq == filled.c1sq;
  const bool c2_ok = !r.c2 || *r.c2 == filled.c2;
  if (c1_ok && c2_ok)
    return flags;
  std::string msg = "inconsistent: stated";
  if (r.c1sq && r.c2) {
    const ChernPair stated{*r.c1sq, *r.c2};
    msg += " " + detail::pair_string(stated) + " " + detail::verdict_word(stated);
  }
  msg += "; Noether completion from pg=" + std::to_string(*r.pg) +
         ", q=" + std::to_string(*r.q) + ", K2=" + std::to_string(*r.K2) + " gives " +
         detail::pair_string(filled) + " which " + detail::verdict_word(filled);
  flags.push_back(msg);
  return flags;
}

/// Recomputes Noether flags and keeps any other notes already on the record.
inline SurfaceRecord with_consistency_flags(SurfaceRecord r) {
  std::erase_if(r.flags, [](const std::string& f) { return f.starts_with("inconsistent:"); });
  for (auto& f : consistency_flags(r))
    r.flags.push_back(std::move(f));
  return r;
}

/// Parametric family p_g = 1, q = 0, K^2 in [2, 8].
inline std::vector<SurfaceRecord> todorov_family() {
  std::vector<SurfaceRecord> out;
  for (std::int64_t k2 = 2; k2 <= 8; ++k2) {
    const ChernPair c = noether_fill(1, 0, k2);
    out.push_back({"Todorov K2=" + std::to_string(k2), c.c1sq, c.c2, 1, 0, k2,
                   "published invariants pg=1, q=0, 2 <= K^2 <= 8; Noether-filled",
                   {}});
  }
  return out;
}

/// Records on both Horikawa lines K^2 = 2(p_g - 2) and K^2 = 2 p_g - 3, q = 0.
inline std::vector<SurfaceRecord> horikawa_records(std::int64_t pg_min, std::int64_t pg_max) {
  if (pg_min < 3)
    throw std::invalid_argument("Horikawa scan starts at pg >= 3");
  std::vector<SurfaceRecord> out;
  for (std::int64_t pg = pg_min; pg <= pg_max; ++pg) {
    for (const bool noether_line : {true, false}) {
      const std::int64_t k2 = noether_line ? 2 * (pg - 2) : 2 * pg - 3;
      const ChernPair c = noether_fill(pg, 0, k2);
      out.push_back({"Horikawa pg=" + std::to_string(pg) +
                         (noether_line ? " K2=2(pg-2)" : " K2=2pg-3"),
                     c.c1sq, c.c2, pg, 0, k2,
                     noether_line ? "Noether line K^2 = 2(pg-2), q=0; Noether-filled"
                                  : "line K^2 = 2pg-3, q=0; Noether-filled",
                     {}});
    }
  }
  return out;
}

inline std::vector<GeographyVerdict> horikawa_scan(std::int64_t pg_min, std::int64_t pg_max) {
  std::vector<GeographyVerdict> out;
  for (const auto& r : horikawa_records(pg_min, pg_max))
    out.push_back(check_inequality(r));
  return out;
}

/// The nine families with their published values, verbatim. Families that
/// are published without a single pair of Chern numbers carry a
/// representative member and a note saying so.
inline std::vector<SurfaceRecord> builtin_published_table() {
  using std::nullopt;
  std::vector<SurfaceRecord> table = {
      {"Barlow", 1, 11, 0, nullopt, nullopt,
       "published: simply connected, pg=0, c1^2=1, c2=11", {}},
      {"Burniat", 2, 10, 0, nullopt, nullopt,
       "published: pg=0, K^2 in {2,...,6}, c1^2=2, c2=10",
       {"range note: published K^2 ranges over 2..6 but a single (c1^2, c2) = (2, 10) "
        "is given; with q=0 the Noether completions are K2=2 (2, 10) fails, "
        "K2=3 (3, 9) passes, K2=4 (4, 8) passes, K2=5 (5, 7) passes, "
        "K2=6 (6, 6) passes"}},
      {"Campadelli", 2, 10, 0, 0, 2, "published: pg=q=0, K^2=2, c1^2=2, c2=10", {}},
      {"Catanese", 2, 10, 0, 0, 2,
       "published: K^2=2, Hodge numbers of the Campadelli surfaces (pg=q=0), "
       "c1^2=2, c2=10",
       {}},
      {"Godeaux", 1, 11, 0, 0, 1, "published: pg=q=0, K^2=1, c1^2=1, c2=11", {}},
      {"Horikawa", 2, 46, 3, 0, 2,
       "published: K^2 = 2(pg-2) or 2pg-3, c1^2/c2 < 1/3; representative pg=3, q=0 on "
       "K^2 = 2(pg-2), Noether-filled",
       {"representative member; the full family is covered by the Horikawa scan"}},
      {"Keum-Naie", 1, 11, 0, 0, 4,
       "published: K^2=4, pg=0, c1^2=1, c2=11; q=0 assumed (not stated)", {}},
      {"Oliverio", 8, 52, 4, 0, 8, "published: K^2=8, pg=4, q=0, c1^2=8, c2=52", {}},
      {"Todorov", 2, 22, 1, 0, 2,
       "published: pg=1, q=0, 2 <= K^2 <= 8; representative K^2=2, Noether-filled",
       {"representative member; the parametric family passes for K^2 >= 6"}},
  };
  for (auto& r : table)
    r = with_consistency_flags(std::move(r));
  return table;
}

} // namespace hsckit
