#pragma once

// Positive root systems of the simple complex Lie algebras, enumerated from
// the Cartan matrix by root-string closure.
//
// Simple roots are numbered in the Bourbaki convention:
//
//   A_n   1 - 2 - ... - (n-1) - n
//
//   B_n   1 - 2 - ... - (n-1) => n          (alpha_n short)
//
//   C_n   1 - 2 - ... - (n-1) <= n          (alpha_n long)
//
//                              (n-1)
//                             /
//   D_n   1 - 2 - ... - (n-2)
//                             \   (n-1 and n both meet n-2)
//                              n
//
//   E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]
//               |
//               2
//
//   F_4   1 - 2 => 3 - 4                    (alpha_1, alpha_2 long)
//
//   G_2   1 <= 2                            (alpha_1 short)
//
// Cartan entries are a_ij = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j) /
// (alpha_j, alpha_j), so the row of a long node carries the -2 or -3 entry.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsckit/error.hpp"

namespace hsckit {

enum class LieFamily { A, B, C, D, E, F, G };

inline char to_char(LieFamily f) {
  return "ABCDEFG"[static_cast<int>(f)];
}

inline LieFamily family_from_char(char c) {
  switch (c) {
  case 'A': case 'a': return LieFamily::A;
  case 'B': case 'b': return LieFamily::B;
  case 'C': case 'c': return LieFamily::C;
  case 'D': case 'd': return LieFamily::D;
  case 'E': case 'e': return LieFamily::E;
  case 'F': case 'f': return LieFamily::F;
  case 'G': case 'g': return LieFamily::G;
  default: break;
  }
  throw InadmissibleRank(std::string("unknown Lie family '") + c + "'");
}

inline bool is_classical(LieFamily f) {
  return f == LieFamily::A || f == LieFamily::B || f == LieFamily::C ||
         f == LieFamily::D;
}

struct LieType {
  LieFamily family;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;

  std::string name() const { return to_char(family) + std::to_string(rank); }
};

inline bool is_admissible(LieType t) {
  switch (t.family) {
  case LieFamily::A: return t.rank >= 1;
  case LieFamily::B: return t.rank >= 2;
  case LieFamily::C: return t.rank >= 2;
  case LieFamily::D: return t.rank >= 3;
  case LieFamily::E: return t.rank >= 6 && t.rank <= 8;
  case LieFamily::F: return t.rank == 4;
  case LieFamily::G: return t.rank == 2;
  }
  return false;
}

inline void require_admissible(LieType t) {
  if (!is_admissible(t))
    throw InadmissibleRank("rank " + std::to_string(t.rank) +
                           " is not admissible for family " +
                           std::string(1, to_char(t.family)));
}

/// Closed-form |Delta^+|.
inline std::size_t expected_positive_root_count(LieType t) {
  require_admissible(t);
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
  case LieFamily::A: return n * (n + 1) / 2;
  case LieFamily::B:
  case LieFamily::C: return n * n;
  case LieFamily::D: return n * (n - 1);
  case LieFamily::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case LieFamily::F: return 24;
  case LieFamily::G: return 6;
  }
  return 0;
}

using CartanMatrix = std::vector<std::vector<int>>;

inline CartanMatrix cartan_matrix(LieType t) {
  require_admissible(t);
  const int n = t.rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    a[i][i] = 2;
  auto bond = [&a](int i, int j) { a[i][j] = a[j][i] = -1; };

  switch (t.family) {
  case LieFamily::A:
    for (int i = 0; i + 1 < n; ++i)
      bond(i, i + 1);
    break;
  case LieFamily::B:
    for (int i = 0; i + 1 < n; ++i)
      bond(i, i + 1);
    a[n - 2][n - 1] = -2;
    break;
  case LieFamily::C:
    for (int i = 0; i + 1 < n; ++i)
      bond(i, i + 1);
    a[n - 1][n - 2] = -2;
    break;
  case LieFamily::D:
    for (int i = 0; i + 2 < n; ++i)
      bond(i, i + 1);
    bond(n - 3, n - 1);
    break;
  case LieFamily::E:
    bond(0, 2);
    bond(1, 3);
    for (int i = 2; i + 1 < n; ++i)
      bond(i, i + 1);
    break;
  case LieFamily::F:
    bond(0, 1);
    bond(1, 2);
    bond(2, 3);
    a[1][2] = -2;
    break;
  case LieFamily::G:
    bond(0, 1);
    a[1][0] = -3;
    break;
  }
  return a;
}

struct Root {
  std::vector<int> coeffs;

  int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

  /// Coefficient at a 1-based node.
  int at(int node) const { return coeffs[static_cast<std::size_t>(node - 1)]; }

  friend bool operator==(const Root&, const Root&) = default;
};

/// Graded lexicographic order: height first, then coefficients.
inline bool graded_less(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb)
    return ha < hb;
  return a.coeffs < b.coeffs;
}

class RootSystem {
public:
  RootSystem(LieType type, CartanMatrix cartan, std::vector<Root> positive)
      : type_(type), cartan_(std::move(cartan)), positive_(std::move(positive)) {}

  LieType type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }

private:
  LieType type_;
  CartanMatrix cartan_;
  std::vector<Root> positive_;
};

namespace detail {

inline int coroot_pairing(const std::vector<int>& beta, const CartanMatrix& a,
                          std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j)
    s += beta[j] * a[j][i];
  return s;
}

} // namespace detail

/// Closure over root strings: beta + alpha_i is a root iff q > 0, where
/// p - q = <beta, alpha_i^vee> and p is the length of the downward string.
/// `order` fixes the order in which simple roots are tried at each step.
inline std::vector<Root> enumerate_positive_roots(const CartanMatrix& a,
                                                  const std::vector<std::size_t>& order) {
  const std::size_t n = a.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i : order) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    frontier.push_back(e);
    known.insert(e);
  }

  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (std::size_t i : order) {
        int p = 0;
        for (auto down = beta;;) {
          if (down[i] == 0)
            break;
          --down[i];
          if (!known.contains(down))
            break;
          ++p;
        }
        const int q = p - detail::coroot_pairing(beta, a, i);
        if (q > 0) {
          auto up = beta;
          ++up[i];
          if (known.insert(up).second)
            next.push_back(std::move(up));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Root> roots;
  roots.reserve(known.size());
  for (const auto& c : known)
    roots.push_back(Root{c});
  std::sort(roots.begin(), roots.end(), graded_less);
  return roots;
}

inline RootSystem positive_roots(LieType t) {
  auto a = cartan_matrix(t);
  std::vector<std::size_t> order(static_cast<std::size_t>(t.rank));
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto roots = enumerate_positive_roots(a, order);
  return RootSystem(t, std::move(a), std::move(roots));
}

inline void require_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw NodeOutOfRange("node " + std::to_string(node) + " outside 1.." +
                         std::to_string(rs.rank()) + " for " + rs.type().name());
}

/// Positive roots whose coefficient at `node` (1-based) equals k.
inline std::vector<Root> level_set(const RootSystem& rs, int node, int k) {
  require_node(rs, node);
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots())
    if (r.at(node) == k)
      out.push_back(r);
  return out;
}

inline Root highest_root(const RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  // Graded order puts the unique root of maximal height last.
  return roots.back();
}

/// Node permutation of the nontrivial Dynkin diagram automorphism used by the
/// property checks (A_n reversal, D_n fork swap, E_6 flip), 1-based.
inline std::optional<std::vector<int>> diagram_automorphism(LieType t) {
  require_admissible(t);
  const int n = t.rank;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  switch (t.family) {
  case LieFamily::A:
    if (n < 2)
      return std::nullopt;
    for (int r = 1; r <= n; ++r)
      perm[r - 1] = n + 1 - r;
    return perm;
  case LieFamily::D:
    std::swap(perm[n - 2], perm[n - 1]);
    return perm;
  case LieFamily::E:
    if (n != 6)
      return std::nullopt;
    std::swap(perm[0], perm[5]);
    std::swap(perm[2], perm[4]);
    return perm;
  default:
    return std::nullopt;
  }
}

} // namespace hsckit
