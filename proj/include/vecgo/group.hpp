// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vecgo/error.hpp"

namespace vecgo {

/// Sorted list of the elements of a subgroup.
using Subgroup = std::vector<int>;

/// Finite group given by its multiplication table; elements are 0-based indices.
class FiniteGroup {
 public:
  FiniteGroup() : n_(1), id_(0), t_{0}, inv_{0} {}

  /// Validates associativity, identity and inverses.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail(ErrorCode::NoIdentity, "empty multiplication table");
    FiniteGroup G;
    G.n_ = n;
    G.t_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n) fail(ErrorCode::ShapeMismatch, "table is not square");
      for (int b = 0; b < n; ++b) {
        int v = table[a][b];
        if (v < 0 || v >= n) fail(ErrorCode::IndexOutOfRange, "table entry out of range");
        G.t_[a * n + b] = v;
      }
    }
    G.id_ = -1;
    for (int e = 0; e < n && G.id_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = G.mul(e, a) == a && G.mul(a, e) == a;
      if (ok) G.id_ = e;
    }
    if (G.id_ < 0) fail(ErrorCode::NoIdentity, "no two-sided identity");
    G.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (G.mul(a, b) == G.id_ && G.mul(b, a) == G.id_) {
          G.inv_[a] = b;
          break;
        }
      if (G.inv_[a] < 0) fail(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
            fail(ErrorCode::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + ")");
    return G;
  }

  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return t_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) out[a][b] = mul(a, b);
    return out;
  }

  int element_order(int g) const {
    int k = 1;
    for (int x = g; x != id_; x = mul(x, g)) ++k;
    return k;
  }

  int exponent() const {
    std::int64_t e = 1;
    for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<std::int64_t>(element_order(g)));
    return static_cast<int>(e);
  }

  /// g^k for k >= 0.
  int power(int g, int k) const {
    int x = id_;
    for (int i = 0; i < k; ++i) x = mul(x, g);
    return x;
  }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

 private:
  int n_;
  int id_;
  std::vector<int> t_;
  std::vector<int> inv_;
};

inline FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
  return FiniteGroup::from_table(table);
}

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) fail(ErrorCode::IndexOutOfRange, "cyclic_group needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(t);
}

/// Element (g, h) of G x H has index g * |H| + h.
inline int pair_index(const FiniteGroup& H, int g, int h) { return g * H.order() + h; }
inline int pair_first(const FiniteGroup& H, int gh) { return gh / H.order(); }
inline int pair_second(const FiniteGroup& H, int gh) { return gh % H.order(); }

inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const int n = G.order() * H.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = pair_index(H, G.mul(pair_first(H, a), pair_first(H, b)),
                           H.mul(pair_second(H, a), pair_second(H, b)));
  return FiniteGroup::from_table(t);
}

inline FiniteGroup opposite_group(const FiniteGroup& G) {
  auto t = G.table();
  std::vector<std::vector<int>> op(t.size(), std::vector<int>(t.size()));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) op[a][b] = t[b][a];
  return FiniteGroup::from_table(op);
}

/// Smallest subgroup containing the given elements.
inline Subgroup closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> elems{G.identity()};
  in[G.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int y = G.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& S) {
  std::vector<char> in(G.order(), 0);
  for (int s : S) {
    if (s < 0 || s >= G.order()) return false;
    in[s] = 1;
  }
  if (!in[G.identity()]) return false;
  for (int a : S) {
    if (!in[G.inv(a)]) return false;
    for (int b : S)
      if (!in[G.mul(a, b)]) return false;
  }
  return true;
}

/// All subgroups of G sorted lexicographically. Joins of cyclic subgroups are
/// closed under further joins until no new subgroup appears, so the list is complete.
inline std::vector<Subgroup> subgroups(const FiniteGroup& G, int bound = 24) {
  if (G.order() > bound)
    fail(ErrorCode::EnumerationBoundExceeded, "group order " + std::to_string(G.order()) + " exceeds bound");
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (int g = 0; g < G.order(); ++g) {
    Subgroup c = closure(G, {g});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& S : frontier)
      for (const auto& C : cyclic) {
        std::vector<int> gens = S;
        gens.insert(gens.end(), C.begin(), C.end());
        Subgroup J = closure(G, gens);
        if (found.insert(J).second) next.push_back(J);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline Subgroup conjugate_by(const FiniteGroup& G, int g, const Subgroup& H) {
  Subgroup out;
  for (int h : H) out.push_back(G.mul(G.mul(g, h), G.inv(g)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether g H1 g^-1 = H2 for some g.
inline bool conjugate(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2) {
  if (H1.size() != H2.size()) return false;
  Subgroup target = H2;
  std::sort(target.begin(), target.end());
  for (int g = 0; g < G.order(); ++g)
    if (conjugate_by(G, g, H1) == target) return true;
  return false;
}

/// Lexicographically smallest conjugate; a canonical label for the conjugacy class.
inline Subgroup canonical_conjugate(const FiniteGroup& G, const Subgroup& H) {
  Subgroup best = conjugate_by(G, G.identity(), H);
  for (int g = 0; g < G.order(); ++g) best = std::min(best, conjugate_by(G, g, H));
  return best;
}

/// The subgroup as a group in its own right; embedding[i] is the element of G
/// represented by index i.
inline FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S, std::vector<int>* embedding = nullptr) {
  if (!is_subgroup(G, S)) fail(ErrorCode::InvalidAction, "not a subgroup");
  std::vector<int> elems = S;
  std::sort(elems.begin(), elems.end());
  std::vector<int> index(G.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index[G.mul(elems[a], elems[b])];
  if (embedding) *embedding = elems;
  return FiniteGroup::from_table(t);
}

/// An element generating G, or -1 when G is not cyclic.
inline int cyclic_generator(const FiniteGroup& G) {
  for (int g = 0; g < G.order(); ++g)
    if (G.element_order(g) == G.order()) return g;
  return -1;
}

/// Exponent vectors e with g -> zeta_N^{e[g]} a homomorphism, sorted lexicographically.
inline std::vector<std::vector<int>> character_exponents(const FiniteGroup& G, int N) {
  // images of a generating set determine the character
  std::vector<int> gens;
  Subgroup cur = closure(G, {});
  for (int g = 0; g < G.order(); ++g)
    if (!std::binary_search(cur.begin(), cur.end(), g)) {
      gens.push_back(g);
      cur = closure(G, gens);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> img(gens.size(), 0);
  while (true) {
    std::vector<int> e(G.order(), -1);
    e[G.identity()] = 0;
    std::vector<int> queue{G.identity()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      int x = queue[q];
      for (std::size_t s = 0; s < gens.size() && ok; ++s) {
        int y = G.mul(x, gens[s]);
        int v = (e[x] + img[s]) % N;
        if (e[y] < 0) {
          e[y] = v;
          queue.push_back(y);
        } else if (e[y] != v) {
          ok = false;
        }
      }
    }
    for (int a = 0; a < G.order() && ok; ++a)
      for (int b = 0; b < G.order() && ok; ++b) ok = e[G.mul(a, b)] == (e[a] + e[b]) % N;
    if (ok) out.push_back(e);
    std::size_t k = 0;
    while (k < img.size() && ++img[k] == N) img[k++] = 0;
    if (k == img.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vecgo
