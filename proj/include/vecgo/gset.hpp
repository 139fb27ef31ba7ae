// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vecgo/group.hpp"

namespace vecgo {

/// Left action of a finite group on {0, ..., size-1}.
class GSet {
 public:
  GSet() : size_(1), act_{0} {}

  /// action[g][x] = g |> x; validated.
  static GSet from_table(const FiniteGroup& G, const std::vector<std::vector<int>>& action) {
    if (static_cast<int>(action.size()) != G.order()) fail(ErrorCode::ShapeMismatch, "action needs one row per group element");
    GSet X;
    X.G_ = G;
    X.size_ = action.empty() ? 0 : static_cast<int>(action[0].size());
    if (X.size_ < 1) fail(ErrorCode::ShapeMismatch, "G-set must be nonempty");
    X.act_.assign(static_cast<std::size_t>(G.order()) * X.size_, 0);
    for (int g = 0; g < G.order(); ++g) {
      if (static_cast<int>(action[g].size()) != X.size_) fail(ErrorCode::ShapeMismatch, "ragged action table");
      for (int x = 0; x < X.size_; ++x) {
        int y = action[g][x];
        if (y < 0 || y >= X.size_) fail(ErrorCode::IndexOutOfRange, "action entry out of range");
        X.act_[g * X.size_ + x] = y;
      }
    }
    for (int x = 0; x < X.size_; ++x)
      if (X.act(G.identity(), x) != x) fail(ErrorCode::InvalidAction, "identity moves point " + std::to_string(x));
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h)
        for (int x = 0; x < X.size_; ++x)
          if (X.act(g, X.act(h, x)) != X.act(G.mul(g, h), x))
            fail(ErrorCode::InvalidAction, "g(hx) != (gh)x at g=" + std::to_string(g) + " h=" + std::to_string(h) +
                                               " x=" + std::to_string(x));
    return X;
  }

  const FiniteGroup& group() const { return G_; }
  int size() const { return size_; }
  int act(int g, int x) const { return act_[g * size_ + x]; }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> out(G_.order(), std::vector<int>(size_));
    for (int g = 0; g < G_.order(); ++g)
      for (int x = 0; x < size_; ++x) out[g][x] = act(g, x);
    return out;
  }

  /// The subgroup H when this set was built as G/H (base point index 0).
  const std::optional<Subgroup>& coset_subgroup() const { return coset_; }
  void set_coset_subgroup(Subgroup H) { coset_ = std::move(H); }

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.G_ == b.G_ && a.size_ == b.size_ && a.act_ == b.act_;
  }
  friend bool operator!=(const GSet& a, const GSet& b) { return !(a == b); }

 private:
  FiniteGroup G_;
  int size_;
  std::vector<int> act_;
  std::optional<Subgroup> coset_;
};

inline GSet point_gset(const FiniteGroup& G) {
  return GSet::from_table(G, std::vector<std::vector<int>>(G.order(), std::vector<int>{0}));
}

inline GSet coset_gset(const FiniteGroup& G, const Subgroup& H);

/// Left multiplication of G on itself, as the coset space G/{1}.
inline GSet regular_gset(const FiniteGroup& G) { return coset_gset(G, {G.identity()}); }

/// G acting on left cosets gH; cosets are numbered by their minimal element, H itself is 0.
inline GSet coset_gset(const FiniteGroup& G, const Subgroup& H) {
  if (!is_subgroup(G, H)) fail(ErrorCode::InvalidAction, "coset_gset needs a subgroup");
  std::vector<int> coset_of(G.order(), -1);
  int count = 0;
  for (int h : H) coset_of[h] = 0;
  count = 1;
  for (int g = 0; g < G.order(); ++g) {
    if (coset_of[g] >= 0) continue;
    for (int h : H) coset_of[G.mul(g, h)] = count;
    ++count;
  }
  std::vector<int> rep(count, -1);
  for (int g = G.order() - 1; g >= 0; --g) rep[coset_of[g]] = g;
  std::vector<std::vector<int>> action(G.order(), std::vector<int>(count));
  for (int g = 0; g < G.order(); ++g)
    for (int c = 0; c < count; ++c) action[g][c] = coset_of[G.mul(g, rep[c])];
  GSet X = GSet::from_table(G, action);
  Subgroup sorted = H;
  std::sort(sorted.begin(), sorted.end());
  X.set_coset_subgroup(sorted);
  return X;
}

inline GSet disjoint_union(const GSet& X, const GSet& Y) {
  if (X.group() != Y.group()) fail(ErrorCode::SourceTargetMismatch, "disjoint union over different groups");
  std::vector<std::vector<int>> action(X.group().order());
  for (int g = 0; g < X.group().order(); ++g) {
    for (int x = 0; x < X.size(); ++x) action[g].push_back(X.act(g, x));
    for (int y = 0; y < Y.size(); ++y) action[g].push_back(X.size() + Y.act(g, y));
  }
  return GSet::from_table(X.group(), action);
}

/// Action of K through a homomorphism phi: K -> G (phi[k] is the image of k).
inline GSet pullback(const GSet& X, const FiniteGroup& K, const std::vector<int>& phi) {
  std::vector<std::vector<int>> action(K.order(), std::vector<int>(X.size()));
  for (int k = 0; k < K.order(); ++k)
    for (int x = 0; x < X.size(); ++x) action[k][x] = X.act(phi[k], x);
  return GSet::from_table(K, action);
}

/// Orbits sorted by minimal element; each orbit sorted ascending.
inline std::vector<std::vector<int>> orbits(const GSet& X) {
  std::vector<int> seen(X.size(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < X.size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (int g = 0; g < X.group().order(); ++g) {
      int y = X.act(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

inline bool is_transitive(const GSet& X) { return orbits(X).size() == 1; }

inline Subgroup stabilizer(const GSet& X, int x) {
  Subgroup S;
  for (int g = 0; g < X.group().order(); ++g)
    if (X.act(g, x) == x) S.push_back(g);
  return S;
}

/// Restriction to a G-stable subset; index_map[i] is the original point of new point i.
inline GSet sub_gset(const GSet& X, std::vector<int> points, std::vector<int>* index_map = nullptr) {
  std::sort(points.begin(), points.end());
  std::vector<int> pos(X.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> action(X.group().order(), std::vector<int>(points.size()));
  for (int g = 0; g < X.group().order(); ++g)
    for (std::size_t i = 0; i < points.size(); ++i) {
      int y = pos[X.act(g, points[i])];
      if (y < 0) fail(ErrorCode::InvalidAction, "subset is not G-stable");
      action[g][i] = y;
    }
  if (index_map) *index_map = points;
  return GSet::from_table(X.group(), action);
}

inline std::vector<int> identity_permutation(int n) {
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  return f;
}

/// Whether f: X -> Y commutes with the action.
inline bool is_equivariant(const GSet& X, const GSet& Y, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != X.size()) return false;
  for (int y : f)
    if (y < 0 || y >= Y.size()) return false;
  for (int g = 0; g < X.group().order(); ++g)
    for (int x = 0; x < X.size(); ++x)
      if (f[X.act(g, x)] != Y.act(g, f[x])) return false;
  return true;
}

/// All equivariant bijections X -> Y (f[x] = image of x), in lexicographic order.
/// Each orbit of X is matched against an unused orbit of Y of the same size, then its
/// base point is sent to a point with the same stabilizer.
inline std::vector<std::vector<int>> gset_isomorphisms(const GSet& X, const GSet& Y, int bound = 8) {
  if (X.group() != Y.group()) fail(ErrorCode::SourceTargetMismatch, "G-sets over different groups");
  if (X.size() > bound || Y.size() > bound)
    fail(ErrorCode::EnumerationBoundExceeded, "G-set size exceeds bound " + std::to_string(bound));
  std::vector<std::vector<int>> out;
  if (X.size() != Y.size()) return out;
  const auto ox = orbits(X);
  const auto oy = orbits(Y);
  const FiniteGroup& G = X.group();
  std::vector<int> f(X.size(), -1);
  std::vector<char> used(oy.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ox.size()) {
      out.push_back(f);
      return;
    }
    int x0 = ox[i][0];
    Subgroup sx = stabilizer(X, x0);
    for (std::size_t j = 0; j < oy.size(); ++j) {
      if (used[j] || oy[j].size() != ox[i].size()) continue;
      for (int y : oy[j]) {
        if (stabilizer(Y, y) != sx) continue;
        for (int g = 0; g < G.order(); ++g) f[X.act(g, x0)] = Y.act(g, y);
        used[j] = 1;
        rec(i + 1);
        used[j] = 0;
      }
    }
    for (int x : ox[i]) f[x] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vecgo
