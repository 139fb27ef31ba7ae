// Small groups, G-sets and random cochains shared by the test binaries.
#pragma once

#include <random>
#include <vector>

#include "vecgo/cochain.hpp"

namespace vecgo::testing {

inline FiniteGroup dihedral_group(int n) {
  // r^a s^b has index a + n b
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int a1 = x % n, b1 = x / n, a2 = y % n, b2 = y / n;
      int a = b1 ? (a1 - a2 + n) % n : (a1 + a2) % n;
      t[x][y] = a + n * ((b1 + b2) % 2);
    }
  return group_from_table(t);
}

/// Every group of order <= 8 up to isomorphism except Q8, plus Q8.
inline std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 8; ++n) out.push_back(cyclic_group(n));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  out.push_back(dihedral_group(3));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  out.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
  out.push_back(dihedral_group(4));
  // quaternions: index = 4 s + k for i^k j^s, with j i = i^3 j and j^2 = i^2
  std::vector<std::vector<int>> q(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int k1 = x % 4, s1 = x / 4, k2 = y % 4, s2 = y / 4;
      int k = (k1 + (s1 ? 4 - k2 : k2)) % 4;
      if (s1 && s2) k = (k + 2) % 4;
      q[x][y] = k + 4 * ((s1 + s2) % 2);
    }
  out.push_back(group_from_table(q));
  return out;
}

/// Random G-set of size <= max_size built from coset spaces.
inline GSet random_gset(const FiniteGroup& G, std::mt19937& rng, int max_size = 4) {
  auto subs = subgroups(G);
  std::vector<GSet> pieces;
  for (const auto& H : subs)
    if (G.order() / static_cast<int>(H.size()) <= max_size) pieces.push_back(coset_gset(G, H));
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  GSet X = pieces[pick(rng)];
  for (int tries = 0; tries < 3; ++tries) {
    const GSet& Y = pieces[pick(rng)];
    if (X.size() + Y.size() <= max_size && rng() % 2) X = disjoint_union(X, Y);
  }
  return X;
}

inline UnitCochain random_cochain(int degree, const GSet& X, int N, std::mt19937& rng) {
  UnitCochain c(degree, X, N);
  std::uniform_int_distribution<int> e(0, N - 1);
  for (std::size_t i = 0; i < c.size(); ++i) c.set_exponent_at(i, e(rng));
  return c;
}

inline UnitCochain random_normalized_cochain(int degree, const GSet& X, int N, std::mt19937& rng) {
  UnitCochain c = random_cochain(degree, X, N, rng);
  std::vector<int> args(degree);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c.decode(i, args.data());
    for (int a : args)
      if (a == X.group().identity()) c.set_exponent_at(i, 0);
  }
  return c;
}

}  // namespace vecgo::testing
