// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vecgo/modfun.hpp"

namespace vecgo {

/// Symbol families. The Inv members are the inverse symbols at the same labels.
enum class SixJKind { FusionPlus, FusionMinus, M, MInv, N, NInv, B, BInv, S, SInv, T, TInv };

inline const char* kind_name(SixJKind k) {
  switch (k) {
    case SixJKind::FusionPlus: return "fusion+";
    case SixJKind::FusionMinus: return "fusion-";
    case SixJKind::M: return "m";
    case SixJKind::MInv: return "m-inv";
    case SixJKind::N: return "n";
    case SixJKind::NInv: return "n-inv";
    case SixJKind::B: return "b";
    case SixJKind::BInv: return "b-inv";
    case SixJKind::S: return "s";
    case SixJKind::SInv: return "s-inv";
    case SixJKind::T: return "t";
    case SixJKind::TInv: return "t-inv";
  }
  return "?";
}

inline std::optional<SixJKind> parse_kind(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(SixJKind::TInv); ++k)
    if (s == kind_name(static_cast<SixJKind>(k))) return static_cast<SixJKind>(k);
  return std::nullopt;
}

inline bool is_matrix_kind(SixJKind k) { return k == SixJKind::S || k == SixJKind::SInv || k == SixJKind::T || k == SixJKind::TInv; }
inline int label_count(SixJKind k) { return is_matrix_kind(k) ? 5 : 6; }

/// A plain module category seen as a (G, 1)-bimodule category.
inline BimoduleCategoryData as_bimodule(const ModuleCategoryData& M) {
  const FiniteGroup& G = M.group();
  FiniteGroup one = cyclic_group(1);
  FiniteGroup GH = direct_product(G, one);
  std::vector<int> phi(GH.order());
  for (int i = 0; i < GH.order(); ++i) phi[i] = pair_first(one, i);
  GSet X = pullback(M.X, GH, phi);
  GSet XG = restrict_to_left(X, G, one), XH = restrict_to_right(X, G, one);
  UnitCochain psi(2, XG, M.psi.root_order(), M.psi.exponents());
  return BimoduleCategoryData{M.fusion, make_fusion(omega_cyclic(1, 0)), X, psi, UnitCochain(2, XH, 1),
                              MidTable(G.order(), 1, X.size(), 1)};
}

inline BimoduleFunctorData as_bimodfun(const ModuleFunctorData& F) {
  BimoduleFunctorData out{as_bimodule(F.source), as_bimodule(F.target), F.mult, F.A, {}};
  out.B.resize(F.mult.size());
  for (std::size_t i = 0; i < F.mult.size(); ++i) out.B[i] = Matrix::identity(F.mult[i]);
  return out;
}

/// Bimodule category together with its trace.
struct CategoryContext {
  BimoduleCategoryData cat;
  ModuleTrace trace;
};

/// Bimodule functor together with traces on source and target.
struct FunctorContext {
  BimoduleFunctorData functor;
  ModuleTrace source_trace, target_trace;
};

inline CategoryContext make_category_context(const BimoduleCategoryData& B, const char* what = "bimodule category") {
  auto t = bimodule_trace(B);
  if (!t) fail(ErrorCode::NoTrace, std::string("the ") + what + " has no module trace");
  return CategoryContext{B, *t};
}
inline CategoryContext make_category_context(const ModuleCategoryData& M) {
  return make_category_context(as_bimodule(M), "module category");
}

inline FunctorContext make_functor_context(const BimoduleFunctorData& F) {
  auto s = bimodule_trace(F.source);
  if (!s) fail(ErrorCode::NoTrace, "the source category has no module trace");
  auto t = bimodule_trace(F.target);
  if (!t) fail(ErrorCode::NoTrace, "the target category has no module trace");
  return FunctorContext{F, *s, *t};
}
inline FunctorContext make_functor_context(const ModuleFunctorData& F) { return make_functor_context(as_bimodfun(F)); }

namespace detail {

/// Uniform view of one symbol family in a context: label domains, the two rescaled
/// label positions, the dimension of a label, and an evaluator returning the symbol
/// as a matrix (1 x 1 for scalar kinds), or nothing when the labels do not compose
/// or carry no multiplicity.
struct Family {
  std::vector<int> domain;
  int P = 0, Q = 0;  // the plus symbol is rescaled at P, the inverse at Q
  std::function<Scalar(int pos, int label)> dim;
  std::function<std::optional<Matrix>(const std::vector<int>&, bool inv)> eval;
  bool matrix = false;

  /// Nothing when undefined or without multiplicity indices.
  std::optional<Matrix> value(const std::vector<int>& L, bool inv) const {
    auto m = eval(L, inv);
    if (!m || m->empty()) return std::nullopt;
    return m;
  }
};

inline Family fusion_family(const FusionData& F) {
  if (!F.is_spherical()) fail(ErrorCode::NotSpherical, "6j symbols need a spherical structure");
  const FiniteGroup& G = F.group();
  Family f;
  f.domain.assign(6, G.order());
  f.P = 3;  // a
  f.Q = 5;  // c
  f.dim = [&F](int, int l) { return F.kap(l).to_scalar(); };
  f.eval = [&F, &G](const std::vector<int>& L, bool inv) -> std::optional<Matrix> {
    int i = L[0], j = L[1], k = L[2], a = L[3], b = L[4], c = L[5];
    if (c != G.mul(i, j) || a != G.mul(j, k) || b != G.mul(c, k)) return std::nullopt;
    return Matrix::scalar(fusion_6j(F, inv ? Sign::Minus : Sign::Plus, i, j, k, a, b, c));
  };
  return f;
}

inline Family category_family(const CategoryContext& C, SixJKind kind) {
  const BimoduleCategoryData& B = C.cat;
  const FiniteGroup &G = B.G(), &H = B.H();
  const int g = G.order(), h = H.order(), x = B.X.size();
  Family f;
  auto kx = [&C](int l) { return C.trace.dim(l); };
  switch (kind) {
    case SixJKind::M:
    case SixJKind::MInv:
      // (i, j, k, a, b, c): i, j, c in G; k, a, b in X; c = ij, a = j|>k, b = c|>k
      f.domain = {g, g, x, x, x, g};
      f.P = 3;
      f.Q = 5;
      f.dim = [&C, kx](int pos, int l) { return pos == 5 ? C.cat.left.kap(l).to_scalar() : kx(l); };
      f.eval = [&C, kx](const std::vector<int>& L, bool inv) -> std::optional<Matrix> {
        const BimoduleCategoryData& B = C.cat;
        int i = L[0], j = L[1], k = L[2], a = L[3], b = L[4], c = L[5];
        if (c != B.G().mul(i, j) || a != B.gx(j, k) || b != B.gx(c, k)) return std::nullopt;
        Unit p = B.psi.value({i, j}, b);
        if (inv) return Matrix::scalar(B.left.kap(c).to_scalar() * p.inverse().to_scalar());
        return Matrix::scalar(kx(a) * p.to_scalar());
      };
      return f;
    case SixJKind::N:
    case SixJKind::NInv:
      // (i, j, k, a, b, c): j, k, c in H; i, a, b in X; b = i<|c, a = i<|j, c = jk
      f.domain = {x, h, h, x, x, h};
      f.P = 5;
      f.Q = 3;
      f.dim = [&C, kx](int pos, int l) { return pos == 5 ? C.cat.right.kap(l).to_scalar() : kx(l); };
      f.eval = [&C, kx](const std::vector<int>& L, bool inv) -> std::optional<Matrix> {
        const BimoduleCategoryData& B = C.cat;
        const FiniteGroup& H = B.H();
        int i = L[0], j = L[1], k = L[2], a = L[3], b = L[4], c = L[5];
        if (c != H.mul(j, k) || a != B.hx(H.inv(j), i) || b != B.hx(H.inv(c), i)) return std::nullopt;
        Unit p = B.phi.value({H.inv(k), H.inv(j)}, b);
        if (inv) return Matrix::scalar(kx(a) * p.to_scalar());
        return Matrix::scalar(B.right.kap(c).to_scalar() * p.inverse().to_scalar());
      };
      return f;
    case SixJKind::B:
    case SixJKind::BInv:
      // (i, j, k, a, b, c): i in G, k in H, the rest in X; c = i|>j, a = j<|k, b = c<|k
      f.domain = {g, x, h, x, x, x};
      f.P = 3;
      f.Q = 5;
      f.dim = [kx](int, int l) { return kx(l); };
      f.eval = [&C, kx](const std::vector<int>& L, bool inv) -> std::optional<Matrix> {
        const BimoduleCategoryData& B = C.cat;
        const FiniteGroup& H = B.H();
        int i = L[0], j = L[1], k = L[2], a = L[3], b = L[4], c = L[5];
        if (c != B.gx(i, j) || a != B.hx(H.inv(k), j) || b != B.hx(H.inv(k), c)) return std::nullopt;
        Unit o = B.omega.value(i, H.inv(k), b);
        if (inv) return Matrix::scalar(kx(c) * o.inverse().to_scalar());
        return Matrix::scalar(kx(a) * o.to_scalar());
      };
      return f;
    default:
      fail(ErrorCode::ShapeMismatch, std::string("kind ") + kind_name(kind) + " needs a different context");
  }
}

inline Family functor_family(const FunctorContext& C, SixJKind kind) {
  const BimoduleFunctorData& F = C.functor;
  const int g = F.source.G().order(), h = F.source.H().order(), x = F.nx(), y = F.ny();
  Family f;
  f.P = 2;  // a
  f.Q = 4;  // c
  f.matrix = true;
  f.dim = [&C](int pos, int l) { return pos == 4 ? C.source_trace.dim(l) : C.target_trace.dim(l); };
  if (kind == SixJKind::S || kind == SixJKind::SInv) {
    // (i, j, a, b, c): i in G; j, c in X; a, b in Y; c = i|>j, b = i|>a
    f.domain = {g, x, y, y, x};
    f.eval = [&C](const std::vector<int>& L, bool inv) -> std::optional<Matrix> {
      const BimoduleFunctorData& F = C.functor;
      int i = L[0], j = L[1], a = L[2], b = L[3], c = L[4];
      if (c != F.source.gx(i, j) || b != F.target.gx(i, a)) return std::nullopt;
      const Matrix& A = F.a(i, j, a);
      if (inv) {
        auto Ai = try_inverse(A);
        if (!Ai) return std::nullopt;
        return C.source_trace.dim(c) * *Ai;
      }
      return C.target_trace.dim(a) * A;
    };
    return f;
  }
  if (kind == SixJKind::T || kind == SixJKind::TInv) {
    // (l, i, a, b, c): l in H; i, c in X; a, b in Y; c = l^-1|>i, b = l^-1|>a
    f.domain = {h, x, y, y, x};
    f.eval = [&C](const std::vector<int>& L, bool inv) -> std::optional<Matrix> {
      const BimoduleFunctorData& F = C.functor;
      const FiniteGroup& H = F.source.H();
      int l = L[0], i = L[1], a = L[2], b = L[3], c = L[4];
      if (c != F.source.hx(H.inv(l), i) || b != F.target.hx(H.inv(l), a)) return std::nullopt;
      const Matrix& Bm = F.b(l, i, a);
      if (inv) {
        auto Bi = try_inverse(Bm);
        if (!Bi) return std::nullopt;
        return C.source_trace.dim(c) * *Bi;
      }
      return C.target_trace.dim(a) * Bm;
    };
    return f;
  }
  fail(ErrorCode::ShapeMismatch, std::string("kind ") + kind_name(kind) + " needs a different context");
}

inline bool is_inverse_kind(SixJKind k) {
  return k == SixJKind::FusionMinus || k == SixJKind::MInv || k == SixJKind::NInv || k == SixJKind::BInv ||
         k == SixJKind::SInv || k == SixJKind::TInv;
}

inline Scalar evaluate(const Family& f, SixJKind kind, const std::vector<int>& labels, const std::vector<int>& idx) {
  if (labels.size() != f.domain.size()) fail(ErrorCode::IndexOutOfRange, "wrong number of labels");
  for (std::size_t p = 0; p < labels.size(); ++p)
    if (labels[p] < 0 || labels[p] >= f.domain[p]) fail(ErrorCode::IndexOutOfRange, "label out of range");
  auto m = f.eval(labels, is_inverse_kind(kind));
  if (!m && is_inverse_kind(kind) && f.eval(labels, false)) fail(ErrorCode::DivisionByZero, "matrix is singular");
  if (!m) fail(ErrorCode::UndefinedLabels, "labels do not compose");
  if (!is_matrix_kind(kind)) {
    if (!idx.empty()) fail(ErrorCode::IndexOutOfRange, "scalar symbols take no multiplicity indices");
    return (*m)(0, 0);
  }
  if (idx.size() != 2 || idx[0] < 0 || idx[1] < 0 || idx[0] >= m->rows() || idx[1] >= m->cols())
    fail(ErrorCode::IndexOutOfRange, "multiplicity index out of range");
  return (*m)(idx[0], idx[1]);
}

inline void for_each_tuple(const std::vector<int>& domain, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(domain.size(), 0);
  for (int d : domain)
    if (d == 0) return;
  for (;;) {
    fn(t);
    std::size_t p = domain.size();
    while (p > 0) {
      --p;
      if (++t[p] < domain[p]) break;
      t[p] = 0;
      if (p == 0) return;
    }
    if (domain.empty()) return;
  }
}

/// Orthogonality of one family: the form summed over P, optionally also the one summed
/// over Q. Outer tuples are admissible when each of the two symbols is defined for some
/// value of the summed label.
inline Report orthogonality(const Family& f, const std::string& name, bool both_forms = true) {
  Report rep;
  const int P = f.P, Q = f.Q;
  // defined tuples with P (resp. Q) erased; plus and inverse symbols share their labels
  std::set<std::vector<int>> keys_p, keys_q;
  for_each_tuple(f.domain, [&](const std::vector<int>& t) {
    if (!f.value(t, false)) return;
    auto u = t;
    u[P] = -1;
    keys_p.insert(u);
    u = t;
    u[Q] = -1;
    keys_q.insert(u);
  });

  // form 1: sum over P, compare Q with Q'
  for (const auto& u : keys_p)
    for (int q2 = 0; q2 < f.domain[Q]; ++q2) {
      auto w = u;
      w[Q] = q2;
      if (!keys_p.count(w)) continue;
      std::optional<Matrix> sum;
      for (int p = 0; p < f.domain[P]; ++p) {
        auto t1 = u, t2 = w;
        t1[P] = t2[P] = p;
        auto plus = f.value(t1, false);
        auto inv = f.value(t2, true);
        if (!inv && f.value(t2, false)) rep.check(false, name + " inverse symbol", t2, "singular", "invertible");
        if (!plus || !inv) continue;
        Matrix term = (f.dim(P, p) * f.dim(Q, q2)) * (*inv * *plus);
        sum = sum ? *sum + term : term;
      }
      if (!sum) continue;
      for (int r = 0; r < sum->rows(); ++r)
        for (int s = 0; s < sum->cols(); ++s) {
          Scalar want = (u[Q] == q2 && r == s) ? Scalar::one() : Scalar::zero();
          std::vector<int> tuple = u;
          tuple[P] = -1;
          tuple.push_back(q2);
          if (f.matrix) tuple.insert(tuple.end(), {r, s});
          rep.check((*sum)(r, s) == want, name + " orthogonality (sum over label " + std::to_string(P) + ")", tuple,
                    (*sum)(r, s).to_string(), want.to_string());
        }
    }

  if (!both_forms) return rep;
  // form 2: sum over Q, compare P with P'
  for (const auto& v : keys_q)
    for (int p2 = 0; p2 < f.domain[P]; ++p2) {
      auto w = v;
      w[P] = p2;
      if (!keys_q.count(w)) continue;
      std::optional<Matrix> sum;
      for (int q = 0; q < f.domain[Q]; ++q) {
        auto t1 = v, t2 = w;
        t1[Q] = t2[Q] = q;
        auto plus = f.value(t1, false);
        auto inv = f.value(t2, true);
        if (!inv && f.value(t2, false)) rep.check(false, name + " inverse symbol", t2, "singular", "invertible");
        if (!plus || !inv) continue;
        Matrix term = (f.dim(Q, q) * f.dim(P, p2)) * (*plus * *inv);
        sum = sum ? *sum + term : term;
      }
      if (!sum) continue;
      for (int r = 0; r < sum->rows(); ++r)
        for (int s = 0; s < sum->cols(); ++s) {
          Scalar want = (v[P] == p2 && r == s) ? Scalar::one() : Scalar::zero();
          std::vector<int> tuple = v;
          tuple.push_back(p2);
          if (f.matrix) tuple.insert(tuple.end(), {r, s});
          rep.check((*sum)(r, s) == want, name + " orthogonality (sum over label " + std::to_string(Q) + ")", tuple,
                    (*sum)(r, s).to_string(), want.to_string());
        }
    }
  return rep;
}

}  // namespace detail

/// Single symbol lookups. Labels follow the family's signature; matrix kinds take
/// two multiplicity indices (row, column).
inline Scalar sixj(const FusionData& F, SixJKind kind, const std::vector<int>& labels) {
  if (kind != SixJKind::FusionPlus && kind != SixJKind::FusionMinus)
    fail(ErrorCode::ShapeMismatch, std::string("kind ") + kind_name(kind) + " needs a different context");
  return detail::evaluate(detail::fusion_family(F), kind, labels, {});
}

inline Scalar sixj(const CategoryContext& C, SixJKind kind, const std::vector<int>& labels) {
  return detail::evaluate(detail::category_family(C, kind), kind, labels, {});
}

inline Scalar sixj(const FunctorContext& C, SixJKind kind, const std::vector<int>& labels, const std::vector<int>& idx) {
  return detail::evaluate(detail::functor_family(C, kind), kind, labels, idx);
}

struct SixJRow {
  std::vector<int> labels;
  std::vector<int> indices;
  Scalar value;
};

namespace detail {
inline std::vector<SixJRow> table(const Family& f, bool inv) {
  std::vector<SixJRow> rows;
  for_each_tuple(f.domain, [&](const std::vector<int>& t) {
    auto m = f.value(t, inv);
    if (!m) return;
    if (!f.matrix) {
      rows.push_back({t, {}, (*m)(0, 0)});
      return;
    }
    for (int r = 0; r < m->rows(); ++r)
      for (int s = 0; s < m->cols(); ++s) rows.push_back({t, {r, s}, (*m)(r, s)});
  });
  return rows;
}
}  // namespace detail

/// Every defined symbol of one kind, labels in lexicographic order.
inline std::vector<SixJRow> sixj_table(const FusionData& F, SixJKind kind) {
  if (kind != SixJKind::FusionPlus && kind != SixJKind::FusionMinus)
    fail(ErrorCode::ShapeMismatch, std::string("kind ") + kind_name(kind) + " needs a different context");
  return detail::table(detail::fusion_family(F), kind == SixJKind::FusionMinus);
}
inline std::vector<SixJRow> sixj_table(const CategoryContext& C, SixJKind kind) {
  return detail::table(detail::category_family(C, kind), detail::is_inverse_kind(kind));
}
inline std::vector<SixJRow> sixj_table(const FunctorContext& C, SixJKind kind) {
  return detail::table(detail::functor_family(C, kind), detail::is_inverse_kind(kind));
}

inline Report verify_orthogonality(const FusionData& F) { return detail::orthogonality(detail::fusion_family(F), "fusion", false); }

inline Report verify_orthogonality(const CategoryContext& C) {
  Report rep = detail::orthogonality(detail::category_family(C, SixJKind::M), "m");
  rep.merge(detail::orthogonality(detail::category_family(C, SixJKind::N), "n"));
  rep.merge(detail::orthogonality(detail::category_family(C, SixJKind::B), "b"));
  return rep;
}

inline Report verify_orthogonality(const FunctorContext& C) {
  Report rep = detail::orthogonality(detail::functor_family(C, SixJKind::S), "s");
  rep.merge(detail::orthogonality(detail::functor_family(C, SixJKind::T), "t"));
  return rep;
}

/// Pentagon-type identity for the fusion symbols, over all i, j, m, n.
inline Report verify_biedenharn_elliott(const FusionData& F) {
  detail::Family f = detail::fusion_family(F);
  const FiniteGroup& G = F.group();
  const int n = G.order();
  Report rep;
  auto plus = [&](std::vector<int> L) { return f.value(L, false); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        for (int q = 0; q < n; ++q) {
          int c = G.mul(i, j), k = G.mul(m, q), a = G.mul(j, k), b = G.mul(c, k), d = G.mul(c, m);
          Scalar lhs = (*plus({i, j, k, a, b, c}))(0, 0) * (*plus({c, m, q, k, b, d}))(0, 0);
          Scalar rhs = Scalar::zero();
          for (int fl = 0; fl < n; ++fl) {
            auto t1 = plus({i, fl, q, a, b, d}), t2 = plus({i, j, m, fl, d, c}), t3 = plus({j, m, q, k, a, fl});
            if (t1 && t2 && t3) rhs += f.dim(0, fl) * (*t1)(0, 0) * (*t2)(0, 0) * (*t3)(0, 0);
          }
          rep.check(lhs == rhs, "fusion biedenharn-elliott", {i, j, m, q}, lhs.to_string(), rhs.to_string());
        }
  return rep;
}

/// Mixed identity for the m symbols of a category with the fusion symbols of G.
inline Report verify_biedenharn_elliott(const CategoryContext& C) {
  const BimoduleCategoryData& B = C.cat;
  const FiniteGroup& G = B.G();
  detail::Family mf = detail::category_family(C, SixJKind::M);
  detail::Family ff = detail::fusion_family(B.left);
  Report rep;
  auto m6 = [&](std::vector<int> L) { return mf.value(L, false); };
  auto f6 = [&](std::vector<int> L) { return ff.value(L, false); };
  for (int i = 0; i < G.order(); ++i)
    for (int j = 0; j < G.order(); ++j)
      for (int m = 0; m < G.order(); ++m)
        for (int q = 0; q < B.X.size(); ++q) {
          int k = B.gx(m, q), a = B.gx(j, k), b = B.gx(i, a), c = G.mul(i, j), d = G.mul(c, m);
          Scalar lhs = (*m6({i, j, k, a, b, c}))(0, 0) * (*m6({c, m, q, k, b, d}))(0, 0);
          Scalar rhs = Scalar::zero();
          for (int fl = 0; fl < G.order(); ++fl) {
            auto t1 = m6({i, fl, q, a, b, d}), t2 = f6({i, j, m, fl, d, c}), t3 = m6({j, m, q, k, a, fl});
            if (t1 && t2 && t3) rhs += B.left.kap(fl).to_scalar() * (*t1)(0, 0) * (*t2)(0, 0) * (*t3)(0, 0);
          }
          rep.check(lhs == rhs, "m biedenharn-elliott", {i, j, m, q}, lhs.to_string(), rhs.to_string());
        }
  return rep;
}

/// Mixed identity for a module functor: m symbols of the target, s symbols of the
/// functor, m symbols of the source.
inline Report verify_biedenharn_elliott(const FunctorContext& C) {
  const BimoduleFunctorData& F = C.functor;
  const BimoduleCategoryData &S = F.source, &T = F.target;
  const FiniteGroup& G = S.G();
  CategoryContext cs{S, C.source_trace}, ct{T, C.target_trace};
  detail::Family mx = detail::category_family(cs, SixJKind::M), my = detail::category_family(ct, SixJKind::M);
  detail::Family sf = detail::functor_family(C, SixJKind::S);
  Report rep;
  for (int i = 0; i < G.order(); ++i)
    for (int j = 0; j < G.order(); ++j)
      for (int l = 0; l < F.nx(); ++l)
        for (int k = 0; k < F.ny(); ++k) {
          int c = G.mul(i, j), a = T.gx(j, k), b = T.gx(i, a), d = S.gx(c, l);
          auto s_lhs = sf.value({c, l, k, b, d}, false);
          if (!s_lhs) continue;  // no multiplicity indices
          Scalar mY = (*my.value({i, j, k, a, b, c}, false))(0, 0);
          // RHS as a matrix in (mu, epsilon)
          Matrix rhs(s_lhs->rows(), s_lhs->cols());
          for (int m = 0; m < F.nx(); ++m) {
            auto s1 = sf.value({i, m, a, b, d}, false);
            auto mX = mx.value({i, j, l, m, d, c}, false);
            auto s2 = sf.value({j, l, k, a, m}, false);
            if (!s1 || !mX || !s2) continue;
            rhs = rhs + (C.source_trace.dim(m) * (*mX)(0, 0)) * (*s2 * *s1);
          }
          Matrix lhs = mY * *s_lhs;
          for (int mu = 0; mu < lhs.rows(); ++mu)
            for (int e = 0; e < lhs.cols(); ++e)
              rep.check(lhs(mu, e) == rhs(mu, e), "functor biedenharn-elliott", {i, j, l, k, mu, e}, lhs(mu, e).to_string(),
                        rhs(mu, e).to_string());
        }
  return rep;
}

}  // namespace vecgo
