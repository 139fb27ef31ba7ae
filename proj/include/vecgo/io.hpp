// SPDX-License-Identifier: Apache-2.0
// JSON session configs and serialization of library values.
#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "vecgo/sixj.hpp"

namespace vecgo::io {

using json = nlohmann::ordered_json;

[[noreturn]] inline void parse_error(const std::string& msg) { fail(ErrorCode::ParseError, msg); }

// ---------------------------------------------------------------- scalars

/// Parses the output format of Scalar::to_string ("1/2 - 3*z8^3 + z8"), plain
/// integers, or {"zeta": [N, e]}.
inline Scalar parse_scalar_text(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_error("empty scalar");
  Scalar out = Scalar::zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) parse_error("malformed scalar '" + text + "'");
    Rational q(1);
    std::string root = term;
    std::size_t z = term.find('z');
    if (z == std::string::npos) {
      root.clear();
      try {
        q = Rational(term);
      } catch (...) {
        parse_error("malformed scalar '" + text + "'");
      }
    } else {
      if (z > 0) {
        if (term[z - 1] != '*') parse_error("malformed scalar '" + text + "'");
        try {
          q = Rational(term.substr(0, z - 1));
        } catch (...) {
          parse_error("malformed scalar '" + text + "'");
        }
      }
      root = term.substr(z + 1);
    }
    q.canonicalize();
    Scalar t = Scalar::from_rational(neg ? Rational(-q) : q);
    if (!root.empty()) {
      std::size_t hat = root.find('^');
      int N = 0;
      long k = 1;
      try {
        N = std::stoi(root.substr(0, hat));
        if (hat != std::string::npos) k = std::stol(root.substr(hat + 1));
      } catch (...) {
        parse_error("malformed scalar '" + text + "'");
      }
      if (N < 1) parse_error("malformed scalar '" + text + "'");
      t = t * Scalar::zeta(N, k);
    }
    out += t;
    pos = end;
  }
  return out;
}

inline Scalar parse_scalar(const json& j) {
  if (j.is_number_integer()) return Scalar::from_int(j.get<long>());
  if (j.is_string()) return parse_scalar_text(j.get<std::string>());
  if (j.is_object() && j.contains("zeta") && j["zeta"].is_array() && j["zeta"].size() == 2)
    return Scalar::zeta(j["zeta"][0].get<int>(), j["zeta"][1].get<long>());
  parse_error("cannot read a scalar from " + j.dump());
}

inline json to_json(const Scalar& s) { return s.to_string(); }

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Matrix parse_matrix(const json& j) {
  if (!j.is_array()) parse_error("a matrix is a list of rows");
  int r = static_cast<int>(j.size());
  int c = r ? static_cast<int>(j[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) parse_error("matrix rows differ in length");
    for (int k = 0; k < c; ++k) m(i, k) = parse_scalar(j[i][k]);
  }
  return m;
}

inline json to_json(const UnitCochain& c) { return json{{"N", c.root_order()}, {"exponents", c.exponents()}}; }
inline json to_json(const MidTable& t) { return json{{"N", t.root_order()}, {"exponents", t.exponents()}}; }

inline json to_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"condition", x.condition}, {"tuple", x.tuple}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return json{{"checked", r.checked}, {"failures", r.failure_count()}, {"violations", v}};
}

// ---------------------------------------------------------------- session

struct Session {
  int root_order = 1;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, FusionData> fusions;
  std::map<std::string, GSet> gsets;
  std::map<std::string, ModuleCategoryData> modcats;
  std::map<std::string, BimoduleCategoryData> bimodcats;
  std::map<std::string, ModuleFunctorData> functors;
  std::map<std::string, BimoduleFunctorData> bimodfuns;

  std::string kind_of(const std::string& id) const {
    if (groups.count(id)) return "group";
    if (fusions.count(id)) return "fusion";
    if (gsets.count(id)) return "gset";
    if (modcats.count(id)) return "modcat";
    if (bimodcats.count(id)) return "bimodcat";
    if (functors.count(id)) return "functor";
    if (bimodfuns.count(id)) return "bimodfun";
    return "";
  }
};

namespace detail {

template <class M>
const typename M::mapped_type& lookup(const M& m, const json& ref, const std::string& what) {
  if (!ref.is_string()) parse_error(what + " reference must be a string id");
  auto it = m.find(ref.get<std::string>());
  if (it == m.end()) parse_error("undefined " + what + " id '" + ref.get<std::string>() + "'");
  return it->second;
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where + ": missing field '" + key + "'");
  return j[key];
}

inline UnitCochain parse_cochain(const json& j, int degree, const GSet& X, int default_N, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "trivial") return UnitCochain(degree, X, 1);
  if (!j.is_object()) parse_error(where + ": expected \"trivial\" or an exponent table");
  int N = j.contains("N") ? j["N"].get<int>() : default_N;
  if (N < 1) parse_error(where + ": root order must be positive");
  const json& e = field(j, "exponents", where);
  if (!e.is_array()) parse_error(where + ": exponents must be a list");
  UnitCochain probe(degree, X, N);
  if (e.size() != probe.size())
    parse_error(where + ": expected " + std::to_string(probe.size()) + " exponents, got " + std::to_string(e.size()));
  return UnitCochain(degree, X, N, e.get<std::vector<std::int64_t>>());
}

inline void require_ok(const Report& r, const std::string& where) {
  if (r.ok()) return;
  const Violation& v = r.violations.front();
  std::string t;
  for (std::size_t i = 0; i < v.tuple.size(); ++i) t += (i ? "," : "") + std::to_string(v.tuple[i]);
  fail(ErrorCode::ValidationError, where + ": " + v.condition + " fails at (" + t + ")");
}

/// Runs fn; library errors other than ParseError become ValidationError naming the entity.
template <class Fn>
auto validated(const std::string& where, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
    fail(ErrorCode::ValidationError, where + ": " + e.what());
  }
}

inline std::vector<Matrix> parse_blocks(const json& list, const std::vector<int>& mult, int groups, int nx, int ny,
                                        const char* letter, const std::string& where) {
  std::vector<Matrix> out(static_cast<std::size_t>(groups) * nx * ny);
  for (int g = 0; g < groups; ++g)
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) out[(static_cast<std::size_t>(g) * nx + x) * ny + y] = Matrix(mult[x * ny + y], mult[x * ny + y]);
  std::set<std::size_t> given;
  if (!list.is_array()) parse_error(where + ": " + letter + " must be a list of blocks");
  for (const auto& b : list) {
    int g = field(b, "g", where).get<int>(), x = field(b, "x", where).get<int>(), y = field(b, "y", where).get<int>();
    if (g < 0 || g >= groups || x < 0 || x >= nx || y < 0 || y >= ny) parse_error(where + ": block index out of range");
    std::size_t i = (static_cast<std::size_t>(g) * nx + x) * ny + y;
    out[i] = parse_matrix(field(b, "matrix", where));
    given.insert(i);
  }
  // identity blocks at the unit may be omitted
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (!given.count(static_cast<std::size_t>(x) * ny + y)) out[static_cast<std::size_t>(x) * ny + y] = Matrix::identity(mult[x * ny + y]);
  return out;
}

inline json blocks_to_json(const std::vector<Matrix>& blocks, const std::vector<int>& mult, int groups, int nx, int ny) {
  json out = json::array();
  for (int g = 0; g < groups; ++g)
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        if (mult[x * ny + y] == 0) continue;
        out.push_back({{"g", g}, {"x", x}, {"y", y}, {"matrix", to_json(blocks[(static_cast<std::size_t>(g) * nx + x) * ny + y])}});
      }
  return out;
}

inline std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected a list of integers");
  try {
    return j.get<std::vector<int>>();
  } catch (const std::exception&) {
    parse_error(where + ": expected a list of integers");
  }
}

}  // namespace detail

inline json to_json(const ModuleFunctorData& F) {
  return json{{"mult", F.mult}, {"A", detail::blocks_to_json(F.A, F.mult, F.source.group().order(), F.nx(), F.ny())}};
}

inline json to_json(const BimoduleFunctorData& F) {
  return json{{"mult", F.mult},
              {"A", detail::blocks_to_json(F.A, F.mult, F.source.G().order(), F.nx(), F.ny())},
              {"B", detail::blocks_to_json(F.B, F.mult, F.source.H().order(), F.nx(), F.ny())}};
}

inline json gset_to_json(const GSet& X) { return X.table(); }

/// Builds and validates a session from a parsed JSON document.
inline Session load_session(const json& doc) {
  using namespace detail;
  Session S;
  if (!doc.is_object()) parse_error("config must be a JSON object");
  static const std::set<std::string> sections{"root_order", "groups",    "fusions",   "gsets",    "modcats",
                                              "bimodcats",  "functors",  "bimodfuns", "description"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!sections.count(it.key())) parse_error("unknown config section '" + it.key() + "'");
  auto section = [&](const char* name) -> json { return doc.contains(name) ? doc[name] : json::object(); };
  if (doc.contains("root_order")) S.root_order = doc["root_order"].get<int>();
  if (S.root_order < 1) parse_error("root_order must be positive");
  std::set<std::string> ids;
  auto claim = [&](const std::string& id) {
    if (!ids.insert(id).second) parse_error("duplicate id '" + id + "'");
  };

  // groups, products may refer to earlier or later groups
  json groups = section("groups");
  std::set<std::string> resolving;
  std::function<const FiniteGroup&(const std::string&)> group = [&](const std::string& id) -> const FiniteGroup& {
    if (S.groups.count(id)) return S.groups.at(id);
    if (!groups.contains(id)) parse_error("undefined group id '" + id + "'");
    if (!resolving.insert(id).second) parse_error("cyclic group definition at '" + id + "'");
    const json& g = groups[id];
    FiniteGroup G;
    if (g.contains("cyclic")) {
      int n = g["cyclic"].get<int>();
      if (n < 1) parse_error("group '" + id + "': order must be positive");
      G = cyclic_group(n);
    } else if (g.contains("product")) {
      const json& p = g["product"];
      if (!p.is_array() || p.size() != 2) parse_error("group '" + id + "': product takes two group ids");
      G = direct_product(group(p[0].get<std::string>()), group(p[1].get<std::string>()));
    } else if (g.contains("table")) {
      G = validated("group '" + id + "'", [&] { return group_from_table(g["table"].get<std::vector<std::vector<int>>>()); });
    } else {
      parse_error("group '" + id + "': expected cyclic, product or table");
    }
    resolving.erase(id);
    return S.groups.emplace(id, G).first->second;
  };
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    claim(it.key());
    group(it.key());
  }

  json fusions = section("fusions");
  for (auto it = fusions.begin(); it != fusions.end(); ++it) {
    claim(it.key());
    const std::string where = "fusion '" + it.key() + "'";
    const json& f = it.value();
    const FiniteGroup& G = lookup(S.groups, field(f, "group", where), "group");
    GSet pt = point_gset(G);
    UnitCochain omega(3, pt, 1);
    const json& w = f.contains("omega") ? f["omega"] : json("trivial");
    if (w.is_object() && w.contains("cyclic_rep")) {
      if (!(G == cyclic_group(G.order()))) parse_error(where + ": cyclic_rep needs a cyclic group");
      omega = omega_cyclic(G.order(), w["cyclic_rep"].get<std::int64_t>());
    } else {
      omega = parse_cochain(w, 3, pt, S.root_order, where + " omega");
    }
    UnitCochain kappa = parse_cochain(f.contains("kappa") ? f["kappa"] : json("trivial"), 1, pt, S.root_order, where + " kappa");
    S.fusions.emplace(it.key(), validated(where, [&] { return make_fusion(omega, kappa); }));
  }

  json gsets = section("gsets");
  std::function<const GSet&(const std::string&)> gset = [&](const std::string& id) -> const GSet& {
    if (S.gsets.count(id)) return S.gsets.at(id);
    if (!gsets.contains(id)) parse_error("undefined gset id '" + id + "'");
    if (!resolving.insert(id).second) parse_error("cyclic gset definition at '" + id + "'");
    const std::string where = "gset '" + id + "'";
    const json& x = gsets[id];
    GSet X;
    if (x.contains("union")) {
      const json& u = x["union"];
      if (!u.is_array() || u.empty()) parse_error(where + ": union takes a list of gset ids");
      X = gset(u[0].get<std::string>());
      for (std::size_t i = 1; i < u.size(); ++i) {
        const GSet& Y = gset(u[i].get<std::string>());
        if (!(Y.group() == X.group())) parse_error(where + ": union of gsets over different groups");
        X = disjoint_union(X, Y);
      }
    } else {
      const FiniteGroup& G = lookup(S.groups, field(x, "group", where), "group");
      if (x.contains("point"))
        X = point_gset(G);
      else if (x.contains("regular"))
        X = regular_gset(G);
      else if (x.contains("cosets"))
        X = validated(where, [&] { return coset_gset(G, int_list(x["cosets"], where)); });
      else if (x.contains("action"))
        X = validated(where, [&] { return GSet::from_table(G, x["action"].get<std::vector<std::vector<int>>>()); });
      else
        parse_error(where + ": expected point, regular, cosets, action or union");
    }
    resolving.erase(id);
    return S.gsets.emplace(id, X).first->second;
  };
  for (auto it = gsets.begin(); it != gsets.end(); ++it) {
    claim(it.key());
    gset(it.key());
  }

  json modcats = section("modcats");
  for (auto it = modcats.begin(); it != modcats.end(); ++it) {
    claim(it.key());
    const std::string where = "modcat '" + it.key() + "'";
    const json& m = it.value();
    const FusionData& F = lookup(S.fusions, field(m, "fusion", where), "fusion");
    const GSet& X = lookup(S.gsets, field(m, "gset", where), "gset");
    if (!(X.group() == F.group())) parse_error(where + ": gset and fusion are over different groups");
    const json& p = m.contains("psi") ? m["psi"] : json("trivial");
    ModuleCategoryData M{F, X, UnitCochain(2, X, 1)};
    if (p.is_string() && p.get<std::string>() == "solve") {
      auto cls = validated(where, [&] { return modcats_for(F, X); });
      if (cls.empty()) fail(ErrorCode::ValidationError, where + ": no module category exists on this carrier");
      M = cls.front();
    } else {
      M.psi = parse_cochain(p, 2, X, S.root_order, where + " psi");
    }
    require_ok(validated(where, [&] { return validate_modcat(M); }), where);
    S.modcats.emplace(it.key(), M);
  }

  json bimodcats = section("bimodcats");
  for (auto it = bimodcats.begin(); it != bimodcats.end(); ++it) {
    claim(it.key());
    const std::string where = "bimodcat '" + it.key() + "'";
    const json& b = it.value();
    const FusionData& L = lookup(S.fusions, field(b, "left", where), "fusion");
    const FusionData& R = lookup(S.fusions, field(b, "right", where), "fusion");
    const GSet& X = lookup(S.gsets, field(b, "gset", where), "gset");
    const FiniteGroup &G = L.group(), &H = R.group();
    if (!(X.group() == direct_product(G, H))) parse_error(where + ": gset must be over the product of the two groups");
    BimoduleCategoryData B;
    if (b.contains("solve")) {
      auto cls = validated(where, [&] { return modcats_for(deligne_fusion(L, R), X); });
      if (cls.empty()) fail(ErrorCode::ValidationError, where + ": no bimodule category exists on this carrier");
      B = deligne_to_bimod(cls.front(), L, R);
    } else {
      GSet XG = restrict_to_left(X, G, H), XH = restrict_to_right(X, G, H);
      B = BimoduleCategoryData{L, R, X, parse_cochain(b.contains("psi") ? b["psi"] : json("trivial"), 2, XG, S.root_order, where + " psi"),
                               parse_cochain(b.contains("phi") ? b["phi"] : json("trivial"), 2, XH, S.root_order, where + " phi"),
                               MidTable(G.order(), H.order(), X.size(), 1)};
      const json& o = b.contains("omega_mid") ? b["omega_mid"] : json("trivial");
      if (!(o.is_string() && o.get<std::string>() == "trivial")) {
        int N = o.contains("N") ? o["N"].get<int>() : S.root_order;
        auto e = field(o, "exponents", where).get<std::vector<std::int64_t>>();
        B.omega = validated(where, [&] { return MidTable(G.order(), H.order(), X.size(), N, e); });
      }
    }
    require_ok(validated(where, [&] { return validate_bimodcat(B); }), where);
    S.bimodcats.emplace(it.key(), B);
  }

  json functors = section("functors");
  for (auto it = functors.begin(); it != functors.end(); ++it) {
    claim(it.key());
    const std::string where = "functor '" + it.key() + "'";
    const json& f = it.value();
    const ModuleCategoryData& Src = lookup(S.modcats, field(f, "source", where), "modcat");
    const ModuleCategoryData& Tgt = lookup(S.modcats, field(f, "target", where), "modcat");
    ModuleFunctorData F;
    if (f.contains("identity")) {
      if (!same_category(Src, Tgt)) fail(ErrorCode::ValidationError, where + ": identity needs equal source and target");
      F = identity_functor(Src);
    } else if (f.contains("equivariant")) {
      const json& e = f["equivariant"];
      std::vector<int> map = int_list(field(e, "map", where), where);
      if (static_cast<int>(map.size()) != Src.X.size()) parse_error(where + ": map has the wrong length");
      const json& l = e.contains("lambda") ? e["lambda"] : json("solve");
      UnitCochain lam(1, Src.X, 1);
      if (l.is_string() && l.get<std::string>() == "solve") {
        auto sol = validated(where, [&] { return solve_lambda(Src, Tgt, map); });
        if (!sol) fail(ErrorCode::ValidationError, where + ": no Lambda exists for this map");
        lam = *sol;
      } else {
        lam = parse_cochain(l, 1, Src.X, S.root_order, where + " lambda");
      }
      F = validated(where, [&] { return functor_from_equivariant(Src, Tgt, map, lam); });
    } else if (f.contains("simple")) {
      auto simple = validated(where, [&] { return classify_simple_cyclic(Src, Tgt); });
      int k = f["simple"].get<int>();
      if (k < 0 || k >= static_cast<int>(simple.size())) parse_error(where + ": simple functor index out of range");
      F = simple[k].functor;
    } else if (f.contains("mult")) {
      F = empty_functor(Src, Tgt);
      F.mult = int_list(f["mult"], where);
      if (F.mult.size() != static_cast<std::size_t>(F.nx()) * F.ny()) parse_error(where + ": mult has the wrong length");
      F.A = parse_blocks(field(f, "A", where), F.mult, Src.group().order(), F.nx(), F.ny(), "A", where);
    } else {
      parse_error(where + ": expected identity, equivariant, simple or mult/A tables");
    }
    require_ok(validated(where, [&] { return validate_modfun(F); }), where);
    S.functors.emplace(it.key(), F);
  }

  json bimodfuns = section("bimodfuns");
  for (auto it = bimodfuns.begin(); it != bimodfuns.end(); ++it) {
    claim(it.key());
    const std::string where = "bimodfun '" + it.key() + "'";
    const json& f = it.value();
    const BimoduleCategoryData& Src = lookup(S.bimodcats, field(f, "source", where), "bimodcat");
    const BimoduleCategoryData& Tgt = lookup(S.bimodcats, field(f, "target", where), "bimodcat");
    BimoduleFunctorData F{Src, Tgt, {}, {}, {}};
    const int nx = Src.X.size(), ny = Tgt.X.size();
    if (f.contains("identity")) {
      F.mult.assign(static_cast<std::size_t>(nx) * ny, 0);
      if (nx != ny) fail(ErrorCode::ValidationError, where + ": identity needs equal source and target");
      for (int x = 0; x < nx; ++x) F.mult[x * ny + x] = 1;
      F.A = parse_blocks(json::array(), F.mult, Src.G().order(), nx, ny, "A", where);
      F.B = parse_blocks(json::array(), F.mult, Src.H().order(), nx, ny, "B", where);
      for (int g = 0; g < Src.G().order(); ++g)
        for (int x = 0; x < nx; ++x) F.A[F.index(g, x, x)] = Matrix::identity(1);
      for (int h = 0; h < Src.H().order(); ++h)
        for (int x = 0; x < nx; ++x) F.B[F.index(h, x, x)] = Matrix::identity(1);
    } else if (f.contains("mult")) {
      F.mult = int_list(f["mult"], where);
      if (F.mult.size() != static_cast<std::size_t>(nx) * ny) parse_error(where + ": mult has the wrong length");
      F.A = parse_blocks(field(f, "A", where), F.mult, Src.G().order(), nx, ny, "A", where);
      F.B = parse_blocks(field(f, "B", where), F.mult, Src.H().order(), nx, ny, "B", where);
    } else {
      parse_error(where + ": expected identity or mult/A/B tables");
    }
    require_ok(validated(where, [&] { return validate_bimodfun(F); }), where);
    S.bimodfuns.emplace(it.key(), F);
  }
  return S;
}

inline Session load_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    parse_error("config '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return load_session(doc);
  } catch (const json::exception& e) {
    parse_error(std::string("config has a field of the wrong type: ") + e.what());
  }
}

}  // namespace vecgo::io
