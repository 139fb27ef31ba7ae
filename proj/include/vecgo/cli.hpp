// SPDX-License-Identifier: Apache-2.0
// Command dispatch for the vecgo tool. Kept in a header so tests can run it in-process.
#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vecgo/io.hpp"

namespace vecgo::cli {

using io::json;

struct Options {
  std::string config;
  std::string format = "table";
  unsigned seed = 1;
  int bound = 0;  // 0: each operation's own default
  bool inverse = false;
  std::string left, right;
  std::vector<std::string> args;
};

/// A command result: the JSON document, its table rendering, and the exit code.
struct Output {
  json doc;
  std::string text;
  int code = 0;
};

namespace detail {

[[noreturn]] inline void usage(const std::string& msg) { fail(ErrorCode::ParseError, msg); }

inline std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string exps(const UnitCochain& c) {
  std::vector<int> e(c.exponents().begin(), c.exponents().end());
  return "N=" + std::to_string(c.root_order()) + " [" + join(e) + "]";
}

inline std::vector<int> kappa_dims(const FusionData& F) {
  std::vector<int> d;
  for (int g = 0; g < F.group().order(); ++g) d.push_back(sign_of(F.kap(g)));
  return d;
}

inline const io::Session* g_session = nullptr;

inline const io::Session& S() { return *g_session; }

inline void need_args(const Options& o, std::size_t lo, std::size_t hi, const std::string& form) {
  if (o.args.size() < lo || o.args.size() > hi) usage("usage: " + form);
}

template <class M>
const typename M::mapped_type& entity(const M& m, const std::string& id, const char* what) {
  auto it = m.find(id);
  if (it == m.end()) usage(std::string("'") + id + "' is not a " + what + " id");
  return it->second;
}

inline std::string report_line(const Report& r) {
  return "checked " + std::to_string(r.checked) + " identities, " + std::to_string(r.failure_count()) + " failures";
}

inline Output cmd_validate(const Options& o) {
  need_args(o, 0, 0, "validate");
  Output out;
  json items = json::array();
  std::ostringstream t;
  std::size_t failures = 0;
  auto add = [&](const std::string& kind, const std::string& id, const Report& r) {
    items.push_back(json{{"kind", kind}, {"id", id}, {"checked", r.checked}, {"failures", r.failure_count()}});
    t << kind << " " << id << ": " << (r.ok() ? "valid" : "INVALID") << " (" << r.checked << " conditions checked)\n";
    failures += r.failure_count();
  };
  for (const auto& [id, F] : S().fusions) {
    Report r;
    UnitCochain d = differential(F.omega);
    std::vector<int> a(4);
    for (std::size_t i = 0; i < d.size(); ++i) {
      d.decode(i, a.data());
      r.check(d.exponent_at(i) == 0, "cocycle", a, std::to_string(d.exponent_at(i)), "0");
    }
    add("fusion", id, r);
  }
  for (const auto& [id, M] : S().modcats) add("modcat", id, validate_modcat(M));
  for (const auto& [id, B] : S().bimodcats) add("bimodcat", id, validate_bimodcat(B));
  for (const auto& [id, F] : S().functors) add("functor", id, validate_modfun(F));
  for (const auto& [id, F] : S().bimodfuns) add("bimodfun", id, validate_bimodfun(F));
  out.doc = json{{"command", "validate"}, {"entities", items}, {"failures", failures}};
  out.text = t.str();
  out.code = failures ? 1 : 0;
  return out;
}

inline Output cmd_spherical(const Options& o) {
  std::vector<std::string> ids = o.args;
  if (ids.empty())
    for (const auto& [id, F] : S().fusions) ids.push_back(id);
  Output out;
  json list = json::array();
  std::ostringstream t;
  for (const auto& id : ids) {
    const FusionData& F = entity(S().fusions, id, "fusion");
    json structs = json::array();
    auto sph = o.bound ? spherical_structures(F.omega, o.bound) : spherical_structures(F.omega);
    t << id << ": " << sph.size() << " spherical structures\n";
    for (const auto& s : sph) {
      structs.push_back(json{{"kappa", io::to_json(s.kappa)}, {"dims", kappa_dims(s)}});
      t << "  dims " << join(kappa_dims(s)) << "\n";
    }
    list.push_back(json{{"fusion", id}, {"count", sph.size()}, {"structures", structs}});
  }
  out.doc = json{{"command", "spherical"}, {"fusions", list}};
  out.text = t.str();
  return out;
}

inline const FusionData& fusion_for(const GSet& X, const Options& o, std::size_t pos, std::string* name) {
  if (o.args.size() > pos) {
    *name = o.args[pos];
    return entity(S().fusions, o.args[pos], "fusion");
  }
  const FusionData* found = nullptr;
  for (const auto& [id, F] : S().fusions)
    if (F.group() == X.group()) {
      if (found) usage("several fusions match the carrier's group; name one");
      found = &F;
      *name = id;
    }
  if (!found) usage("no fusion over the carrier's group");
  return *found;
}

inline Output cmd_enumerate(const Options& o) {
  need_args(o, 1, 2, "enumerate-modcats <gset> [fusion]");
  const GSet& X = entity(S().gsets, o.args[0], "gset");
  std::string fname;
  const FusionData& F = fusion_for(X, o, 1, &fname);
  auto cls = modcats_for(F, X, static_cast<std::size_t>(1) << 12);
  Output out;
  json list = json::array();
  std::ostringstream t;
  t << cls.size() << " module categories on " << o.args[0] << " over " << fname << "\n";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    auto tr = trace_for(cls[i].X, F.kappa);
    list.push_back(json{{"psi", io::to_json(cls[i].psi)}, {"trace", tr ? json(tr->dims) : json(nullptr)}});
    t << "  [" << i << "] psi " << exps(cls[i].psi) << (tr ? "  trace " + join(tr->dims) : "  no trace") << "\n";
  }
  out.doc = json{{"command", "enumerate-modcats"}, {"gset", o.args[0]}, {"fusion", fname}, {"count", cls.size()}, {"classes", list}};
  out.text = t.str();
  return out;
}

inline Output cmd_classify(const Options& o) {
  need_args(o, 1, 1, "classify <modcat>");
  const ModuleCategoryData& M = entity(S().modcats, o.args[0], "modcat");
  Output out;
  json list = json::array();
  std::ostringstream t;
  auto orbs = orbits(M.X);
  t << o.args[0] << ": " << orbs.size() << (orbs.size() == 1 ? " orbit" : " orbits") << "\n";
  for (const auto& orb : orbs) {
    IndecomposableClass c = classify_indecomposable(restrict_to_points(M, orb));
    list.push_back(json{{"orbit", orb}, {"stabilizer", c.H}, {"stabilizer_class", c.H_canonical},
                        {"psi_H", io::to_json(c.psi_H)}, {"embedding", c.embedding}});
    t << "  orbit {" << join(orb, ",") << "}: stabilizer {" << join(c.H, ",") << "}, class {" << join(c.H_canonical, ",")
      << "}, psi_H " << exps(c.psi_H) << "\n";
  }
  out.doc = json{{"command", "classify"}, {"modcat", o.args[0]}, {"components", list}};
  out.text = t.str();
  return out;
}

inline Output cmd_equiv(const Options& o) {
  need_args(o, 2, 2, "equiv <modcat> <modcat>");
  const ModuleCategoryData& A = entity(S().modcats, o.args[0], "modcat");
  const ModuleCategoryData& B = entity(S().modcats, o.args[1], "modcat");
  auto e = o.bound ? equivalent_modcats(A, B, o.bound) : equivalent_modcats(A, B);
  Output out;
  out.doc = json{{"command", "equiv"}, {"first", o.args[0]}, {"second", o.args[1]}, {"equivalent", e.has_value()}};
  if (e) {
    out.doc["map"] = e->f;
    out.doc["rho"] = io::to_json(e->rho);
    out.text = o.args[0] + " and " + o.args[1] + " are equivalent via map [" + join(e->f) + "]\n";
  } else {
    out.text = o.args[0] + " and " + o.args[1] + " are not equivalent\n";
  }
  return out;
}

inline Output cmd_trace(const Options& o) {
  need_args(o, 1, 1, "trace <modcat|bimodcat>");
  std::optional<ModuleTrace> tr;
  if (S().modcats.count(o.args[0]))
    tr = module_trace(S().modcats.at(o.args[0]));
  else
    tr = bimodule_trace(entity(S().bimodcats, o.args[0], "modcat or bimodcat"));
  Output out;
  out.doc = json{{"command", "trace"}, {"id", o.args[0]}, {"exists", tr.has_value()}, {"dims", tr ? json(tr->dims) : json(nullptr)}};
  out.text = o.args[0] + (tr ? ": trace dims " + join(tr->dims) : ": no module trace") + "\n";
  return out;
}

inline Output cmd_deligne(const Options& o) {
  need_args(o, 1, 1, "deligne <bimodcat|bimodfun> | deligne <modcat|functor> --inverse --left <fusion> --right <fusion>");
  const std::string& id = o.args[0];
  Output out;
  std::ostringstream t;
  if (!o.inverse) {
    if (S().bimodcats.count(id)) {
      ModuleCategoryData M = bimod_to_deligne(S().bimodcats.at(id));
      out.doc = json{{"command", "deligne"}, {"bimodcat", id}, {"action", io::gset_to_json(M.X)}, {"psi", io::to_json(M.psi)}};
      t << id << " -> module category over the product group, psi " << exps(M.psi) << "\n";
    } else {
      ModuleFunctorData K = bimodfun_to_deligne(entity(S().bimodfuns, id, "bimodcat or bimodfun"));
      out.doc = json{{"command", "deligne"}, {"bimodfun", id}, {"functor", io::to_json(K)}};
      t << id << " -> module functor with multiplicities [" << join(K.mult) << "]\n";
    }
  } else {
    if (o.left.empty() || o.right.empty()) usage("--inverse needs --left and --right fusion ids");
    const FusionData& L = entity(S().fusions, o.left, "fusion");
    const FusionData& R = entity(S().fusions, o.right, "fusion");
    if (S().modcats.count(id)) {
      const ModuleCategoryData& M = S().modcats.at(id);
      if (!(M.fusion.omega == deligne_fusion(L, R).omega) || !(M.group() == direct_product(L.group(), R.group())))
        fail(ErrorCode::ValidationError, "'" + id + "' is not over the Deligne product of " + o.left + " and " + o.right);
      BimoduleCategoryData B = deligne_to_bimod(M, L, R);
      io::detail::require_ok(validate_bimodcat(B), "bimodule category");
      out.doc = json{{"command", "deligne"}, {"modcat", id}, {"psi", io::to_json(B.psi)}, {"phi", io::to_json(B.phi)},
                     {"omega_mid", io::to_json(B.omega)}};
      t << id << " -> bimodule category, psi " << exps(B.psi) << ", phi " << exps(B.phi) << "\n";
    } else {
      const ModuleFunctorData& K = entity(S().functors, id, "modcat or functor");
      BimoduleFunctorData F = deligne_to_bimodfun(K, L, R);
      io::detail::require_ok(validate_bimodfun(F), "bimodule functor");
      out.doc = json{{"command", "deligne"}, {"functor", id}, {"bimodfun", io::to_json(F)}};
      t << id << " -> bimodule functor with multiplicities [" << join(F.mult) << "]\n";
    }
  }
  out.text = t.str();
  return out;
}

inline Output cmd_classify_simple(const Options& o) {
  need_args(o, 2, 2, "classify-simple <modcat> <modcat>");
  const ModuleCategoryData& A = entity(S().modcats, o.args[0], "modcat");
  const ModuleCategoryData& B = entity(S().modcats, o.args[1], "modcat");
  auto simple = classify_simple_cyclic(A, B);
  std::size_t expected = count_simple_cyclic(A, B);
  Output out;
  std::ostringstream t;
  json list = json::array();
  t << simple.size() << " simple functors " << o.args[0] << " -> " << o.args[1] << "\n";
  for (std::size_t i = 0; i < simple.size(); ++i) {
    const auto& s = simple[i];
    json orbit = json::array();
    for (auto [x, y] : s.orbit) orbit.push_back({x, y});
    list.push_back(json{{"orbit", orbit}, {"xi", io::to_json(s.xi.to_scalar())}, {"functor", io::to_json(s.functor)}});
    t << "  [" << i << "] orbit of (" << s.orbit.front().first << "," << s.orbit.front().second << "), xi = " << s.xi.to_scalar().to_string()
      << "\n";
  }
  out.doc = json{{"command", "classify-simple"}, {"source", o.args[0]}, {"target", o.args[1]}, {"count", simple.size()},
                 {"expected", expected}, {"functors", list}};
  out.text = t.str();
  out.code = simple.size() == expected ? 0 : 1;
  return out;
}

inline Output cmd_adjoint(const Options& o) {
  need_args(o, 1, 1, "adjoint <functor>");
  const ModuleFunctorData& F = entity(S().functors, o.args[0], "functor");
  ModuleFunctorData R = adjoint(F);
  Report v = validate_modfun(R);
  auto iso = find_invertible_nat_trans(F, adjoint(R), o.seed);
  Output out;
  out.doc = json{{"command", "adjoint"}, {"functor", o.args[0]}, {"valid", v.ok()}, {"double_adjoint_isomorphic", iso.has_value()},
                 {"seed", o.seed}, {"adjoint", io::to_json(R)}};
  out.text = o.args[0] + ": adjoint " + (v.ok() ? "valid" : "INVALID") + ", double adjoint " +
             (iso ? "isomorphic to the functor" : "NOT isomorphic") + " (seed " + std::to_string(o.seed) + ")\n";
  out.code = v.ok() && iso ? 0 : 1;
  return out;
}

enum class Ctx { Fusion, Category, Functor };

inline Ctx context_type(SixJKind k) {
  if (k == SixJKind::FusionPlus || k == SixJKind::FusionMinus) return Ctx::Fusion;
  if (is_matrix_kind(k)) return Ctx::Functor;
  return Ctx::Category;
}

inline std::string sole_id(const std::vector<std::string>& ids, const char* what) {
  if (ids.size() != 1) usage(std::string("name a ") + what + " context (" + std::to_string(ids.size()) + " candidates)");
  return ids.front();
}

inline CategoryContext category_context(const std::string& id) {
  if (S().modcats.count(id)) return make_category_context(S().modcats.at(id));
  return make_category_context(entity(S().bimodcats, id, "modcat or bimodcat"));
}

inline FunctorContext functor_context(const std::string& id) {
  if (S().functors.count(id)) return make_functor_context(S().functors.at(id));
  return make_functor_context(entity(S().bimodfuns, id, "functor or bimodfun"));
}

inline Output cmd_sixj_table(const Options& o) {
  need_args(o, 1, 2, "sixj-table <kind> [context]");
  std::string kname = o.args[0] == "fusion" ? "fusion+" : o.args[0];
  auto kind = parse_kind(kname);
  if (!kind) usage("unknown 6j kind '" + o.args[0] + "'");
  std::string id;
  std::vector<SixJRow> rows;
  switch (context_type(*kind)) {
    case Ctx::Fusion: {
      std::vector<std::string> c;
      for (const auto& [k, v] : S().fusions) c.push_back(k);
      id = o.args.size() > 1 ? o.args[1] : sole_id(c, "fusion");
      rows = sixj_table(entity(S().fusions, id, "fusion"), *kind);
      break;
    }
    case Ctx::Category: {
      std::vector<std::string> c;
      for (const auto& [k, v] : S().modcats) c.push_back(k);
      for (const auto& [k, v] : S().bimodcats) c.push_back(k);
      id = o.args.size() > 1 ? o.args[1] : sole_id(c, "modcat or bimodcat");
      rows = sixj_table(category_context(id), *kind);
      break;
    }
    case Ctx::Functor: {
      std::vector<std::string> c;
      for (const auto& [k, v] : S().functors) c.push_back(k);
      for (const auto& [k, v] : S().bimodfuns) c.push_back(k);
      id = o.args.size() > 1 ? o.args[1] : sole_id(c, "functor or bimodfun");
      rows = sixj_table(functor_context(id), *kind);
      break;
    }
  }
  Output out;
  json list = json::array();
  std::ostringstream t;
  t << kname << " symbols of " << id << ": " << rows.size() << (rows.size() == 1 ? " row" : " rows") << "\n";
  for (const auto& r : rows) {
    list.push_back(json{{"labels", r.labels}, {"indices", r.indices}, {"value", io::to_json(r.value)}});
    t << "  " << join(r.labels);
    if (!r.indices.empty()) t << " ; " << join(r.indices);
    t << " : " << r.value.to_string() << "\n";
  }
  out.doc = json{{"command", "sixj-table"}, {"kind", kname}, {"context", id}, {"rows", list}};
  out.text = t.str();
  return out;
}

inline Output cmd_verify(const Options& o) {
  if (o.args.empty()) usage("usage: verify <orthogonality|biedenharn-elliott> [contexts]");
  const std::string& rel = o.args[0];
  bool orth = rel == "orthogonality";
  if (!orth && rel != "biedenharn-elliott") usage("unknown relation '" + rel + "'");
  std::vector<std::string> refs(o.args.begin() + 1, o.args.end());
  json list = json::array(), skipped = json::array();
  std::ostringstream t;
  Report total;
  auto run = [&](const std::string& id, const std::string& kind, const Report& r) {
    json item = io::to_json(r);
    item["context"] = id;
    item["kind"] = kind;
    list.push_back(item);
    t << id << " (" << kind << "): " << report_line(r) << "\n";
    total.merge(r);
  };
  auto one = [&](const std::string& id, bool explicit_ref) {
    std::string kind = S().kind_of(id);
    try {
      if (kind == "fusion") {
        const FusionData& F = S().fusions.at(id);
        run(id, kind, orth ? verify_orthogonality(F) : verify_biedenharn_elliott(F));
      } else if (kind == "modcat" || kind == "bimodcat") {
        CategoryContext C = category_context(id);
        run(id, kind, orth ? verify_orthogonality(C) : verify_biedenharn_elliott(C));
      } else if (kind == "functor" || kind == "bimodfun") {
        FunctorContext C = functor_context(id);
        run(id, kind, orth ? verify_orthogonality(C) : verify_biedenharn_elliott(C));
      } else {
        usage("'" + id + "' is not a 6j context");
      }
    } catch (const Error& e) {
      if (explicit_ref || e.code() != ErrorCode::NoTrace) throw;
      skipped.push_back(json{{"context", id}, {"reason", error_name(e.code())}});
      t << id << " (" << kind << "): skipped, no trace\n";
    }
  };
  if (refs.empty()) {
    for (const auto& [id, v] : S().fusions) one(id, false);
    for (const auto& [id, v] : S().modcats) one(id, false);
    for (const auto& [id, v] : S().bimodcats) one(id, false);
    for (const auto& [id, v] : S().functors) one(id, false);
    for (const auto& [id, v] : S().bimodfuns) one(id, false);
  } else {
    for (const auto& id : refs) one(id, true);
  }
  t << "total: " << report_line(total) << "\n";
  Output out;
  out.doc = json{{"command", "verify"}, {"relation", rel}, {"contexts", list}, {"skipped", skipped}, {"checked", total.checked},
                 {"failures", total.failure_count()}};
  out.text = t.str();
  out.code = total.ok() ? 0 : 1;
  return out;
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the process exit code.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"vecgo: module categories, module functors and 6j symbols over Vec_G^omega", "vecgo"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-c,--config", o.config, "session config (JSON)")->required();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized searches");
  app.add_option("--bound", o.bound, "enumeration bound")->check(CLI::PositiveNumber);
  struct Cmd {
    const char* name;
    const char* help;
    Output (*fn)(const Options&);
  };
  const Cmd cmds[] = {
      {"validate", "run every validator on the configured entities", detail::cmd_validate},
      {"spherical", "list spherical structures of fusion categories", detail::cmd_spherical},
      {"enumerate-modcats", "module categories on a G-set, one per class", detail::cmd_enumerate},
      {"classify", "classify the indecomposable parts of a module category", detail::cmd_classify},
      {"equiv", "decide equivalence of two module categories", detail::cmd_equiv},
      {"trace", "module trace of a module or bimodule category", detail::cmd_trace},
      {"deligne", "Deligne correspondence for bimodule categories and functors", detail::cmd_deligne},
      {"classify-simple", "simple module functors over a cyclic group", detail::cmd_classify_simple},
      {"adjoint", "adjoint of a module functor", detail::cmd_adjoint},
      {"sixj-table", "table of 6j symbols of one kind", detail::cmd_sixj_table},
      {"verify", "verify orthogonality or Biedenharn-Elliott relations", detail::cmd_verify},
  };
  const Cmd* chosen = nullptr;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("args", o.args, "arguments");
    if (std::string(c.name) == "deligne") {
      sub->add_flag("--inverse", o.inverse, "map a module category or functor back to bimodule data");
      sub->add_option("--left", o.left, "left fusion id (with --inverse)");
      sub->add_option("--right", o.right, "right fusion id (with --inverse)");
    }
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    io::Session session = io::load_session_file(o.config);
    detail::g_session = &session;
    Output res = chosen->fn(o);
    detail::g_session = nullptr;
    if (o.format == "json")
      out << res.doc.dump(2) << "\n";
    else
      out << res.text;
    return res.code;
  } catch (const Error& e) {
    detail::g_session = nullptr;
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    detail::g_session = nullptr;
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vecgo::cli
