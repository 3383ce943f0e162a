#include "orbi/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "orbi/burnside.hpp"
#include "orbi/chenruan.hpp"
#include "orbi/error.hpp"
#include "orbi/inertia.hpp"
#include "orbi/kernels.hpp"
#include "orbi/obstruct.hpp"
#include "orbi/scenario.hpp"

namespace orbi {

namespace {

struct Context {
  std::string command;
  std::vector<std::string> arguments;
  bool machine = false;
  Json scenarios = Json::array();
  Json results;
  std::vector<std::string> warnings;
  std::ostringstream text;
  int exit_code = kExitOk;
};

Json dims_json(const GradedDims& d) {
  Json a = Json::array();
  for (const auto& [deg, n] : d.dims) a.push_back(Json{{"degree", to_string(deg)}, {"dim", n}});
  return a;
}

Json component_json(const FixedComponent& c) {
  Json w = Json::array();
  for (const auto& nw : c.normal_weights) w.push_back(std::to_string(nw.num) + "/" + std::to_string(nw.den));
  return Json{{"label", c.label},       {"dimension", c.dimension}, {"betti", c.betti},
              {"age", to_string(c.age())}, {"normal_weights", w},     {"ambient", c.ambient}};
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

Scenario load(Context& ctx, const std::string& path) {
  Scenario s = load_scenario(path);
  ctx.scenarios.push_back(Json{{"path", path}, {"name", s.name}, {"digest", s.digest}});
  ctx.text << "scenario " << s.name << " [" << path << "] sha256 " << s.digest.substr(0, 16) << "\n";
  return s;
}

void add_warnings(Context& ctx, const std::vector<std::string>& w, const std::string& prefix = "") {
  for (const auto& x : w) ctx.warnings.push_back(prefix + x);
}

void text_dims(Context& ctx, const GradedDims& d) {
  ctx.text << "  degree  dim\n";
  for (const auto& [deg, n] : d.dims) ctx.text << "  " << std::left << std::setw(7) << to_string(deg) << " " << n << "\n";
  ctx.text << "  total " << d.total() << "\n";
}

void cmd_sectors(Context& ctx, const std::string& path) {
  const auto s = load(ctx, path);
  add_warnings(ctx, space_warnings(s.space));
  const auto& G = s.space.sector_group();
  const auto sectors = twisted_sectors(s.space);
  size_t wc = 5, wl = 9, wb = 5;
  for (const auto& sec : sectors) {
    wc = std::max(wc, sec.label.size());
    for (const auto& c : sec.components) {
      wl = std::max(wl, c.label.size());
      wb = std::max(wb, join(c.betti).size());
    }
  }
  auto cell = [&](const std::string& x, size_t w) { ctx.text << std::left << std::setw(static_cast<int>(w + 2)) << x; };
  cell("class", wc);
  cell("size", 4);
  cell("component", wl);
  cell("dim", 3);
  cell("betti", wb);
  ctx.text << "age\n";
  Json rows = Json::array();
  for (const auto& sec : sectors) {
    const auto size = G.conjugacy_classes()[static_cast<size_t>(G.class_index(sec.g))].members.size();
    Json comps = Json::array();
    for (const auto& c : sec.components) {
      comps.push_back(component_json(c));
      cell(sec.label, wc);
      cell(std::to_string(size), 4);
      cell(c.label, wl);
      cell(std::to_string(c.dimension), 3);
      cell(join(c.betti), wb);
      ctx.text << to_string(c.age()) << "\n";
    }
    if (sec.components.empty()) {
      cell(sec.label, wc);
      cell(std::to_string(size), 4);
      ctx.text << "(empty)\n";
    }
    rows.push_back(Json{{"sector", sec.label}, {"element", sec.g}, {"class_size", size}, {"components", comps}});
  }
  ctx.results = Json{{"sectors", rows}};
}

void cmd_crh(Context& ctx, const std::string& path) {
  const auto s = load(ctx, path);
  add_warnings(ctx, space_warnings(s.space));
  const auto contrib = cr_contributions(s.space);
  GradedDims total;
  long signed_euler = 0;
  Json per = Json::array();
  for (const auto& c : contrib) {
    total += c.dims;
    signed_euler += c.signed_euler;
    per.push_back(Json{{"sector", c.label}, {"total", c.dims.total()}, {"degrees", dims_json(c.dims)}});
  }
  Json oracle = nullptr;
  try {
    const long e = orbifold_euler(s.space);
    oracle = e;
    const long expect = s.space.kind() == SpaceKind::Custom ? signed_euler : total.total();
    if (e != expect) {
      if (s.space.kind() == SpaceKind::Custom)
        ctx.warnings.push_back("euler oracle " + std::to_string(e) + " disagrees with the signed Chen-Ruan count " +
                               std::to_string(expect));
      else
        throw Error("EulerMismatch",
                    "euler oracle " + std::to_string(e) + " != Chen-Ruan total " + std::to_string(expect),
                    ErrorKind::Internal);
    }
  } catch (const Error& e) {
    if (e.code() != "UnsupportedForCustom") throw;
    ctx.warnings.push_back(std::string("euler oracle unavailable: ") + e.what());
  }
  ctx.results = Json{{"degrees", dims_json(total)},
                     {"total", total.total()},
                     {"poincare", poincare_string(total)},
                     {"euler_oracle", oracle},
                     {"sectors", per}};
  ctx.text << "Chen-Ruan dimensions: " << poincare_string(total) << "\n";
  text_dims(ctx, total);
  ctx.text << "  euler oracle " << (oracle.is_null() ? std::string("unavailable") : oracle.dump()) << "\n";
  ctx.text << "per sector:\n";
  for (const auto& c : contrib) ctx.text << "  " << c.label << ": " << poincare_string(c.dims) << "\n";
  if (s.space.is_builtin()) {
    const auto k = kernel_copy_count(s.space);
    Json ker = Json::array();
    for (Element g : k.kernel) ker.push_back(s.space.group().element_label(g));
    ctx.results["kernel"] = Json{{"order", k.kernel_order}, {"copies", k.copies}, {"elements", ker}};
    ctx.text << "ineffective kernel order " << k.kernel_order << ", full-space age-0 copies " << k.copies << "\n";
  }
}

std::vector<std::vector<int>> torsion_selection(const Scenario& s, const std::string& flag) {
  const auto& G = s.space.group();
  if (!G.has_factors()) throw Error("NonAbelianTwist", "discrete torsion classes need an abelian presentation");
  std::string spec = flag;
  if (spec.empty()) {
    if (s.torsion && !s.torsion_all) return *s.torsion;
    spec = "all";
  }
  if (spec == "all") return cocycle_class_parameters(G);
  if (spec == "trivial") return {std::vector<int>(static_cast<size_t>(cocycle_parameter_count(G)), 0)};
  std::vector<std::vector<int>> out;
  std::stringstream groups(spec);
  std::string part;
  while (std::getline(groups, part, ';')) {
    std::vector<int> eps;
    std::stringstream items(part);
    std::string x;
    while (std::getline(items, x, ',')) {
      try {
        size_t used = 0;
        eps.push_back(std::stoi(x, &used));
        if (used != x.size()) throw std::invalid_argument(x);
      } catch (const std::exception&) {
        throw Error("UsageError", "bad --torsion value '" + spec + "'");
      }
    }
    out.push_back(eps);
  }
  return out;
}

void cmd_twist(Context& ctx, const std::string& path, const std::string& torsion) {
  const auto s = load(ctx, path);
  add_warnings(ctx, space_warnings(s.space));
  const auto& G = s.space.group();
  const auto plain = cr_dimensions(s.space);
  Json classes = Json::array();
  for (const auto& eps : torsion_selection(s, torsion)) {
    const Cocycle alpha = standard_cocycle(G, eps);
    const auto d = cr_twisted_dimensions(s.space, alpha);
    const auto check = check_inner_local_system(s.space, torsion_line_system(s.space, alpha));
    for (const auto& v : check.violations) ctx.warnings.push_back("inner local system: " + v);
    classes.push_back(Json{{"eps", eps},
                           {"degrees", dims_json(d)},
                           {"total", d.total()},
                           {"poincare", poincare_string(d)},
                           {"local_system", Json{{"ok", check.ok}, {"violations", check.violations}}}});
    ctx.text << "torsion eps=" << Json(eps).dump() << ": " << poincare_string(d) << "\n";
    text_dims(ctx, d);
    ctx.text << "  inner local system " << (check.ok ? "ok" : "VIOLATED") << "\n";
  }
  ctx.results = Json{{"untwisted_total", plain.total()}, {"classes", classes}};
  ctx.text << "untwisted total " << plain.total() << "\n";
}

void cmd_euler(Context& ctx, const std::string& path) {
  const auto s = load(ctx, path);
  add_warnings(ctx, space_warnings(s.space));
  const auto total = cr_dimensions(s.space).total();
  const long signed_e = signed_cr_euler(s.space);
  Json oracle = nullptr, match = nullptr;
  try {
    const long e = orbifold_euler(s.space);
    oracle = e;
    match = e == signed_e;
    if (e != signed_e && s.space.is_builtin())
      throw Error("EulerMismatch", "euler oracle " + std::to_string(e) + " != Chen-Ruan total " + std::to_string(total),
                  ErrorKind::Internal);
    if (e != signed_e) ctx.warnings.push_back("euler oracle disagrees with the Chen-Ruan data");
  } catch (const Error& e) {
    if (e.code() != "UnsupportedForCustom") throw;
    ctx.warnings.push_back(std::string("euler oracle unavailable: ") + e.what());
  }
  ctx.results = Json{{"orbifold_euler", oracle}, {"cr_total", total}, {"signed_cr_euler", signed_e}, {"match", match}};
  ctx.text << "orbifold euler " << (oracle.is_null() ? std::string("unavailable") : oracle.dump()) << "\n"
           << "Chen-Ruan total " << total << ", signed " << signed_e << "\n";
}

void cmd_beta(Context& ctx, const std::string& path) {
  const auto s = load(ctx, path);
  add_warnings(ctx, space_warnings(s.space));
  const auto& G = s.space.group();
  const auto beta = beta_class(s.space);
  Json terms = Json::array();
  for (const auto& [sym, c] : beta.terms) terms.push_back(Json{{"symbol", to_string(G, sym)}, {"coefficient", c}});
  Json comps = Json::array();
  for (const auto& t : fixed_point_tangents(s.space)) {
    std::vector<Element> e;
    for (const auto& chi : t.characters) e.push_back(character_index(G, chi));
    comps.push_back(Json{{"label", t.component.label},
                         {"dimension", t.component.dimension},
                         {"symbol", to_string(G, symbol_normalize(G, e, s.space.dimension()))}});
    if (t.component.dimension > 0)
      ctx.warnings.push_back("positive-dimensional fixed component " + t.component.label +
                             " enters β through its tangent characters only");
  }
  ctx.results = Json{{"terms", terms}, {"components", comps}};
  ctx.text << to_string(G, beta);
}

void cmd_burnside_group(Context& ctx, const std::string& spec, int d) {
  const auto G = parse_group_spec(spec);
  const RelationLattice L(G, d);
  const auto q = L.structure();
  Json torsion = Json::array();
  for (const auto& t : q.torsion) torsion.push_back(t.str());
  ctx.results = Json{{"group", G.name()},
                     {"d", d},
                     {"universe_size", L.universe().size()},
                     {"relations", L.relations().size()},
                     {"relation_rank", L.lattice().rank()},
                     {"free_rank", q.free_rank},
                     {"torsion", torsion},
                     {"structure", q.to_string()}};
  ctx.text << "B_" << d << "(" << G.name() << ") = " << q.to_string() << "\n"
           << "  " << L.universe().size() << " symbols, " << L.relations().size() << " relations of rank "
           << L.lattice().rank() << "\n";
}

void cmd_multisector(Context& ctx, const std::string& path, int k, bool product_one) {
  const auto s = load(ctx, path);
  add_warnings(ctx, space_warnings(s.space));
  Json rows = Json::array();
  for (const auto& m : multi_sectors(s.space, k, product_one)) {
    Json labels = Json::array();
    std::string tl;
    for (Element g : m.index.elements) {
      labels.push_back(s.space.sector_label(g));
      tl += (tl.empty() ? "" : ", ") + s.space.sector_label(g);
    }
    Json comps = nullptr;
    ctx.text << "(" << tl << ")" << (m.commuting ? "" : " non-commuting") << ":";
    if (m.components) {
      comps = Json::array();
      for (const auto& c : *m.components) {
        comps.push_back(Json{{"label", c.label}, {"dimension", c.dimension}, {"betti", c.betti}});
        ctx.text << " " << c.label;
      }
      if (m.components->empty()) ctx.text << " (empty)";
    } else {
      ctx.text << " components unavailable";
    }
    ctx.text << "\n";
    rows.push_back(Json{{"tuple", labels}, {"elements", m.index.elements}, {"commuting", m.commuting}, {"components", comps}});
  }
  ctx.results = Json{{"k", k}, {"product_one", product_one}, {"classes", rows}};
}

CompareOptions parse_invariants(const std::string& list, bool aut) {
  CompareOptions o;
  o.aut_relabel = aut;
  if (list.empty()) return o;
  o.cr_dims = o.cr_twisted = o.beta = o.euler = false;
  std::stringstream ss(list);
  std::string x;
  while (std::getline(ss, x, ',')) {
    if (x == "cr_dims") o.cr_dims = true;
    else if (x == "cr_twisted") o.cr_twisted = true;
    else if (x == "beta") o.beta = true;
    else if (x == "euler") o.euler = true;
    else throw Error("UsageError", "unknown invariant '" + x + "' (cr_dims, cr_twisted, beta, euler)");
  }
  return o;
}

void cmd_compare(Context& ctx, const std::string& a, const std::string& b, const CompareOptions& o) {
  const auto A = load(ctx, a);
  const auto B = load(ctx, b);
  const auto r = compare(A.space, B.space, o, A.name, B.name);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"name", e.name},
                           {"left", e.left},
                           {"right", e.right},
                           {"match", e.skipped ? Json(nullptr) : Json(e.match)},
                           {"skipped", e.skipped},
                           {"detail", e.detail}});
    ctx.text << std::left << std::setw(11) << e.name
             << (e.skipped ? "skipped " : e.match ? "match   " : "MISMATCH") << "  " << e.detail << "\n";
    if (!e.skipped && !e.match) ctx.text << "  " << A.name << ": " << e.left << "\n  " << B.name << ": " << e.right << "\n";
  }
  add_warnings(ctx, r.warnings);
  ctx.results = Json{{"left", r.left_id}, {"right", r.right_id}, {"entries", entries}, {"verdict", r.verdict}};
  ctx.text << "verdict: " << r.verdict << "\n";
  if (r.verdict == "OBSTRUCTED") ctx.exit_code = kExitObstructed;
}

std::string render(const Context& ctx) {
  if (ctx.machine) {
    Json out;
    out["version"] = kVersion;
    out["command"] = ctx.command;
    out["arguments"] = ctx.arguments;
    out["scenarios"] = ctx.scenarios;
    out["results"] = ctx.results;
    out["warnings"] = ctx.warnings;
    return out.dump() + "\n";
  }
  std::string s = ctx.text.str();
  for (const auto& w : ctx.warnings) s += "warning: " + w + "\n";
  return s;
}

std::string error_text(bool machine, const std::string& code, const std::string& message, int exit_code) {
  if (machine)
    return Json{{"error", Json{{"code", code}, {"message", message}, {"exit_code", exit_code}}}}.dump() + "\n";
  return "error [" + code + "]: " + message + "\n";
}

}  // namespace

CommandOutput run_command(const std::vector<std::string>& args) {
  CommandOutput result;
  if (const char* t = std::getenv("ORBI_THREADS")) {
    try {
      set_thread_cap(std::stoi(t));
    } catch (const std::exception&) {
      set_thread_cap(0);
    }
  }
  CLI::App app{"Orbifold Chen-Ruan and equivariant Burnside obstruction calculator", "orbi"};
  app.require_subcommand(1, 1);
  std::string format = "text", out_path;
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", out_path, "write the report to a file");
  app.set_version_flag("--version", kVersion);

  std::string scenario, scenario_b, torsion, group_spec, invariants;
  int k = 2, d = 2;
  bool aut = false, product_one = false;
  auto add_scn = [&](CLI::App* sub) {
    sub->add_option("scenario", scenario, "scenario file")->required();
    sub->fallthrough();
    return sub;
  };
  auto* sectors = add_scn(app.add_subcommand("sectors", "twisted sectors with components and ages"));
  auto* crh = add_scn(app.add_subcommand("crh", "Chen-Ruan graded dimensions"));
  auto* twist = add_scn(app.add_subcommand("twist", "discrete-torsion twisted dimensions"));
  twist->add_option("--torsion", torsion, "eps vector (e.g. 1 or 1,0,1; ';' separates several), 'trivial' or 'all'");
  auto* euler = add_scn(app.add_subcommand("euler", "orbifold Euler number oracle"));
  auto* beta = add_scn(app.add_subcommand("beta", "equivariant Burnside class"));
  auto* bg = app.add_subcommand("burnside-group", "structure of B_d(G)");
  bg->add_option("-G,--group", group_spec, "abelian:[n1,...]")->required();
  bg->add_option("-d", d, "dimension")->required();
  bg->fallthrough();
  auto* ms = add_scn(app.add_subcommand("multisector", "multi-sectors"));
  ms->add_option("--k", k, "tuple length (1..3)");
  ms->add_flag("--product-one", product_one, "only tuples with product 1");
  auto* cmp = app.add_subcommand("compare", "compare two scenarios");
  cmp->add_option("scenario", scenario, "left scenario")->required();
  cmp->add_option("other", scenario_b, "right scenario")->required();
  cmp->add_flag("--aut-relabel", aut, "match twisted families up to an automorphism of G");
  cmp->add_option("--invariants", invariants, "comma list of cr_dims,cr_twisted,beta,euler");
  cmp->fallthrough();

  const bool machine_hint =
      std::find(args.begin(), args.end(), "machine") != args.end() ||
      std::find(args.begin(), args.end(), "--format=machine") != args.end();
  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForVersion&) {
    result.out = std::string(kVersion) + "\n";
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitInputError;
    (machine_hint ? result.out : result.err) = error_text(machine_hint, "UsageError", e.what(), kExitInputError);
    return result;
  }

  Context ctx;
  ctx.machine = format == "machine";
  ctx.command = app.get_subcommands().front()->get_name();
  ctx.arguments.assign(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  try {
    if (*sectors) cmd_sectors(ctx, scenario);
    else if (*crh) cmd_crh(ctx, scenario);
    else if (*twist) cmd_twist(ctx, scenario, torsion);
    else if (*euler) cmd_euler(ctx, scenario);
    else if (*beta) cmd_beta(ctx, scenario);
    else if (*bg) cmd_burnside_group(ctx, group_spec, d);
    else if (*ms) cmd_multisector(ctx, scenario, k, product_one);
    else if (*cmp) cmd_compare(ctx, scenario, scenario_b, parse_invariants(invariants, aut));
    result.exit_code = ctx.exit_code;
    result.out = render(ctx);
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::Internal ? kExitInternalError : kExitInputError;
    (ctx.machine ? result.out : result.err) = error_text(ctx.machine, e.code(), e.what(), result.exit_code);
    return result;
  } catch (const std::exception& e) {
    result.exit_code = kExitInternalError;
    (ctx.machine ? result.out : result.err) = error_text(ctx.machine, "InternalError", e.what(), result.exit_code);
    return result;
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      result.exit_code = kExitInputError;
      result.err = error_text(false, "FileNotWritable", "cannot write " + out_path, kExitInputError);
      if (ctx.machine) result.out = error_text(true, "FileNotWritable", "cannot write " + out_path, kExitInputError);
      return result;
    }
    f << result.out;
    result.out.clear();
  }
  return result;
}

}  // namespace orbi
