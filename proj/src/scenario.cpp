#include "orbi/scenario.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "orbi/cocycle.hpp"
#include "orbi/error.hpp"

namespace orbi {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error("SchemaError", path + ": " + what);
}

void check_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed,
                const std::set<std::string>& required) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) schema_error(path + "." + k, "unknown field");
  for (const auto& k : required)
    if (!obj.contains(k)) schema_error(path + "." + k, "missing required field");
}

long get_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<long>();
}

std::vector<long> get_int_array(const Json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array of integers");
  std::vector<long> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(get_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& get_array(const Json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array");
  return v;
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Semantic failures from the library keep their own code in the message.
template <class F>
auto semantic(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal || e.code() == "SchemaError" || e.code() == "SemanticError") throw;
    throw Error("SemanticError", e.code() + ": " + e.what());
  }
}

FiniteGroup parse_group(const Json& g, const std::string& path) {
  check_keys(g, path, {"abelian", "table", "identity"}, {});
  if (g.contains("abelian") == g.contains("table"))
    schema_error(path, "exactly one of 'abelian' or 'table' is required");
  if (g.contains("abelian")) {
    if (g.contains("identity")) schema_error(path + ".identity", "only valid with 'table'");
    std::vector<int> f;
    for (long x : get_int_array(g["abelian"], path + ".abelian")) f.push_back(static_cast<int>(x));
    return semantic([&] { return FiniteGroup::abelian(f); });
  }
  if (!g.contains("identity")) schema_error(path + ".identity", "missing required field");
  std::vector<std::vector<int>> table;
  const auto& t = get_array(g["table"], path + ".table");
  for (size_t i = 0; i < t.size(); ++i) {
    std::vector<int> row;
    for (long x : get_int_array(t[i], idx(path + ".table", i))) row.push_back(static_cast<int>(x));
    table.push_back(std::move(row));
  }
  const int id = static_cast<int>(get_int(g["identity"], path + ".identity"));
  return semantic([&] { return FiniteGroup::from_table(table, id); });
}

Element parse_element(const FiniteGroup& G, const Json& v, const std::string& path) {
  if (v.is_array()) {
    if (!G.has_factors()) schema_error(path, "tuples need an abelian presentation");
    const auto t = get_int_array(v, path);
    if (t.size() != G.factors().size()) throw Error("SemanticError", path + ": tuple length does not match the group");
    std::vector<int> c;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 0 || t[i] >= G.factors()[i]) throw Error("SemanticError", idx(path, i) + ": coordinate out of range");
      c.push_back(static_cast<int>(t[i]));
    }
    return G.from_tuple(c);
  }
  const long e = get_int(v, path);
  if (e < 0 || e >= G.order()) throw Error("SemanticError", "ElementNotInGroup: " + path + ": element out of range");
  return static_cast<Element>(e);
}

// a weight is an exponent tuple, or a single integer for cyclic groups
Character parse_weight(const FiniteGroup& G, const Json& v, const std::string& path) {
  std::vector<int> ex;
  if (v.is_array()) {
    for (long x : get_int_array(v, path)) ex.push_back(static_cast<int>(x));
  } else {
    ex.push_back(static_cast<int>(get_int(v, path)));
    if (G.has_factors() && G.factors().size() != 1)
      throw Error("SemanticError", path + ": a single integer weight needs a cyclic group; give an exponent tuple");
  }
  return semantic([&] {
    if (G.has_factors() && ex.size() == G.factors().size())
      for (size_t i = 0; i < ex.size(); ++i) ex[i] = static_cast<int>(mod(ex[i], G.factors()[i]));
    return character_from_exponents(G, ex);
  });
}

std::vector<Character> parse_character_values(const FiniteGroup& G, const Json& v, const std::string& path) {
  std::vector<Character> out;
  const auto& a = get_array(v, path);
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<int> vals;
    for (long x : get_int_array(a[i], idx(path, i))) vals.push_back(static_cast<int>(x));
    out.push_back(semantic([&] { return character_from_values(G, vals); }));
  }
  return out;
}

Json weight_json(const FiniteGroup& G, const Character& c) {
  if (G.factors().size() == 1) return c.exponents[0];
  return Json(c.exponents);
}

FixedComponent parse_component(const Json& c, const std::string& path) {
  check_keys(c, path, {"label", "dimension", "betti", "normal_weights", "ambient"}, {"label", "dimension", "betti"});
  FixedComponent f;
  if (!c["label"].is_string()) schema_error(path + ".label", "expected a string");
  f.label = c["label"].get<std::string>();
  f.dimension = static_cast<int>(get_int(c["dimension"], path + ".dimension"));
  f.betti = get_int_array(c["betti"], path + ".betti");
  if (c.contains("normal_weights")) {
    const auto& w = get_array(c["normal_weights"], path + ".normal_weights");
    for (size_t i = 0; i < w.size(); ++i) {
      const auto p = get_int_array(w[i], idx(path + ".normal_weights", i));
      if (p.size() != 2) schema_error(idx(path + ".normal_weights", i), "expected [m_j, m]");
      f.normal_weights.push_back(NormalWeight{static_cast<int>(p[0]), static_cast<int>(p[1])});
    }
  }
  if (c.contains("ambient")) {
    if (!c["ambient"].is_string()) schema_error(path + ".ambient", "expected a string");
    f.ambient = c["ambient"].get<std::string>();
  }
  return f;
}

struct Parsed {
  GSpace space;
  Json canonical_group;
  Json canonical_space;
};

Parsed parse_space(const Json& doc, const Json& s) {
  const std::string path = "$.space";
  if (!s.is_object()) schema_error(path, "expected an object");
  if (!s.contains("kind") || !s["kind"].is_string()) schema_error(path + ".kind", "missing or not a string");
  const std::string kind = s["kind"].get<std::string>();
  if (kind == "weighted_projective") {
    check_keys(s, path, {"kind", "weights", "dimension"}, {"kind", "weights"});
    if (doc.contains("group")) {
      const auto G = parse_group(doc["group"], "$.group");
      if (G.order() != 1) throw Error("SemanticError", "$.group: weighted projective spaces carry the trivial group");
    }
    std::vector<int> w;
    for (long x : get_int_array(s["weights"], path + ".weights")) w.push_back(static_cast<int>(x));
    if (s.contains("dimension") && get_int(s["dimension"], path + ".dimension") != static_cast<long>(w.size()) - 1)
      throw Error("SemanticError", "DimensionMismatch: " + path + ": " + std::to_string(w.size()) +
                                       " weights do not give dimension " + s["dimension"].dump());
    auto S = semantic([&] { return build_weighted_projective(w); });
    Json cs;
    cs["kind"] = kind;
    cs["weights"] = w;
    return Parsed{S, Json{{"abelian", Json::array()}}, cs};
  }
  if (!doc.contains("group")) schema_error("$.group", "missing required field");
  const auto G = parse_group(doc["group"], "$.group");
  Json cg;
  if (G.has_factors())
    cg["abelian"] = G.factors();
  else {
    cg["table"] = doc["group"]["table"];
    cg["identity"] = doc["group"]["identity"];
  }
  Json cs;
  cs["kind"] = kind;
  if (kind == "linear_projective") {
    check_keys(s, path, {"kind", "weights", "character_values", "dimension"}, {"kind"});
    if (s.contains("weights") == s.contains("character_values"))
      schema_error(path, "exactly one of 'weights' or 'character_values' is required");
    std::vector<Character> chars;
    if (s.contains("weights")) {
      if (!G.has_factors())
        throw Error("SemanticError", "NonAbelianGroup: " + path + ".weights: table groups need 'character_values'");
      const auto& w = get_array(s["weights"], path + ".weights");
      for (size_t i = 0; i < w.size(); ++i) chars.push_back(parse_weight(G, w[i], idx(path + ".weights", i)));
      Json cw = Json::array();
      for (const auto& c : chars) cw.push_back(weight_json(G, c));
      cs["weights"] = cw;
    } else {
      chars = parse_character_values(G, s["character_values"], path + ".character_values");
      Json cv = Json::array();
      for (const auto& c : chars) cv.push_back(c.values);
      cs["character_values"] = cv;
    }
    if (s.contains("dimension") &&
        get_int(s["dimension"], path + ".dimension") != static_cast<long>(chars.size()) - 1)
      throw Error("SemanticError", "DimensionMismatch: " + path + ": " + std::to_string(chars.size()) +
                                       " coordinate characters do not give dimension " + s["dimension"].dump());
    auto S = semantic([&] { return build_linear_projective(G, chars); });
    return Parsed{S, cg, cs};
  }
  if (kind == "product_projective") {
    check_keys(s, path, {"kind", "factor_dims", "generator_permutations", "weights", "dimension"},
               {"kind", "factor_dims"});
    std::vector<int> dims;
    for (long x : get_int_array(s["factor_dims"], path + ".factor_dims")) dims.push_back(static_cast<int>(x));
    std::vector<std::vector<int>> perms;
    if (s.contains("generator_permutations")) {
      const auto& p = get_array(s["generator_permutations"], path + ".generator_permutations");
      for (size_t i = 0; i < p.size(); ++i) {
        std::vector<int> q;
        for (long x : get_int_array(p[i], idx(path + ".generator_permutations", i))) q.push_back(static_cast<int>(x));
        perms.push_back(std::move(q));
      }
    }
    std::vector<std::vector<Character>> chars;
    if (s.contains("weights")) {
      const auto& w = get_array(s["weights"], path + ".weights");
      for (size_t i = 0; i < w.size(); ++i) {
        const auto& f = get_array(w[i], idx(path + ".weights", i));
        std::vector<Character> fc;
        for (size_t j = 0; j < f.size(); ++j) fc.push_back(parse_weight(G, f[j], idx(idx(path + ".weights", i), j)));
        chars.push_back(std::move(fc));
      }
    }
    auto S = semantic([&] { return build_product_projective(G, dims, perms, chars); });
    if (s.contains("dimension") && get_int(s["dimension"], path + ".dimension") != S.dimension())
      throw Error("SemanticError", "DimensionMismatch: " + path + ": factor dimensions sum to " +
                                       std::to_string(S.dimension()));
    cs["factor_dims"] = dims;
    cs["generator_permutations"] = S.product().generator_permutations;
    Json cw = Json::array();
    for (const auto& f : S.product().characters) {
      Json fw = Json::array();
      for (const auto& c : f) fw.push_back(weight_json(G, c));
      cw.push_back(fw);
    }
    cs["weights"] = cw;
    return Parsed{S, cg, cs};
  }
  if (kind == "custom") {
    check_keys(s, path, {"kind", "dimension", "classes", "pair_euler"}, {"kind", "dimension", "classes"});
    const int d = static_cast<int>(get_int(s["dimension"], path + ".dimension"));
    std::vector<CustomClass> classes;
    const auto& cl = get_array(s["classes"], path + ".classes");
    for (size_t i = 0; i < cl.size(); ++i) {
      const std::string cp = idx(path + ".classes", i);
      check_keys(cl[i], cp, {"element", "components", "action"}, {"element", "components"});
      CustomClass c;
      c.element = parse_element(G, cl[i]["element"], cp + ".element");
      const auto& comps = get_array(cl[i]["components"], cp + ".components");
      for (size_t j = 0; j < comps.size(); ++j) c.components.push_back(parse_component(comps[j], idx(cp + ".components", j)));
      if (cl[i].contains("action")) {
        const auto& act = get_array(cl[i]["action"], cp + ".action");
        for (size_t j = 0; j < act.size(); ++j) {
          const std::string ap = idx(cp + ".action", j);
          check_keys(act[j], ap, {"h", "permutation", "traces"}, {"h", "permutation", "traces"});
          CustomAction a;
          a.h = parse_element(G, act[j]["h"], ap + ".h");
          for (long x : get_int_array(act[j]["permutation"], ap + ".permutation")) a.permutation.push_back(static_cast<int>(x));
          const auto& tr = get_array(act[j]["traces"], ap + ".traces");
          for (size_t k = 0; k < tr.size(); ++k) a.traces.push_back(get_int_array(tr[k], idx(ap + ".traces", k)));
          c.action.push_back(std::move(a));
        }
      }
      classes.push_back(std::move(c));
    }
    std::map<std::pair<Element, Element>, long> pairs;
    if (s.contains("pair_euler")) {
      const auto& pe = get_array(s["pair_euler"], path + ".pair_euler");
      for (size_t i = 0; i < pe.size(); ++i) {
        const std::string pp = idx(path + ".pair_euler", i);
        check_keys(pe[i], pp, {"g", "h", "chi"}, {"g", "h", "chi"});
        pairs[{parse_element(G, pe[i]["g"], pp + ".g"), parse_element(G, pe[i]["h"], pp + ".h")}] =
            get_int(pe[i]["chi"], pp + ".chi");
      }
    }
    std::optional<bool> gf, eff;
    if (doc.contains("declared")) {
      const auto& dcl = doc["declared"];
      check_keys(dcl, "$.declared", {"generically_free", "effective"}, {});
      for (const char* key : {"generically_free", "effective"})
        if (dcl.contains(key)) {
          if (!dcl[key].is_boolean()) schema_error(std::string("$.declared.") + key, "expected a boolean");
          (std::string(key) == "effective" ? eff : gf) = dcl[key].get<bool>();
        }
    }
    auto S = semantic([&] { return build_custom(G, d, classes, gf, eff, pairs); });
    cs["dimension"] = d;
    Json jc = Json::array();
    for (const auto& c : S.custom().classes) {
      Json o;
      o["element"] = c.element;
      Json comps = Json::array();
      for (const auto& f : c.components) {
        Json jf;
        jf["label"] = f.label;
        jf["dimension"] = f.dimension;
        jf["betti"] = f.betti;
        Json w = Json::array();
        for (const auto& nw : f.normal_weights) w.push_back({nw.num, nw.den});
        jf["normal_weights"] = w;
        if (!f.ambient.empty()) jf["ambient"] = f.ambient;
        comps.push_back(jf);
      }
      o["components"] = comps;
      if (!c.action.empty()) {
        Json act = Json::array();
        for (const auto& a : c.action) {
          // stored traces are zero padded; write them at Betti length
          auto tr = a.traces;
          for (size_t i = 0; i < tr.size() && i < c.components.size(); ++i) tr[i].resize(c.components[i].betti.size());
          act.push_back(Json{{"h", a.h}, {"permutation", a.permutation}, {"traces", tr}});
        }
        o["action"] = act;
      }
      jc.push_back(o);
    }
    cs["classes"] = jc;
    if (!pairs.empty()) {
      Json pe = Json::array();
      for (const auto& [k, v] : pairs) pe.push_back(Json{{"g", k.first}, {"h", k.second}, {"chi", v}});
      cs["pair_euler"] = pe;
    }
    return Parsed{S, cg, cs};
  }
  schema_error(path + ".kind", "unknown kind '" + kind + "'");
}

std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("InternalError", "SHA-256 failed", ErrorKind::Internal);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Scenario parse_scenario(const std::string& text) {
  Json doc;
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  auto cb = [&](int, Json::parse_event_t ev, Json& parsed) {
    if (ev == Json::parse_event_t::object_start) keys.emplace_back();
    if (ev == Json::parse_event_t::object_end) keys.pop_back();
    if (ev == Json::parse_event_t::key && !keys.empty() && !keys.back().insert(parsed.get<std::string>()).second &&
        duplicate.empty())
      duplicate = parsed.get<std::string>();
    return true;
  };
  try {
    doc = Json::parse(text, cb);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw Error("SyntaxError", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  if (!duplicate.empty()) throw Error("SchemaError", "$: duplicate key '" + duplicate + "'");
  check_keys(doc, "$", {"schema_version", "name", "group", "space", "torsion", "declared"}, {"schema_version", "space"});
  if (get_int(doc["schema_version"], "$.schema_version") != 1)
    throw Error("SchemaError", "$.schema_version: only version 1 is supported");
  std::string name = "scenario";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema_error("$.name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  if (doc.contains("declared") && !(doc["space"].is_object() && doc["space"].value("kind", "") == "custom"))
    schema_error("$.declared", "declared flags apply to custom spaces only");
  Parsed p = parse_space(doc, doc["space"]);
  Scenario s{name, p.space, std::nullopt, false, Json{}, ""};
  if (doc.contains("torsion")) {
    const auto& t = doc["torsion"];
    if (t.is_string()) {
      if (t.get<std::string>() != "all") schema_error("$.torsion", "expected \"all\" or a list of exponent vectors");
      s.torsion_all = true;
      s.torsion = std::vector<std::vector<int>>{};
    } else {
      const auto& a = get_array(t, "$.torsion");
      std::vector<std::vector<int>> eps;
      for (size_t i = 0; i < a.size(); ++i) {
        std::vector<int> e;
        for (long x : get_int_array(a[i], idx("$.torsion", i))) e.push_back(static_cast<int>(x));
        semantic([&] { return standard_cocycle(s.space.group(), e); });
        eps.push_back(std::move(e));
      }
      s.torsion = eps;
    }
  }
  Json c;
  c["schema_version"] = 1;
  c["name"] = name;
  c["group"] = p.canonical_group;
  c["space"] = p.canonical_space;
  if (s.torsion) c["torsion"] = s.torsion_all ? Json("all") : Json(*s.torsion);
  if (doc.contains("declared")) {
    Json d;
    const auto& cd = s.space.custom();
    if (cd.generically_free) d["generically_free"] = *cd.generically_free;
    if (cd.effective) d["effective"] = *cd.effective;
    c["declared"] = d;
  }
  s.document = c;
  s.digest = sha256_hex(c.dump());
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileNotFound", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

Json render_scenario(const Scenario& s) { return s.document; }

FiniteGroup parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || spec.substr(0, colon) != "abelian")
    throw Error("UsageError", "group spec must look like abelian:[n1,...,nr]");
  Json factors;
  try {
    factors = Json::parse(spec.substr(colon + 1));
  } catch (const nlohmann::json::parse_error&) {
    throw Error("UsageError", "cannot parse factor list in '" + spec + "'");
  }
  return parse_group(Json{{"abelian", factors}}, "group");
}

}  // namespace orbi
