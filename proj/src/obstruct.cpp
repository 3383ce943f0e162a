#include "orbi/obstruct.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "orbi/burnside.hpp"
#include "orbi/chenruan.hpp"
#include "orbi/cocycle.hpp"
#include "orbi/error.hpp"

namespace orbi {

namespace {

std::string first_difference(const GradedDims& a, const GradedDims& b) {
  auto ia = a.dims.begin(), ib = b.dims.begin();
  while (ia != a.dims.end() || ib != b.dims.end()) {
    Rational deg;
    if (ib == b.dims.end() || (ia != a.dims.end() && ia->first < ib->first))
      deg = ia->first;
    else
      deg = ib->first;
    const long x = a.at(deg), y = b.at(deg);
    if (x != y)
      return "first difference at degree " + to_string(deg) + ": " + std::to_string(x) + " vs " + std::to_string(y) +
             "; totals " + std::to_string(a.total()) + " vs " + std::to_string(b.total());
    if (ia != a.dims.end() && ia->first == deg) ++ia;
    if (ib != b.dims.end() && ib->first == deg) ++ib;
  }
  return "";
}

std::string totals(const std::vector<GradedDims>& v) {
  std::ostringstream os;
  os << v.size() << " classes, totals [";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].total();
  os << ']';
  return os.str();
}

std::string beta_summary(const FiniteGroup& G, const BurnsideClass& c) {
  std::string s;
  for (const auto& [sym, k] : c.terms) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += std::to_string(k) + "*";
    s += to_string(G, sym);
  }
  return s.empty() ? "0" : s;
}

std::optional<std::string> beta_skip_reason(const GSpace& S) {
  if (S.kind() == SpaceKind::Custom) return "custom data carries no tangent characters";
  if (!S.group().has_factors()) return "β needs an abelian presentation";
  if (S.dimension() < 2) return "β needs dimension >= 2";
  if (!is_generically_free(S).generically_free) return "action is not generically free";
  return std::nullopt;
}

std::vector<GradedDims> twisted_family(const GSpace& S, const std::vector<Cocycle>& cocycles) {
  std::vector<GradedDims> out;
  for (const auto& a : cocycles) out.push_back(cr_twisted_dimensions(S, a));
  return out;
}

}  // namespace

std::vector<std::string> space_warnings(const GSpace& S) {
  std::vector<std::string> w;
  if (S.kind() == SpaceKind::Custom) {
    const auto& c = S.custom();
    w.push_back("custom fixed-locus data is unverified");
    if (c.action_defaulted) w.push_back("centralizer action not supplied; assumed trivial on cohomology");
    if (!c.generically_free) w.push_back("generically_free not declared; treated as false");
    if (c.effective == std::optional<bool>(false)) w.push_back("effective=false (declared)");
    return w;
  }
  const auto ker = ineffective_kernel(S);
  if (ker.size() > 1) {
    std::string s = "effective=false: ineffective kernel of order " + std::to_string(ker.size()) + " {";
    for (size_t i = 0; i < ker.size(); ++i) s += (i ? "," : "") + S.group().element_label(ker[i]);
    w.push_back(s + "}");
  }
  return w;
}

ObstructionReport compare(const GSpace& A, const GSpace& B, const CompareOptions& options,
                          const std::string& left_id, const std::string& right_id) {
  if (!A.group().same_as(B.group()))
    throw Error("GroupMismatch", "groups differ: " + A.group().name() + " vs " + B.group().name());
  if (A.dimension() != B.dimension())
    throw Error("DimensionMismatch", "dimensions differ: " + std::to_string(A.dimension()) + " vs " +
                                         std::to_string(B.dimension()));
  const auto& G = A.group();
  ObstructionReport r;
  r.left_id = left_id;
  r.right_id = right_id;
  for (const auto& w : space_warnings(A)) r.warnings.push_back(left_id + ": " + w);
  for (const auto& w : space_warnings(B)) r.warnings.push_back(right_id + ": " + w);

  if (options.cr_dims) {
    InvariantEntry e{"cr_dims", "", "", true, false, ""};
    const auto a = cr_dimensions(A), b = cr_dimensions(B);
    e.left = poincare_string(a);
    e.right = poincare_string(b);
    e.match = a == b;
    e.detail = e.match ? "total " + std::to_string(a.total()) : first_difference(a, b);
    r.entries.push_back(e);
  }
  if (options.cr_twisted) {
    InvariantEntry e{"cr_twisted", "", "", true, false, ""};
    if (!G.has_factors()) {
      e.skipped = true;
      e.detail = "torsion classes are enumerated for abelian presentations only";
    } else {
      std::vector<Cocycle> cocycles;
      for (const auto& eps : cocycle_class_parameters(G)) cocycles.push_back(standard_cocycle(G, eps));
      auto a = twisted_family(A, cocycles), b = twisted_family(B, cocycles);
      e.left = totals(a);
      e.right = totals(b);
      if (options.aut_relabel) {
        e.match = false;
        for (const auto& phi : automorphisms(G)) {
          bool ok = true;
          for (size_t i = 0; i < cocycles.size() && ok; ++i)
            ok = a[i] == cr_twisted_dimensions(B, pullback(cocycles[i], phi));
          if (ok) {
            e.match = true;
            break;
          }
        }
        e.detail = e.match ? "matched after an automorphism of G" : "no automorphism of G matches the twisted families";
      } else {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        e.match = a == b;
        e.detail = e.match ? "twisted dimension multisets agree" : "twisted dimension multisets differ";
      }
    }
    r.entries.push_back(e);
  }
  if (options.euler) {
    InvariantEntry e{"euler", "", "", true, false, ""};
    std::optional<long> ea, eb;
    std::string why;
    try {
      ea = orbifold_euler(A);
    } catch (const Error& err) {
      if (err.code() != "UnsupportedForCustom") throw;
      why = left_id + ": " + err.what();
    }
    try {
      eb = orbifold_euler(B);
    } catch (const Error& err) {
      if (err.code() != "UnsupportedForCustom") throw;
      why += (why.empty() ? "" : "; ") + right_id + ": " + err.what();
    }
    e.left = ea ? std::to_string(*ea) : "unavailable";
    e.right = eb ? std::to_string(*eb) : "unavailable";
    if (ea && eb) {
      e.match = *ea == *eb;
      e.detail = "orbifold Euler numbers";
    } else {
      e.skipped = true;
      e.detail = "oracle unavailable (" + why + ")";
    }
    for (const auto* side : {&A, &B}) {
      const auto& id = side == &A ? left_id : right_id;
      const auto& val = side == &A ? ea : eb;
      if (val && side->kind() != SpaceKind::WeightedProjective && *val != signed_cr_euler(*side))
        r.warnings.push_back(id + ": Euler oracle " + std::to_string(*val) +
                             " disagrees with the Chen-Ruan data " + std::to_string(signed_cr_euler(*side)));
    }
    r.entries.push_back(e);
  }
  if (options.beta) {
    InvariantEntry e{"beta", "", "", true, false, ""};
    auto ra = beta_skip_reason(A), rb = beta_skip_reason(B);
    if (ra || rb) {
      e.skipped = true;
      e.detail = ra ? left_id + ": " + *ra : right_id + ": " + *rb;
    } else {
      try {
        const RelationLattice L(G, A.dimension());
        const auto ba = beta_class(A), bb = beta_class(B);
        e.left = beta_summary(G, ba);
        e.right = beta_summary(G, bb);
        e.match = classes_equal(ba, bb, L);
        e.detail = "B_" + std::to_string(A.dimension()) + "(" + G.name() + ") = " + L.structure().to_string();
        for (const auto* side : {&A, &B})
          for (const auto& t : fixed_point_tangents(*side))
            if (t.component.dimension > 0) {
              r.warnings.push_back((side == &A ? left_id : right_id) +
                                   ": positive-dimensional fixed component " + t.component.label +
                                   " enters β through its tangent characters only");
              break;
            }
      } catch (const Error& err) {
        if (err.code() != "UniverseTooLarge" && err.code() != "InadmissibleTangentData") throw;
        e.skipped = true;
        e.detail = err.what();
      }
    }
    r.entries.push_back(e);
  }
  for (const auto& e : r.entries)
    if (!e.skipped && !e.match) r.verdict = "OBSTRUCTED";
  // same id on both sides repeats every warning
  std::vector<std::string> uniq;
  for (auto& w : r.warnings)
    if (std::find(uniq.begin(), uniq.end(), w) == uniq.end()) uniq.push_back(std::move(w));
  r.warnings = std::move(uniq);
  return r;
}

KernelCopies kernel_copy_count(const GSpace& S) {
  KernelCopies k;
  k.kernel = ineffective_kernel(S);
  k.kernel_order = static_cast<int>(k.kernel.size());
  const auto contrib = cr_contributions(S);
  const auto& G = S.sector_group();
  const GradedDims* untwisted = nullptr;
  for (const auto& c : contrib)
    if (c.g == G.identity()) untwisted = &c.dims;
  k.copies = 0;
  for (const auto& c : contrib) {
    const auto comps = fixed_locus(S, c.g);
    if (comps.size() == 1 && comps[0].dimension == S.dimension() && comps[0].age().numerator() == 0 && untwisted &&
        c.dims == *untwisted)
      ++k.copies;
  }
  return k;
}

}  // namespace orbi
