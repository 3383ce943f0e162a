#include "orbi/gspace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbi/error.hpp"

namespace orbi {

namespace {

std::vector<long> projective_betti(int n) {
  std::vector<long> b(static_cast<size_t>(2 * n + 1), 0);
  for (int k = 0; k <= n; ++k) b[static_cast<size_t>(2 * k)] = 1;
  return b;
}

std::string set_label(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// sorted so that g and g^-1 name the same block alike
std::string orbit_label(std::vector<int> orbit) {
  std::sort(orbit.begin(), orbit.end());
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < orbit.size(); ++i) os << (i ? " " : "") << orbit[i];
  os << ')';
  return os.str();
}

// Partition coordinate indices 0..n-1 by a key, classes ordered by their
// smallest member.
template <class KeyFn>
std::vector<std::vector<int>> partition_by(int n, KeyFn key) {
  std::vector<std::vector<int>> classes;
  std::vector<decltype(key(0))> keys;
  for (int i = 0; i < n; ++i) {
    const auto k = key(i);
    auto it = std::find(keys.begin(), keys.end(), k);
    if (it == keys.end()) {
      keys.push_back(k);
      classes.push_back({i});
    } else {
      classes[static_cast<size_t>(it - keys.begin())].push_back(i);
    }
  }
  return classes;
}

void sort_by_label(std::vector<FixedComponent>& comps) {
  std::sort(comps.begin(), comps.end(),
            [](const FixedComponent& a, const FixedComponent& b) { return a.label < b.label; });
}

// Tangent eigenvalue exponent of coordinate j relative to base coordinate b,
// converted to a normal weight over m = order(g). Returns num == 0 for
// tangent directions.
NormalWeight to_weight(long value, int exponent, int m) {
  const long v = mod(value, exponent);
  // value is a multiple of exponent/m since g^m = 1
  return NormalWeight{static_cast<int>(v * m / exponent), m};
}

struct OptionForBlock {
  Block block;
  std::vector<NormalWeight> weights;
};

// Cartesian product of per-block options into fixed components.
std::vector<FixedComponent> assemble(const std::vector<std::vector<OptionForBlock>>& per_block,
                                     bool orbit_in_label) {
  std::vector<FixedComponent> out;
  if (per_block.empty()) return out;
  for (const auto& opts : per_block)
    if (opts.empty()) return out;
  std::vector<size_t> pick(per_block.size(), 0);
  while (true) {
    FixedComponent c;
    std::vector<int> dims;
    std::string label, ambient;
    for (size_t i = 0; i < per_block.size(); ++i) {
      const auto& o = per_block[i][pick[i]];
      c.blocks.push_back(o.block);
      c.normal_weights.insert(c.normal_weights.end(), o.weights.begin(), o.weights.end());
      dims.push_back(o.block.dimension());
      if (i) {
        label += "x";
        ambient += " x ";
      }
      if (orbit_in_label) label += orbit_label(o.block.orbit);
      label += set_label(o.block.coords);
      ambient += "P^" + std::to_string(o.block.dimension());
    }
    c.label = label;
    c.ambient = ambient;
    c.dimension = std::accumulate(dims.begin(), dims.end(), 0);
    c.betti = kunneth_traces(dims, {});
    out.push_back(std::move(c));
    size_t p = pick.size();
    bool done = true;
    while (p-- > 0) {
      if (++pick[p] < per_block[p].size()) {
        done = false;
        break;
      }
      pick[p] = 0;
    }
    if (done) break;
  }
  sort_by_label(out);
  return out;
}

// Cycles of a permutation, each starting at its smallest member.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      cyc.push_back(j);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

void require_element(const GSpace& S, Element g) {
  if (!S.sector_group().contains(g))
    throw Error("ElementNotInGroup", "element " + std::to_string(g) + " not in group");
}

}  // namespace

Rational FixedComponent::age() const {
  Rational a(0);
  for (const auto& w : normal_weights) a += w.value();
  return a;
}

long FixedComponent::euler_characteristic() const {
  long chi = 0;
  for (size_t k = 0; k < betti.size(); ++k) chi += (k % 2 ? -1 : 1) * betti[k];
  return chi;
}

const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::LinearProjective: return "linear_projective";
    case SpaceKind::ProductProjective: return "product_projective";
    case SpaceKind::WeightedProjective: return "weighted_projective";
    case SpaceKind::Custom: return "custom";
  }
  return "?";
}

std::vector<long> kunneth_traces(std::span<const int> dims, std::span<const int> sigma) {
  const int total = std::accumulate(dims.begin(), dims.end(), 0);
  std::vector<long> poly(static_cast<size_t>(2 * total + 1), 0);
  poly[0] = 1;
  std::vector<char> seen(dims.size(), 0);
  for (size_t i = 0; i < dims.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = sigma.empty() ? j : static_cast<size_t>(sigma[j])) {
      seen[j] = 1;
      ++len;
      if (sigma.empty()) break;
    }
    // a monomial is fixed iff its degrees are constant along the cycle
    const int m = dims[i];
    std::vector<long> next(poly.size(), 0);
    for (size_t k = 0; k < poly.size(); ++k) {
      if (!poly[k]) continue;
      for (int t = 0; t <= m; ++t) {
        const size_t deg = k + static_cast<size_t>(2 * t) * len;
        if (deg < next.size()) next[deg] += poly[k];
      }
    }
    poly = std::move(next);
  }
  return poly;
}

GSpace::GSpace(FiniteGroup group, FiniteGroup sector_group, int dimension, Data data)
    : group_(std::move(group)),
      sector_group_(std::move(sector_group)),
      dimension_(dimension),
      data_(std::move(data)) {
  effective_ = ineffective_kernel(*this).size() == 1;
  if (kind() == SpaceKind::Custom) {
    const auto& c = custom();
    effective_ = c.effective.value_or(c.generically_free.value_or(true));
  }
}

SpaceKind GSpace::kind() const { return static_cast<SpaceKind>(data_.index()); }

std::string GSpace::sector_label(Element g) const {
  if (kind() == SpaceKind::WeightedProjective)
    return to_string(Rational(g, weighted().lcm));
  return sector_group_.element_label(g);
}

// --- constructors ---------------------------------------------------------

GSpace build_linear_projective(const FiniteGroup& G, std::vector<Character> characters) {
  if (characters.empty())
    throw Error("DimensionMismatch", "linear projective space needs at least one coordinate");
  for (const auto& chi : characters)
    if (static_cast<int>(chi.values.size()) != G.order())
      throw Error("BadCharacter", "character does not belong to the group");
  const int d = static_cast<int>(characters.size()) - 1;
  return GSpace(G, G, d, LinearData{std::move(characters)});
}

GSpace build_product_projective(const FiniteGroup& G, std::vector<int> factor_dims,
                                std::vector<std::vector<int>> generator_permutations,
                                std::vector<std::vector<Character>> characters) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "product projective spaces need an abelian presentation");
  const size_t s = factor_dims.size();
  if (s == 0) throw Error("DimensionMismatch", "product needs at least one factor");
  for (int n : factor_dims)
    if (n < 0) throw Error("DimensionMismatch", "factor dimensions must be >= 0");
  const auto& f = G.factors();
  std::vector<int> id(s);
  std::iota(id.begin(), id.end(), 0);
  if (generator_permutations.empty()) generator_permutations.assign(f.size(), id);
  if (generator_permutations.size() != f.size())
    throw Error("IncompatiblePermutation",
                "need one factor permutation per cyclic factor of the group");
  for (const auto& p : generator_permutations) {
    if (p.size() != s) throw Error("IncompatiblePermutation", "permutation has wrong length");
    std::vector<char> hit(s, 0);
    for (size_t i = 0; i < s; ++i) {
      if (p[i] < 0 || p[i] >= static_cast<int>(s) || hit[static_cast<size_t>(p[i])])
        throw Error("IncompatiblePermutation", "factor images do not form a permutation");
      hit[static_cast<size_t>(p[i])] = 1;
      if (factor_dims[i] != factor_dims[static_cast<size_t>(p[i])])
        throw Error("IncompatiblePermutation", "permutation mixes factors of different dimension");
    }
  }
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(s);
    for (size_t i = 0; i < s; ++i) c[i] = a[static_cast<size_t>(b[i])];
    return c;
  };
  for (size_t i = 0; i < f.size(); ++i) {
    std::vector<int> p = id;
    for (int k = 0; k < f[i]; ++k) p = compose(generator_permutations[i], p);
    if (p != id)
      throw Error("NonHomomorphism", "generator " + std::to_string(i + 1) +
                                         " permutation order does not divide " + std::to_string(f[i]));
    for (size_t j = i + 1; j < f.size(); ++j)
      if (compose(generator_permutations[i], generator_permutations[j]) !=
          compose(generator_permutations[j], generator_permutations[i]))
        throw Error("NonHomomorphism", "generator permutations do not commute");
  }
  ProductData data;
  data.factor_dims = factor_dims;
  data.generator_permutations = generator_permutations;
  data.permutation.resize(static_cast<size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    const auto t = G.tuple(g);
    std::vector<int> p = id;
    for (size_t i = 0; i < f.size(); ++i)
      for (int k = 0; k < t[i]; ++k) p = compose(generator_permutations[i], p);
    data.permutation[static_cast<size_t>(g)] = std::move(p);
  }
  if (characters.empty()) {
    characters.resize(s);
    for (size_t i = 0; i < s; ++i)
      characters[i].assign(static_cast<size_t>(factor_dims[i] + 1), trivial_character(G));
  }
  if (characters.size() != s)
    throw Error("DimensionMismatch", "need one character list per factor");
  for (size_t i = 0; i < s; ++i)
    if (static_cast<int>(characters[i].size()) != factor_dims[i] + 1)
      throw Error("DimensionMismatch", "factor " + std::to_string(i) + " needs " +
                                           std::to_string(factor_dims[i] + 1) + " characters");
  // g acts by moving factor i to pi(g)(i) and scaling by D_i(g); this is an
  // action iff D_{pi(h) i}(g) and D_i(g) agree up to a scalar.
  const int E = G.exponent();
  for (int g = 0; g < G.order(); ++g)
    for (const auto& p : generator_permutations)
      for (size_t i = 0; i < s; ++i) {
        const auto& a = characters[i];
        const auto& b = characters[static_cast<size_t>(p[i])];
        const long shift = mod(b[0](g) - a[0](g), E);
        for (size_t c = 1; c < a.size(); ++c)
          if (mod(b[c](g) - a[c](g), E) != shift)
            throw Error("NonHomomorphism", "coordinate characters of factors " + std::to_string(i) +
                                               " and " + std::to_string(p[i]) +
                                               " are not compatible with the permutation");
      }
  data.characters = std::move(characters);
  const int d = std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
  return GSpace(G, G, d, std::move(data));
}

GSpace build_weighted_projective(std::vector<int> weights) {
  if (weights.empty()) throw Error("EmptyWeights", "weighted projective space needs weights");
  int L = 1;
  for (int w : weights) {
    if (w < 1) throw Error("EmptyWeights", "weights must be positive");
    L = std::lcm(L, w);
  }
  if (L > 5000) throw Error("GroupTooLarge", "lcm of weights exceeds 5000");
  const int d = static_cast<int>(weights.size()) - 1;
  return GSpace(FiniteGroup::abelian({}), FiniteGroup::abelian({L}), d,
                WeightedData{std::move(weights), L});
}

GSpace build_custom(const FiniteGroup& G, int dimension, std::vector<CustomClass> classes,
                    std::optional<bool> generically_free, std::optional<bool> effective,
                    std::map<std::pair<Element, Element>, long> pair_euler) {
  if (dimension < 0) throw Error("DimensionMismatch", "dimension must be >= 0");
  const auto& cc = G.conjugacy_classes();
  std::vector<CustomClass> by_class(cc.size());
  std::vector<char> have(cc.size(), 0);
  for (auto& c : classes) {
    if (!G.contains(c.element))
      throw Error("ElementNotInGroup", "class element " + std::to_string(c.element) + " not in group");
    const int ci = G.class_index(c.element);
    if (have[static_cast<size_t>(ci)])
      throw Error("DuplicateClass", "class of " + G.element_label(c.element) + " given twice");
    have[static_cast<size_t>(ci)] = 1;
    for (auto& comp : c.components) {
      if (comp.dimension < 0 || comp.dimension > dimension)
        throw Error("DimensionMismatch", "component " + comp.label + " has invalid dimension");
      if (static_cast<int>(comp.normal_weights.size()) + comp.dimension != dimension)
        throw Error("DimensionMismatch", "component " + comp.label +
                                             ": normal weights + dimension must equal " +
                                             std::to_string(dimension));
      if (comp.betti.size() > static_cast<size_t>(2 * comp.dimension + 1))
        throw Error("DimensionMismatch", "component " + comp.label + " has Betti numbers above its real dimension");
      for (long b : comp.betti)
        if (b < 0) throw Error("DimensionMismatch", "component " + comp.label + " has a negative Betti number");
      comp.betti.resize(static_cast<size_t>(2 * comp.dimension + 1), 0);
      for (const auto& w : comp.normal_weights) {
        if (w.den < 1) throw Error("ZeroNormalWeight", "normal weight denominator must be positive");
        if (mod(w.num, w.den) == 0)
          throw Error("ZeroNormalWeight", "component " + comp.label + " has a trivial normal weight");
        if (w.num <= 0 || w.num >= w.den)
          throw Error("ZeroNormalWeight", "component " + comp.label + ": normal weight must satisfy 0 < m_j < m");
      }
    }
    {
      // sort by label; action data follows the components
      const size_t n = c.components.size();
      std::vector<size_t> order(n);
      std::iota(order.begin(), order.end(), size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return c.components[a].label < c.components[b].label;
      });
      std::vector<size_t> pos(n);
      for (size_t i = 0; i < n; ++i) pos[order[i]] = i;
      std::vector<FixedComponent> sorted;
      for (size_t i : order) sorted.push_back(std::move(c.components[i]));
      c.components = std::move(sorted);
      for (auto& a : c.action) {
        if (a.permutation.size() != n || a.traces.size() != n) continue;  // rejected below
        std::vector<int> perm(n);
        std::vector<std::vector<long>> tr(n);
        for (size_t i = 0; i < n; ++i) {
          const int j = a.permutation[i];
          perm[pos[i]] = (j >= 0 && j < static_cast<int>(n)) ? static_cast<int>(pos[static_cast<size_t>(j)]) : j;
          tr[pos[i]] = std::move(a.traces[i]);
        }
        a.permutation = std::move(perm);
        a.traces = std::move(tr);
      }
    }
    for (size_t i = 1; i < c.components.size(); ++i)
      if (c.components[i].label == c.components[i - 1].label)
        throw Error("DuplicateComponent", "component label " + c.components[i].label + " repeated");
    by_class[static_cast<size_t>(ci)] = std::move(c);
  }
  for (size_t i = 0; i < cc.size(); ++i)
    if (!have[i])
      throw Error("MissingClass", "no fixed-locus entry for the class of " +
                                      G.element_label(cc[i].representative));
  const auto& idc = by_class[static_cast<size_t>(G.class_index(G.identity()))];
  if (idc.components.empty())
    throw Error("DimensionMismatch", "identity class must carry the whole space");
  for (const auto& comp : idc.components)
    if (comp.dimension != dimension || !comp.normal_weights.empty())
      throw Error("DimensionMismatch", "identity class components must be the whole space with age 0");

  bool defaulted = false;
  for (auto& c : by_class) {
    const auto cent = G.centralizer(c.element);
    const size_t nc = c.components.size();
    if (c.action.empty()) {
      defaulted = defaulted || G.order() > 1;
      continue;
    }
    std::map<Element, const CustomAction*> by_h;
    for (const auto& a : c.action) {
      if (!std::binary_search(cent.begin(), cent.end(), a.h))
        throw Error("BadCentralizerAction", "action element " + G.element_label(a.h) +
                                                " does not centralize " + G.element_label(c.element));
      if (a.permutation.size() != nc || a.traces.size() != nc)
        throw Error("BadCentralizerAction", "action of " + G.element_label(a.h) + " must cover every component");
      std::vector<char> hit(nc, 0);
      for (size_t i = 0; i < nc; ++i) {
        const int j = a.permutation[i];
        if (j < 0 || j >= static_cast<int>(nc) || hit[static_cast<size_t>(j)])
          throw Error("BadCentralizerAction", "component permutation of " + G.element_label(a.h) + " is not a bijection");
        hit[static_cast<size_t>(j)] = 1;
        const auto& src = c.components[i];
        const auto& dst = c.components[static_cast<size_t>(j)];
        if (src.dimension != dst.dimension || src.betti != dst.betti ||
            src.age() != dst.age())
          throw Error("BadCentralizerAction", "action maps " + src.label + " to a non-isomorphic component");
        if (a.traces[i].size() > src.betti.size())
          throw Error("BadCentralizerAction", "too many trace entries for " + src.label);
      }
      by_h[a.h] = &a;
    }
    if (by_h.size() != cent.size())
      throw Error("BadCentralizerAction", "action data must list every centralizer element of " +
                                              G.element_label(c.element));
    for (auto& a : c.action)
      for (auto& t : a.traces) t.resize(static_cast<size_t>(2 * dimension + 1), 0);
    const auto* e = by_h.at(G.identity());
    for (size_t i = 0; i < nc; ++i) {
      if (e->permutation[i] != static_cast<int>(i))
        throw Error("BadCentralizerAction", "identity must fix every component");
      for (size_t k = 0; k < c.components[i].betti.size(); ++k)
        if (e->traces[i][k] != c.components[i].betti[k])
          throw Error("BadCentralizerAction", "identity traces must equal Betti numbers on " +
                                                  c.components[i].label);
    }
    for (Element h1 : cent)
      for (Element h2 : cent) {
        const auto& p1 = by_h.at(h1)->permutation;
        const auto& p2 = by_h.at(h2)->permutation;
        const auto& p12 = by_h.at(G.mul(h1, h2))->permutation;
        for (size_t i = 0; i < nc; ++i)
          if (p12[i] != p1[static_cast<size_t>(p2[i])])
            throw Error("BadCentralizerAction", "component permutations are not a homomorphism");
      }
    std::sort(c.action.begin(), c.action.end(),
              [](const CustomAction& a, const CustomAction& b) { return a.h < b.h; });
  }
  for (const auto& [pair, chi] : pair_euler) {
    (void)chi;
    if (!G.contains(pair.first) || !G.contains(pair.second))
      throw Error("ElementNotInGroup", "pair_euler element out of range");
    if (!G.commute(pair.first, pair.second))
      throw Error("SemanticError", "pair_euler lists a non-commuting pair");
  }
  CustomData data;
  data.dimension = dimension;
  data.classes = std::move(by_class);
  data.generically_free = generically_free;
  data.effective = effective;
  data.pair_euler = std::move(pair_euler);
  data.action_defaulted = defaulted;
  return GSpace(G, G, dimension, std::move(data));
}

// --- fixed loci -----------------------------------------------------------

namespace {

std::vector<FixedComponent> linear_fixed(const GSpace& S, Element g) {
  const auto& chars = S.linear().characters;
  const int E = S.group().exponent();
  const int m = S.group().element_order(g);
  const int n = static_cast<int>(chars.size());
  std::vector<FixedComponent> out;
  for (const auto& J : partition_by(n, [&](int i) { return chars[static_cast<size_t>(i)](g); })) {
    FixedComponent c;
    const int base = chars[static_cast<size_t>(J[0])](g);
    for (int j = 0; j < n; ++j)
      if (std::find(J.begin(), J.end(), j) == J.end())
        c.normal_weights.push_back(to_weight(chars[static_cast<size_t>(j)](g) - base, E, m));
    c.dimension = static_cast<int>(J.size()) - 1;
    c.betti = projective_betti(c.dimension);
    c.label = set_label(J);
    c.ambient = "P^" + std::to_string(c.dimension) + " on coords " + set_label(J);
    c.blocks = {Block{{}, J}};
    out.push_back(std::move(c));
  }
  sort_by_label(out);
  return out;
}

std::vector<FixedComponent> product_fixed(const GSpace& S, Element g) {
  const auto& P = S.product();
  const auto& G = S.group();
  const int E = G.exponent();
  const int m = G.element_order(g);
  std::vector<std::vector<OptionForBlock>> per_block;
  for (const auto& cyc : cycles_of(P.permutation[static_cast<size_t>(g)])) {
    const int len = static_cast<int>(cyc.size());
    const auto& ch = P.characters[static_cast<size_t>(cyc[0])];
    const Element gl = G.pow(g, len);
    std::vector<OptionForBlock> opts;
    for (const auto& J : partition_by(static_cast<int>(ch.size()),
                                      [&](int c) { return ch[static_cast<size_t>(c)](gl); })) {
      OptionForBlock o;
      o.block = Block{cyc, J};
      const int base = ch[static_cast<size_t>(J[0])](gl);
      // around a cycle of length len the composite acts on the base factor by
      // g^len; g itself has every len-th root of those eigenvalues
      for (size_t c = 0; c < ch.size(); ++c) {
        if (static_cast<int>(c) == J[0]) continue;
        const long mu = mod(ch[c](gl) - base, E);
        for (int t = 0; t < len; ++t) {
          const Rational nu = frac(Rational(mu + static_cast<long>(t) * E, static_cast<long>(E) * len));
          if (nu.numerator() == 0) continue;
          const Rational num = nu * m;
          if (num.denominator() != 1)
            throw Error("InternalError", "tangent eigenvalue is not an m-th root of unity",
                        ErrorKind::Internal);
          o.weights.push_back(NormalWeight{static_cast<int>(num.numerator()), m});
        }
      }
      opts.push_back(std::move(o));
    }
    per_block.push_back(std::move(opts));
  }
  return assemble(per_block, true);
}

std::vector<FixedComponent> weighted_fixed(const GSpace& S, Element k) {
  const auto& W = S.weighted();
  const int L = W.lcm;
  std::vector<int> J;
  std::vector<NormalWeight> weights;
  for (size_t i = 0; i < W.weights.size(); ++i) {
    const long e = mod(static_cast<long>(k) * W.weights[i], L);
    if (e == 0)
      J.push_back(static_cast<int>(i));
    else
      weights.push_back(NormalWeight{static_cast<int>(e), L});
  }
  if (J.empty()) return {};
  FixedComponent c;
  c.dimension = static_cast<int>(J.size()) - 1;
  c.betti = projective_betti(c.dimension);
  c.normal_weights = std::move(weights);
  c.label = set_label(J);
  std::ostringstream amb;
  amb << "P(";
  for (size_t i = 0; i < J.size(); ++i) amb << (i ? "," : "") << W.weights[static_cast<size_t>(J[i])];
  amb << ")";
  c.ambient = amb.str();
  c.blocks = {Block{{}, J}};
  return {c};
}

}  // namespace

std::vector<FixedComponent> fixed_locus(const GSpace& S, Element g) {
  require_element(S, g);
  switch (S.kind()) {
    case SpaceKind::LinearProjective: return linear_fixed(S, g);
    case SpaceKind::ProductProjective: return product_fixed(S, g);
    case SpaceKind::WeightedProjective: return weighted_fixed(S, g);
    case SpaceKind::Custom: {
      const auto& G = S.group();
      return S.custom().classes[static_cast<size_t>(G.class_index(g))].components;
    }
  }
  return {};
}

std::optional<std::vector<FixedComponent>> common_fixed_locus(const GSpace& S,
                                                              std::span<const Element> elements) {
  for (Element g : elements) require_element(S, g);
  const auto& G = S.sector_group();
  switch (S.kind()) {
    case SpaceKind::LinearProjective: {
      const auto& chars = S.linear().characters;
      std::vector<FixedComponent> out;
      for (const auto& J : partition_by(static_cast<int>(chars.size()), [&](int i) {
             std::vector<int> key;
             for (Element g : elements) key.push_back(chars[static_cast<size_t>(i)](g));
             return key;
           })) {
        FixedComponent c;
        c.dimension = static_cast<int>(J.size()) - 1;
        c.betti = projective_betti(c.dimension);
        c.label = set_label(J);
        c.ambient = "P^" + std::to_string(c.dimension);
        c.blocks = {Block{{}, J}};
        out.push_back(std::move(c));
      }
      sort_by_label(out);
      return out;
    }
    case SpaceKind::ProductProjective: {
      const auto& P = S.product();
      const auto H = generated_subgroup(G, elements);
      const size_t s = P.factor_dims.size();
      std::vector<char> seen(s, 0);
      std::vector<std::vector<OptionForBlock>> per_block;
      for (size_t b = 0; b < s; ++b) {
        if (seen[b]) continue;
        std::vector<int> orbit;
        std::vector<Element> stab;
        for (Element h : H) {
          const int img = P.permutation[static_cast<size_t>(h)][b];
          if (!seen[static_cast<size_t>(img)]) {
            seen[static_cast<size_t>(img)] = 1;
            orbit.push_back(img);
          }
          if (img == static_cast<int>(b)) stab.push_back(h);
        }
        std::sort(orbit.begin(), orbit.end());
        const auto& ch = P.characters[b];
        std::vector<OptionForBlock> opts;
        for (const auto& J : partition_by(static_cast<int>(ch.size()), [&](int c) {
               std::vector<int> key;
               for (Element h : stab) key.push_back(ch[static_cast<size_t>(c)](h));
               return key;
             }))
          opts.push_back(OptionForBlock{Block{orbit, J}, {}});
        per_block.push_back(std::move(opts));
      }
      return assemble(per_block, true);
    }
    case SpaceKind::WeightedProjective: {
      const auto& W = S.weighted();
      std::vector<int> J;
      for (size_t i = 0; i < W.weights.size(); ++i) {
        bool fixed = true;
        for (Element k : elements)
          fixed = fixed && mod(static_cast<long>(k) * W.weights[i], W.lcm) == 0;
        if (fixed) J.push_back(static_cast<int>(i));
      }
      if (J.empty()) return std::vector<FixedComponent>{};
      FixedComponent c;
      c.dimension = static_cast<int>(J.size()) - 1;
      c.betti = projective_betti(c.dimension);
      c.label = set_label(J);
      c.blocks = {Block{{}, J}};
      return std::vector<FixedComponent>{c};
    }
    case SpaceKind::Custom: {
      std::optional<Element> single;
      for (Element g : elements) {
        if (g == G.identity()) continue;
        if (single && *single != g) return std::nullopt;
        single = g;
      }
      auto comps = fixed_locus(S, single.value_or(G.identity()));
      for (auto& c : comps) c.normal_weights.clear();
      return comps;
    }
  }
  return std::nullopt;
}

CentralizerActionData cohomology_action(const GSpace& S, Element g) {
  require_element(S, g);
  const auto& G = S.sector_group();
  CentralizerActionData out;
  out.g = g;
  out.centralizer = G.centralizer(g);
  const auto comps = fixed_locus(S, g);
  const size_t nc = comps.size();
  auto trivial = [&] {
    std::vector<int> id(nc);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<long>> tr;
    for (const auto& c : comps) tr.push_back(c.betti);
    for (size_t i = 0; i < out.centralizer.size(); ++i) {
      out.permutation.push_back(id);
      out.traces.push_back(tr);
    }
  };
  switch (S.kind()) {
    case SpaceKind::LinearProjective:
    case SpaceKind::WeightedProjective:
      // diagonal actions preserve each eigenspace and act through a
      // connected group on its cohomology
      trivial();
      break;
    case SpaceKind::ProductProjective: {
      const auto& P = S.product();
      // a component is determined by (base factor of each block -> coords)
      auto key_of = [](const FixedComponent& c) {
        std::vector<std::pair<int, std::vector<int>>> k;
        for (const auto& b : c.blocks) k.push_back({*std::min_element(b.orbit.begin(), b.orbit.end()), b.coords});
        std::sort(k.begin(), k.end());
        return k;
      };
      std::vector<decltype(key_of(comps[0]))> keys;
      for (const auto& c : comps) keys.push_back(key_of(c));
      for (Element h : out.centralizer) {
        const auto& ph = P.permutation[static_cast<size_t>(h)];
        std::vector<int> perm(nc);
        std::vector<std::vector<long>> tr(nc);
        for (size_t i = 0; i < nc; ++i) {
          const auto& c = comps[i];
          // block j goes to the block whose orbit contains pi(h)(base_j)
          std::vector<int> sigma(c.blocks.size());
          std::vector<std::pair<int, std::vector<int>>> img;
          for (size_t j = 0; j < c.blocks.size(); ++j) {
            const int target = ph[static_cast<size_t>(c.blocks[j].orbit[0])];
            for (size_t t = 0; t < c.blocks.size(); ++t) {
              const auto& orb = c.blocks[t].orbit;
              if (std::find(orb.begin(), orb.end(), target) != orb.end()) {
                sigma[j] = static_cast<int>(t);
                img.push_back({*std::min_element(orb.begin(), orb.end()), c.blocks[j].coords});
              }
            }
          }
          std::sort(img.begin(), img.end());
          const auto it = std::find(keys.begin(), keys.end(), img);
          if (it == keys.end())
            throw Error("InternalError", "centralizer image component not found", ErrorKind::Internal);
          perm[i] = static_cast<int>(it - keys.begin());
          if (perm[i] == static_cast<int>(i)) {
            std::vector<int> dims;
            for (const auto& b : c.blocks) dims.push_back(b.dimension());
            tr[i] = kunneth_traces(dims, sigma);
          } else {
            tr[i].assign(c.betti.size(), 0);
          }
        }
        out.permutation.push_back(std::move(perm));
        out.traces.push_back(std::move(tr));
      }
      break;
    }
    case SpaceKind::Custom: {
      const auto& cls = S.custom().classes[static_cast<size_t>(G.class_index(g))];
      if (cls.action.empty()) {
        trivial();
        break;
      }
      const Element x = G.conjugator(cls.element, g);  // x b x^-1 = g
      for (Element h : out.centralizer) {
        const Element hb = G.mul(G.mul(G.inv(x), h), x);
        const auto it = std::find_if(cls.action.begin(), cls.action.end(),
                                     [&](const CustomAction& a) { return a.h == hb; });
        out.permutation.push_back(it->permutation);
        out.traces.push_back(it->traces);
      }
      break;
    }
  }
  return out;
}

std::vector<Element> ineffective_kernel(const GSpace& S) {
  const auto& G = S.group();
  std::vector<Element> ker;
  const int E = G.exponent();
  for (int g = 0; g < G.order(); ++g) {
    bool trivial = true;
    switch (S.kind()) {
      case SpaceKind::LinearProjective: {
        const auto& ch = S.linear().characters;
        for (const auto& c : ch) trivial = trivial && c(g) == ch[0](g);
        break;
      }
      case SpaceKind::ProductProjective: {
        const auto& P = S.product();
        const auto& p = P.permutation[static_cast<size_t>(g)];
        for (size_t i = 0; i < p.size(); ++i) {
          trivial = trivial && p[i] == static_cast<int>(i);
          for (const auto& c : P.characters[i])
            trivial = trivial && mod(c(g) - P.characters[i][0](g), E) == 0;
        }
        break;
      }
      case SpaceKind::WeightedProjective:
      case SpaceKind::Custom:
        trivial = g == G.identity();
        break;
    }
    if (trivial) ker.push_back(g);
  }
  return ker;
}

Freeness is_generically_free(const GSpace& S) {
  if (S.kind() == SpaceKind::Custom)
    return Freeness{S.custom().generically_free.value_or(false), std::nullopt};
  // a finite group acting effectively on an irreducible variety has trivial
  // generic stabilizer: the fixed loci of non-identity elements are proper
  const auto ker = ineffective_kernel(S);
  Freeness f;
  f.generically_free = ker.size() == 1;
  if (!f.generically_free) f.witness = ker[1];
  return f;
}

std::vector<long> total_betti(const GSpace& S) {
  switch (S.kind()) {
    case SpaceKind::LinearProjective:
    case SpaceKind::WeightedProjective:
      return projective_betti(S.dimension());
    case SpaceKind::ProductProjective:
      return kunneth_traces(S.product().factor_dims, {});
    case SpaceKind::Custom: {
      std::vector<long> b(static_cast<size_t>(2 * S.dimension() + 1), 0);
      for (const auto& c : fixed_locus(S, S.group().identity()))
        for (size_t k = 0; k < c.betti.size(); ++k) b[k] += c.betti[k];
      return b;
    }
  }
  return {};
}

long lefschetz_number(const GSpace& S, Element g) {
  require_element(S, g);
  std::vector<long> tr;
  switch (S.kind()) {
    case SpaceKind::LinearProjective:
    case SpaceKind::WeightedProjective:
      tr = total_betti(S);
      break;
    case SpaceKind::ProductProjective:
      tr = kunneth_traces(S.product().factor_dims, S.product().permutation[static_cast<size_t>(g)]);
      break;
    case SpaceKind::Custom: {
      const auto act = cohomology_action(S, S.group().identity());
      const auto it = std::find(act.centralizer.begin(), act.centralizer.end(), g);
      const auto& t = act.traces[static_cast<size_t>(it - act.centralizer.begin())];
      tr.assign(static_cast<size_t>(2 * S.dimension() + 1), 0);
      for (size_t i = 0; i < t.size(); ++i)
        if (act.permutation[static_cast<size_t>(it - act.centralizer.begin())][i] == static_cast<int>(i))
          for (size_t k = 0; k < t[i].size(); ++k) tr[k] += t[i][k];
      break;
    }
  }
  long L = 0;
  for (size_t k = 0; k < tr.size(); ++k) L += (k % 2 ? -1 : 1) * tr[k];
  return L;
}

std::vector<TangentData> fixed_point_tangents(const GSpace& S) {
  const auto& G = S.group();
  std::vector<TangentData> out;
  switch (S.kind()) {
    case SpaceKind::LinearProjective: {
      const auto& chars = S.linear().characters;
      const int n = static_cast<int>(chars.size());
      for (const auto& J : partition_by(n, [&](int i) { return chars[static_cast<size_t>(i)].values; })) {
        TangentData t;
        t.component.dimension = static_cast<int>(J.size()) - 1;
        t.component.betti = projective_betti(t.component.dimension);
        t.component.label = set_label(J);
        t.component.ambient = "P^" + std::to_string(t.component.dimension) + " on coords " + set_label(J);
        t.component.blocks = {Block{{}, J}};
        const auto& base = chars[static_cast<size_t>(J[0])];
        for (int j = 0; j < n; ++j)
          if (j != J[0]) t.characters.push_back(add(G, chars[static_cast<size_t>(j)], negate(G, base)));
        out.push_back(std::move(t));
      }
      break;
    }
    case SpaceKind::ProductProjective: {
      const auto& P = S.product();
      const auto all = character_group(G);
      std::vector<Element> gens(static_cast<size_t>(G.order()));
      std::iota(gens.begin(), gens.end(), 0);
      const auto comps = common_fixed_locus(S, gens).value();
      for (const auto& comp : comps) {
        TangentData t;
        t.component = comp;
        for (const auto& blk : comp.blocks) {
          const int b = blk.orbit[0];
          std::vector<Element> stab;
          for (int h = 0; h < G.order(); ++h)
            if (P.permutation[static_cast<size_t>(h)][static_cast<size_t>(b)] == b) stab.push_back(h);
          const auto& ch = P.characters[static_cast<size_t>(b)];
          const auto& base = ch[static_cast<size_t>(blk.coords[0])];
          // the tangent space along an orbit is induced from the stabilizer:
          // every extension of each stabilizer character occurs once
          for (size_t c = 0; c < ch.size(); ++c) {
            if (static_cast<int>(c) == blk.coords[0]) continue;
            const Character psi = add(G, ch[c], negate(G, base));
            for (const auto& theta : all) {
              bool extends = true;
              for (Element h : stab) extends = extends && theta(h) == psi(h);
              if (extends) t.characters.push_back(theta);
            }
          }
        }
        out.push_back(std::move(t));
      }
      break;
    }
    case SpaceKind::WeightedProjective: {
      TangentData t;
      t.component = fixed_locus(S, 0).front();
      t.characters.assign(static_cast<size_t>(S.dimension()), trivial_character(G));
      out.push_back(std::move(t));
      break;
    }
    case SpaceKind::Custom:
      throw Error("UnsupportedForCustom", "tangent characters are not available for custom spaces");
  }
  std::sort(out.begin(), out.end(),
            [](const TangentData& a, const TangentData& b) { return a.component.label < b.component.label; });
  return out;
}

}  // namespace orbi
