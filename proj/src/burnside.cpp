#include "orbi/burnside.hpp"

#include <algorithm>
#include <sstream>

#include "orbi/error.hpp"
#include "orbi/kernels.hpp"

namespace orbi {

namespace {

void require_abelian(const FiniteGroup& G) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "Burnside symbols need an abelian presentation");
}

}  // namespace

void BurnsideClass::add(const Symbol& s, long c) {
  if (c == 0) return;
  auto& v = terms[s];
  v += c;
  if (v == 0) terms.erase(s);
}

BurnsideClass& BurnsideClass::operator+=(const BurnsideClass& o) {
  for (const auto& [s, c] : o.terms) add(s, c);
  return *this;
}

BurnsideClass& BurnsideClass::operator-=(const BurnsideClass& o) {
  for (const auto& [s, c] : o.terms) add(s, -c);
  return *this;
}

bool symbol_admissible(const FiniteGroup& G, std::span<const Element> entries) {
  return static_cast<int>(generated_subgroup(G, entries).size()) == G.order();
}

Symbol symbol_normalize(const FiniteGroup& G, std::vector<Element> entries, int d) {
  require_abelian(G);
  if (static_cast<int>(entries.size()) != d)
    throw Error("WrongArity", "symbol has " + std::to_string(entries.size()) + " entries, expected " +
                                  std::to_string(d));
  for (Element e : entries)
    if (!G.contains(e)) throw Error("BadCharacter", "character index " + std::to_string(e) + " out of range");
  std::sort(entries.begin(), entries.end());
  Symbol s;
  s.admissible = symbol_admissible(G, entries);
  s.entries = std::move(entries);
  return s;
}

Relation blowup_relation_ordered(const FiniteGroup& G, std::span<const Element> a, int k) {
  const int d = static_cast<int>(a.size());
  if (k < 2 || k > d)
    throw Error("KOutOfRange", "k = " + std::to_string(k) + " outside 2.." + std::to_string(d));
  Relation r;
  r.left = symbol_normalize(G, std::vector<Element>(a.begin(), a.end()), d);
  if (!r.left.admissible) throw Error("InadmissibleSymbol", "symbol " + to_string(G, r.left) + " is not admissible");
  for (int i = 0; i < k; ++i) {
    if (std::find(a.begin(), a.begin() + i, a[static_cast<size_t>(i)]) != a.begin() + i) continue;
    const Element ai = a[static_cast<size_t>(i)];
    std::vector<Element> t(a.begin(), a.end());
    for (int j = 0; j < k; ++j)
      if (j != i) t[static_cast<size_t>(j)] = G.mul(a[static_cast<size_t>(j)], G.inv(ai));
    r.right.add(symbol_normalize(G, std::move(t), d), 1);
  }
  return r;
}

Relation blowup_relation(const FiniteGroup& G, const Symbol& s, int k) {
  return blowup_relation_ordered(G, s.entries, k);
}

std::vector<Symbol> symbol_universe(const FiniteGroup& G, int d) {
  require_abelian(G);
  if (d < 2) throw Error("DimensionTooSmall", "Burnside symbols need d >= 2");
  double size = 1;
  for (int i = 0; i < d; ++i) size *= G.order();
  if (size > 1e7)
    throw Error("UniverseTooLarge", "|G|^d = " + std::to_string(static_cast<long long>(size)) + " exceeds 10^7");
  std::vector<Symbol> out;
  std::vector<Element> t(static_cast<size_t>(d), 0);
  const int n = G.order();
  while (true) {
    if (symbol_admissible(G, t)) out.push_back(Symbol{t, true});
    // next nondecreasing tuple
    int p = d - 1;
    while (p >= 0 && t[static_cast<size_t>(p)] == n - 1) --p;
    if (p < 0) break;
    const Element v = t[static_cast<size_t>(p)] + 1;
    for (int i = p; i < d; ++i) t[static_cast<size_t>(i)] = v;
  }
  return out;
}

RelationLattice::RelationLattice(const FiniteGroup& G, int d)
    : group_(G), d_(d), universe_(symbol_universe(G, d)), lattice_(universe_.size()) {
  for (size_t i = 0; i < universe_.size(); ++i) index_[universe_[i].entries] = static_cast<int>(i);
  rows_ = kernels::relation_rows(G, universe_, d, Exec::Parallel);
  for (const auto& r : rows_) {
    IntVector v(universe_.size());
    for (const auto& [j, c] : r) v[static_cast<size_t>(j)] = c;
    lattice_.add(std::move(v));
  }
}

int RelationLattice::index_of(const Symbol& s) const {
  auto it = index_.find(s.entries);
  return it == index_.end() ? -1 : it->second;
}

IntVector RelationLattice::coordinates(const BurnsideClass& c) const {
  IntVector v(universe_.size());
  for (const auto& [s, k] : c.terms) {
    const int i = index_of(s);
    if (i < 0) throw Error("SymbolOutsideUniverse", "symbol " + to_string(group_, s) + " is not in the universe");
    v[static_cast<size_t>(i)] += k;
  }
  return v;
}

bool RelationLattice::is_zero(const BurnsideClass& c) const { return lattice_.contains(coordinates(c)); }

bool classes_equal(const BurnsideClass& a, const BurnsideClass& b, const RelationLattice& L) {
  BurnsideClass diff = a;
  diff -= b;
  // both sides must live on the universe even when they cancel
  L.coordinates(a);
  L.coordinates(b);
  return L.is_zero(diff);
}

BurnsideClass beta_class(const GSpace& S) {
  if (S.kind() == SpaceKind::Custom)
    throw Error("UnsupportedForCustom", "β needs tangent characters, which custom data does not carry");
  const auto& G = S.group();
  require_abelian(G);
  if (S.dimension() < 2) throw Error("DimensionTooSmall", "Burnside classes need dimension >= 2");
  const auto free = is_generically_free(S);
  if (!free.generically_free)
    throw Error("NotGenericallyFree", "element " + G.element_label(free.witness.value_or(0)) + " acts trivially");
  BurnsideClass beta;
  for (const auto& t : fixed_point_tangents(S)) {
    std::vector<Element> entries;
    for (const auto& chi : t.characters) entries.push_back(character_index(G, chi));
    Symbol s = symbol_normalize(G, std::move(entries), S.dimension());
    if (!s.admissible)
      throw Error("InadmissibleTangentData", "tangent characters " + to_string(G, s) + " at " + t.component.label +
                                                 " do not generate the character group");
    beta.add(s, 1);
  }
  return beta;
}

std::string to_string(const FiniteGroup& G, const Symbol& s) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < s.entries.size(); ++i) os << (i ? "," : "") << G.element_label(s.entries[i]);
  os << ']';
  return os.str();
}

std::string to_string(const FiniteGroup& G, const BurnsideClass& c) {
  std::ostringstream os;
  for (const auto& [s, k] : c.terms) os << to_string(G, s) << ' ' << k << '\n';
  return os.str();
}

}  // namespace orbi
