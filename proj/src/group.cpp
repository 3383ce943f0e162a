#include "orbi/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbi/error.hpp"
#include "orbi/rational.hpp"

namespace orbi {

struct FiniteGroup::Impl {
  int n = 0;
  Element identity = 0;
  bool abelian = false;
  bool has_factors = false;
  std::vector<int> factors;
  std::vector<int> strides;
  std::vector<int> table;  // n*n
  std::vector<Element> inverse;
  std::vector<int> orders;
  int exponent = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;
};

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FiniteGroup FiniteGroup::abelian(std::vector<int> factors) {
  auto impl = std::make_shared<Impl>();
  long n = 1;
  for (int f : factors) {
    if (f < 1) throw Error("EmptyGroup", "cyclic factor must be >= 1");
    n *= f;
    if (n > 100000) throw Error("GroupTooLarge", "group order exceeds 100000");
  }
  impl->n = static_cast<int>(n);
  impl->factors = std::move(factors);
  impl->has_factors = true;
  impl->abelian = true;
  const size_t r = impl->factors.size();
  impl->strides.assign(r, 1);
  for (size_t i = r; i-- > 1;)
    impl->strides[i - 1] = impl->strides[i] * impl->factors[i];

  auto& t = impl->table;
  t.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int idx = 0;
      for (size_t i = 0; i < r; ++i) {
        const int ca = (a / impl->strides[i]) % impl->factors[i];
        const int cb = (b / impl->strides[i]) % impl->factors[i];
        idx += ((ca + cb) % impl->factors[i]) * impl->strides[i];
      }
      t[static_cast<size_t>(a) * n + b] = idx;
    }
  }
  impl->identity = 0;
  finish(*impl);
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    Element identity) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("EmptyGroup", "multiplication table is empty");
  if (n > 2048) throw Error("GroupTooLarge", "table groups are limited to order 2048");
  if (identity < 0 || identity >= n)
    throw Error("NonGroupTable", "identity index out of range");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->identity = identity;
  impl->table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error("NonGroupTable", "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        throw Error("NonGroupTable", "entry (" + std::to_string(a) + "," +
                                         std::to_string(b) + ") out of range");
      impl->table[static_cast<size_t>(a) * n + b] = v;
    }
  }
  const auto& t = impl->table;
  auto m = [&](int a, int b) { return t[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    if (m(identity, a) != a || m(a, identity) != a)
      throw Error("NonGroupTable",
                  "identity is not neutral on element " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = m(a, b) == identity && m(b, a) == identity;
    if (!found)
      throw Error("NonGroupTable",
                  "element " + std::to_string(a) + " has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = m(a, b);
      for (int c = 0; c < n; ++c)
        if (m(ab, c) != m(a, m(b, c)))
          throw Error("NonGroupTable", "associativity fails at (" +
                                           std::to_string(a) + "," +
                                           std::to_string(b) + "," +
                                           std::to_string(c) + ")");
    }
  impl->abelian = true;
  for (int a = 0; a < n && impl->abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (m(a, b) != m(b, a)) {
        impl->abelian = false;
        break;
      }
  finish(*impl);
  return FiniteGroup(std::move(impl));
}

void FiniteGroup::finish(Impl& g) {
  const int n = g.n;
  auto m = [&](int a, int b) { return g.table[static_cast<size_t>(a) * n + b]; };
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m(a, b) == g.identity) {
        g.inverse[a] = b;
        break;
      }
  g.orders.assign(n, 1);
  g.exponent = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != g.identity) {
      x = m(x, a);
      ++k;
    }
    g.orders[a] = k;
    g.exponent = std::lcm(g.exponent, k);
  }
  // classes in order of their minimal element
  g.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (g.class_of[a] >= 0) continue;
    ConjugacyClass cls;
    cls.representative = a;
    const int id = static_cast<int>(g.classes.size());
    for (int x = 0; x < n; ++x) {
      const int c = m(m(x, a), g.inverse[x]);
      if (g.class_of[c] < 0) {
        g.class_of[c] = id;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    g.classes.push_back(std::move(cls));
  }
}

int FiniteGroup::order() const { return impl_->n; }
bool FiniteGroup::is_abelian() const { return impl_->abelian; }
bool FiniteGroup::has_factors() const { return impl_->has_factors; }
const std::vector<int>& FiniteGroup::factors() const { return impl_->factors; }
Element FiniteGroup::identity() const { return impl_->identity; }
const std::vector<int>& FiniteGroup::table() const { return impl_->table; }

Element FiniteGroup::mul(Element a, Element b) const {
  return impl_->table[static_cast<size_t>(a) * impl_->n + b];
}
Element FiniteGroup::inv(Element a) const { return impl_->inverse[a]; }
int FiniteGroup::element_order(Element a) const { return impl_->orders[a]; }
int FiniteGroup::exponent() const { return impl_->exponent; }

Element FiniteGroup::pow(Element a, long k) const {
  const long m = element_order(a);
  k = mod(k, m);
  Element x = identity();
  for (long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::vector<int> FiniteGroup::tuple(Element a) const {
  std::vector<int> c(impl_->factors.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = (a / impl_->strides[i]) % impl_->factors[i];
  return c;
}

Element FiniteGroup::from_tuple(std::span<const int> coords) const {
  if (!has_factors() || coords.size() != impl_->factors.size())
    throw Error("ElementNotInGroup", "tuple does not match the group presentation");
  int idx = 0;
  for (size_t i = 0; i < coords.size(); ++i)
    idx += static_cast<int>(mod(coords[i], impl_->factors[i])) * impl_->strides[i];
  return idx;
}

std::string FiniteGroup::element_label(Element a) const {
  if (!has_factors()) return "g" + std::to_string(a);
  const auto c = tuple(a);
  if (c.size() == 1) return std::to_string(c[0]);
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

const std::vector<ConjugacyClass>& FiniteGroup::conjugacy_classes() const {
  return impl_->classes;
}
int FiniteGroup::class_index(Element a) const { return impl_->class_of[a]; }
Element FiniteGroup::class_representative(Element a) const {
  return impl_->classes[impl_->class_of[a]].representative;
}

Element FiniteGroup::conjugator(Element a, Element b) const {
  for (int x = 0; x < order(); ++x)
    if (mul(mul(x, a), inv(x)) == b) return x;
  return -1;
}

std::vector<Element> FiniteGroup::centralizer(Element g) const {
  if (!contains(g))
    throw Error("ElementNotInGroup", "element " + std::to_string(g) + " not in group");
  std::vector<Element> c;
  for (int h = 0; h < order(); ++h)
    if (commute(g, h)) c.push_back(h);
  return c;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  if (impl_ == other.impl_) return true;
  if (has_factors() != other.has_factors()) return false;
  if (has_factors()) return factors() == other.factors();
  return identity() == other.identity() && table() == other.table();
}

std::string FiniteGroup::name() const {
  if (!has_factors()) return "table(" + std::to_string(order()) + ")";
  if (factors().empty()) return "C1";
  std::string s;
  for (size_t i = 0; i < factors().size(); ++i)
    s += (i ? "x" : "") + std::string("C") + std::to_string(factors()[i]);
  return s;
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

Character character_from_exponents(const FiniteGroup& G,
                                   std::span<const int> exponents) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "exponent-tuple characters need an abelian presentation");
  const auto& f = G.factors();
  if (exponents.size() != f.size())
    throw Error("BadCharacter", "character needs " + std::to_string(f.size()) + " exponents");
  const int E = G.exponent();
  Character chi;
  chi.exponents.resize(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    chi.exponents[i] = static_cast<int>(mod(exponents[i], f[i]));
  chi.values.resize(static_cast<size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    const auto c = G.tuple(g);
    long v = 0;
    for (size_t i = 0; i < f.size(); ++i)
      v += static_cast<long>(chi.exponents[i]) * c[i] * (E / f[i]);
    chi.values[g] = static_cast<int>(mod(v, E));
  }
  return chi;
}

Character character_from_values(const FiniteGroup& G, std::vector<int> values) {
  const int E = G.exponent();
  if (static_cast<int>(values.size()) != G.order())
    throw Error("BadCharacter", "character table needs one value per element");
  for (auto& v : values) v = static_cast<int>(mod(v, E));
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (values[G.mul(a, b)] != (values[a] + values[b]) % E)
        throw Error("BadCharacter", "character values are not a homomorphism at (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
  Character chi;
  chi.values = std::move(values);
  if (G.has_factors()) {
    // recover exponents from the unit vectors
    const auto& f = G.factors();
    chi.exponents.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      std::vector<int> e(f.size(), 0);
      e[i] = 1;
      chi.exponents[i] = f[i] == 1 ? 0 : chi.values[G.from_tuple(e)] / (E / f[i]);
    }
  }
  return chi;
}

Character trivial_character(const FiniteGroup& G) {
  Character chi;
  chi.values.assign(static_cast<size_t>(G.order()), 0);
  if (G.has_factors()) chi.exponents.assign(G.factors().size(), 0);
  return chi;
}

Character add(const FiniteGroup& G, const Character& a, const Character& b) {
  const int E = G.exponent();
  Character c;
  c.values.resize(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i)
    c.values[i] = (a.values[i] + b.values[i]) % E;
  if (G.has_factors()) {
    c.exponents.resize(a.exponents.size());
    for (size_t i = 0; i < a.exponents.size(); ++i)
      c.exponents[i] = (a.exponents[i] + b.exponents[i]) % G.factors()[i];
  }
  return c;
}

Character negate(const FiniteGroup& G, const Character& a) {
  const int E = G.exponent();
  Character c;
  c.values.resize(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i) c.values[i] = (E - a.values[i]) % E;
  if (G.has_factors()) {
    c.exponents.resize(a.exponents.size());
    for (size_t i = 0; i < a.exponents.size(); ++i)
      c.exponents[i] = (G.factors()[i] - a.exponents[i]) % G.factors()[i];
  }
  return c;
}

std::vector<Character> character_group(const FiniteGroup& G) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "character group needs an abelian presentation");
  std::vector<Character> chars;
  chars.reserve(static_cast<size_t>(G.order()));
  for (int k = 0; k < G.order(); ++k) {
    const auto e = G.tuple(k);
    chars.push_back(character_from_exponents(G, e));
  }
  return chars;
}

int character_index(const FiniteGroup& G, const Character& chi) {
  return G.from_tuple(chi.exponents);
}

std::vector<int> schur_multiplier(const FiniteGroup& G) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "Schur multiplier is only available for abelian presentations");
  const auto& f = G.factors();
  std::vector<int> out;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j) {
      const int g = std::gcd(f[i], f[j]);
      if (g > 1) out.push_back(g);
    }
  return out;
}

std::vector<Element> generated_subgroup(const FiniteGroup& G,
                                        std::span<const Element> gens) {
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  std::vector<Element> todo{G.identity()};
  in[G.identity()] = 1;
  while (!todo.empty()) {
    const Element x = todo.back();
    todo.pop_back();
    for (Element s : gens) {
      const Element y = G.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        todo.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (int g = 0; g < G.order(); ++g)
    if (in[g]) out.push_back(g);
  return out;
}

std::vector<std::vector<Element>> automorphisms(const FiniteGroup& G) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "automorphisms are only enumerated for abelian presentations");
  const auto& f = G.factors();
  const size_t r = f.size();
  const int n = G.order();
  // candidate images of each unit vector: elements whose order divides n_i
  std::vector<std::vector<Element>> cand(r);
  long combos = 1;
  for (size_t i = 0; i < r; ++i) {
    for (int g = 0; g < n; ++g)
      if (f[i] % G.element_order(g) == 0) cand[i].push_back(g);
    combos *= static_cast<long>(cand[i].size());
    if (combos > 2000000)
      throw Error("GroupTooLarge", "automorphism enumeration too large");
  }
  std::vector<std::vector<Element>> out;
  std::vector<size_t> pick(r, 0);
  for (long c = 0; c < combos; ++c) {
    long rest = c;
    for (size_t i = r; i-- > 0;) {
      pick[i] = static_cast<size_t>(rest % static_cast<long>(cand[i].size()));
      rest /= static_cast<long>(cand[i].size());
    }
    std::vector<Element> phi(static_cast<size_t>(n));
    std::vector<char> hit(static_cast<size_t>(n), 0);
    bool bij = true;
    for (int g = 0; g < n && bij; ++g) {
      const auto t = G.tuple(g);
      Element img = G.identity();
      for (size_t i = 0; i < r; ++i) img = G.mul(img, G.pow(cand[i][pick[i]], t[i]));
      phi[g] = img;
      if (hit[img]) bij = false;
      hit[img] = 1;
    }
    if (bij) out.push_back(std::move(phi));
  }
  // identity map first, the rest in enumeration order
  auto is_id = [](const std::vector<Element>& p) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<Element>(i)) return false;
    return true;
  };
  std::stable_partition(out.begin(), out.end(), is_id);
  return out;
}

}  // namespace orbi
