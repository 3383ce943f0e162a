#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace orbi {

/// Group elements are indices 0..order-1 into the multiplication table.
using Element = int;

struct ConjugacyClass {
  Element representative;        // minimal index in the class
  std::vector<Element> members;  // ascending
};

/// An immutable finite group.
///
/// Two presentations are supported: a product of cyclic groups
/// Z/n1 x ... x Z/nr (elements are tuples, indexed in mixed radix with the
/// first factor most significant, so index 0 is the identity), or an explicit
/// multiplication table. Either way the full table, inverses, element orders,
/// conjugacy classes and centralizers are precomputed, so the object is cheap
/// to copy and safe to share between threads.
class FiniteGroup {
 public:
  /// Product of cyclic groups. An empty factor list gives the trivial group.
  static FiniteGroup abelian(std::vector<int> factors);

  /// Validated multiplication table; throws NonGroupTable naming the
  /// offending element or triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                Element identity);

  int order() const;
  bool is_abelian() const;
  /// True when the group was built from invariant factors.
  bool has_factors() const;
  const std::vector<int>& factors() const;
  Element identity() const;

  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, long k) const;
  int element_order(Element a) const;
  /// lcm of all element orders
  int exponent() const;
  bool contains(Element a) const { return a >= 0 && a < order(); }

  /// Coordinates of an element of an abelian presentation.
  std::vector<int> tuple(Element a) const;
  Element from_tuple(std::span<const int> coords) const;
  /// "(1,0)" for multi-factor presentations, "3" for cyclic ones, "g7" for
  /// table-presented groups.
  std::string element_label(Element a) const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  /// Index into conjugacy_classes().
  int class_index(Element a) const;
  Element class_representative(Element a) const;
  /// Some x with x a x^-1 == b, or -1 when a and b are not conjugate.
  Element conjugator(Element a, Element b) const;
  /// Elements commuting with g, ascending. Throws ElementNotInGroup.
  std::vector<Element> centralizer(Element g) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  /// Same presentation (factors, or identical table).
  bool same_as(const FiniteGroup& other) const;
  const std::vector<int>& table() const;

  /// Short human description, e.g. "C4", "C2xC4", "table(42)".
  std::string name() const;

 private:
  struct Impl;
  static void finish(Impl& g);
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// A homomorphism G -> Z/E, E = G.exponent(); the value at g stands for the
/// root of unity exp(2 pi i value/E). For abelian presentations `exponents`
/// holds (a1..ar) with value(c) = sum ai ci (E/ni) mod E.
struct Character {
  std::vector<int> values;
  std::vector<int> exponents;

  int operator()(Element g) const { return values[static_cast<size_t>(g)]; }
  bool is_trivial() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Character of an abelian presentation from its exponent tuple; throws
/// NonAbelianGroup or BadCharacter.
Character character_from_exponents(const FiniteGroup& G,
                                   std::span<const int> exponents);
/// Character from an explicit value table over all elements; verified to be a
/// homomorphism (BadCharacter otherwise).
Character character_from_values(const FiniteGroup& G, std::vector<int> values);
Character trivial_character(const FiniteGroup& G);
Character add(const FiniteGroup& G, const Character& a, const Character& b);
Character negate(const FiniteGroup& G, const Character& a);

/// All |G| characters of an abelian presentation, ordered like the elements
/// (character k has exponent tuple G.tuple(k)).
std::vector<Character> character_group(const FiniteGroup& G);
/// Index of a character of an abelian presentation in character_group order.
int character_index(const FiniteGroup& G, const Character& chi);

/// Invariant factors of H^2(G; C*) for G = Z/n1 x ... x Z/nr: the list of
/// gcd(ni, nj), i < j, with 1s dropped.
std::vector<int> schur_multiplier(const FiniteGroup& G);

/// Automorphisms of an abelian presentation as element permutations
/// (phi[g] is the image of g). Identity first.
std::vector<std::vector<Element>> automorphisms(const FiniteGroup& G);

/// Group element reachable from a list of generators, ascending.
std::vector<Element> generated_subgroup(const FiniteGroup& G,
                                        std::span<const Element> gens);

}  // namespace orbi
