#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbi/gspace.hpp"
#include "orbi/lattice.hpp"

namespace orbi {

/// A d-symbol: a sorted multiset of characters, each stored as its index in
/// character_group order (character k has exponent tuple G.tuple(k)).
struct Symbol {
  std::vector<Element> entries;
  bool admissible = false;

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.entries == b.entries; }
  friend bool operator<(const Symbol& a, const Symbol& b) { return a.entries < b.entries; }
};

/// Finite integer combination of symbols; zero coefficients are dropped.
struct BurnsideClass {
  std::map<Symbol, long> terms;

  void add(const Symbol& s, long c);
  BurnsideClass& operator+=(const BurnsideClass& o);
  BurnsideClass& operator-=(const BurnsideClass& o);
  bool empty() const { return terms.empty(); }
  friend bool operator==(const BurnsideClass&, const BurnsideClass&) = default;
};

/// Sorts the entries and recomputes admissibility; WrongArity unless the
/// entry count is d.
Symbol symbol_normalize(const FiniteGroup& G, std::vector<Element> entries, int d);

/// Whether the entries generate the character group.
bool symbol_admissible(const FiniteGroup& G, std::span<const Element> entries);

struct Relation {
  Symbol left;
  BurnsideClass right;
};

/// s = sum over first occurrences i <= k of
/// [a1 - ai, ..., ai, ..., ak - ai, a(k+1), ..., ad], applied to the stored
/// entry order. InadmissibleSymbol, KOutOfRange.
Relation blowup_relation(const FiniteGroup& G, const Symbol& s, int k);

/// Same, for an explicit entry order.
Relation blowup_relation_ordered(const FiniteGroup& G, std::span<const Element> entries, int k);

/// Every admissible symbol of length d, ascending. UniverseTooLarge when
/// |G|^d exceeds 10^7.
std::vector<Symbol> symbol_universe(const FiniteGroup& G, int d);

/// Relations over a symbol universe as sparse rows (column, coefficient).
using SparseRow = std::vector<std::pair<int, long>>;

class RelationLattice {
 public:
  RelationLattice(const FiniteGroup& G, int d);

  const FiniteGroup& group() const { return group_; }
  int dimension() const { return d_; }
  const std::vector<Symbol>& universe() const { return universe_; }
  const std::vector<SparseRow>& relations() const { return rows_; }
  const HermiteLattice& lattice() const { return lattice_; }
  /// -1 when absent
  int index_of(const Symbol& s) const;

  /// Coordinates over the universe; SymbolOutsideUniverse.
  IntVector coordinates(const BurnsideClass& c) const;
  bool is_zero(const BurnsideClass& c) const;
  QuotientStructure structure() const { return quotient_structure(lattice_); }

 private:
  FiniteGroup group_;
  int d_;
  std::vector<Symbol> universe_;
  std::map<std::vector<Element>, int> index_;
  std::vector<SparseRow> rows_;
  HermiteLattice lattice_;
};

inline RelationLattice build_relation_lattice(const FiniteGroup& G, int d) { return RelationLattice(G, d); }

/// Sum of the tangent-character symbols over the components of Y^G.
/// NotGenericallyFree, InadmissibleTangentData, DimensionTooSmall (d < 2),
/// NonAbelianGroup, UnsupportedForCustom.
BurnsideClass beta_class(const GSpace& S);

bool classes_equal(const BurnsideClass& a, const BurnsideClass& b, const RelationLattice& L);

std::string to_string(const FiniteGroup& G, const Symbol& s);
/// One "[a,b] coefficient" line per term, symbol order.
std::string to_string(const FiniteGroup& G, const BurnsideClass& c);

}  // namespace orbi
