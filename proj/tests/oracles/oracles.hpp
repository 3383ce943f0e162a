#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "orbi/cocycle.hpp"
#include "orbi/gspace.hpp"
#include "orbi/lattice.hpp"

// Reference computations written without the library's algorithms. Slow on
// purpose; they only see the raw group table and the declared space data.
namespace orbi::oracle {

/// Conjugacy classes by brute-force orbits, each sorted, ordered by minimum.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& G);
std::vector<Element> centralizer(const FiniteGroup& G, Element g);
long commuting_pairs(const FiniteGroup& G);

/// Smith form by repeated min-pivot elimination on a dense matrix.
QuotientStructure dense_snf(const std::vector<std::vector<long>>& rows, std::size_t columns);

/// Orbifold Euler number from the geometry of the action: for a diagonal
/// action on P^d every common fixed locus has Euler number d+1; for a
/// product, the orbits of <g,h> on factors each contribute n+1; for P(w),
/// each root of unity contributes the number of weights it fixes.
std::optional<long> orbifold_euler(const GSpace& S);

/// All alternating bicharacters G x G -> Z/|G| of an abelian presentation,
/// as full tables.
std::set<std::vector<int>> alternating_bicharacters(const FiniteGroup& G);

/// Normalized 2-cocycles G x G -> Z/|G| for |G| = 4, enumerated
/// exhaustively; returns the distinct antisymmetrizations (one per class
/// modulo symmetric cocycles).
std::set<std::vector<int>> cocycle_classes_order4(const FiniteGroup& G);

/// Admissible sorted d-multisets of character indices, by enumeration and a
/// breadth-first subgroup closure.
std::vector<std::vector<int>> symbol_universe(const FiniteGroup& G, int d);

/// Relation rows over `universe`, generated from every ordering of every
/// symbol and every k.
std::vector<std::vector<long>> relation_matrix(const FiniteGroup& G, int d,
                                               const std::vector<std::vector<int>>& universe);

/// (dimension, age) of each component of the fixed locus of g on a linear
/// projective space, from the eigenvalues directly. Ages as (num, den).
std::multiset<std::pair<int, std::pair<long, long>>> linear_fixed_ages(const GSpace& S, Element g);

/// Twisted Chen-Ruan total by floating-point character averaging.
long twisted_total_numeric(const GSpace& S, const Cocycle& alpha);

}  // namespace orbi::oracle
