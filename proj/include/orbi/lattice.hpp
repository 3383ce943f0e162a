#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace orbi {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Sublattice of Z^n kept in row echelon form with positive pivots. Rows are
/// inserted one at a time, so membership can be tested at any point.
class HermiteLattice {
 public:
  explicit HermiteLattice(std::size_t columns) : n_(columns) {}

  std::size_t columns() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a generator. Returns false when it already lay in the lattice.
  bool add(IntVector v);
  bool contains(IntVector v) const;

  /// Hermite normal form: pivots positive, entries above a pivot reduced
  /// into [0, pivot). Rows ordered by pivot column.
  std::vector<IntVector> basis() const;

 private:
  std::size_t n_;
  std::map<std::size_t, IntVector> rows_;  // pivot column -> row
};

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix.
std::vector<BigInt> smith_invariants(std::vector<IntVector> rows, std::size_t columns);

/// Z^n / L = Z^free_rank + sum Z/t_i, t_i > 1.
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  /// "Z^2 ⊕ Z/2", "Z", "0"
  std::string to_string() const;
  friend bool operator==(const QuotientStructure&, const QuotientStructure&) = default;
};

QuotientStructure quotient_structure(const HermiteLattice& L);

}  // namespace orbi
