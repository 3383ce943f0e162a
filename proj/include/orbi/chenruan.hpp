#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbi/cocycle.hpp"
#include "orbi/gspace.hpp"

namespace orbi {

/// Rationally graded dimension vector; zero entries are never stored.
struct GradedDims {
  std::map<Rational, long> dims;

  void add(const Rational& degree, long n);
  long total() const;
  long at(const Rational& degree) const;
  GradedDims& operator+=(const GradedDims& other);
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
  friend bool operator<(const GradedDims& a, const GradedDims& b) { return a.dims < b.dims; }
};

/// Contribution of one sector to the Chen-Ruan dimensions.
struct SectorContribution {
  Element g = 0;
  std::string label;
  GradedDims dims;
  /// sum of (-1)^k dim over unshifted degrees k
  long signed_euler = 0;
};

/// Per-sector invariant dimensions, in sector order. `alpha` may be null
/// for the untwisted theory.
std::vector<SectorContribution> cr_contributions(const GSpace& S, const Cocycle* alpha = nullptr);

GradedDims cr_dimensions(const GSpace& S);

/// Discrete-torsion twisted dimensions; NonAbelianTwist for non-abelian
/// groups, NonIntegerDimension (internal) if an average is not a
/// nonnegative integer.
GradedDims cr_twisted_dimensions(const GSpace& S, const Cocycle& alpha);

/// (1/|G|) sum over commuting pairs of chi(Y^g cap Y^h). Weighted spaces use
/// the torus-fixed-point count sum(w_i). Custom spaces need pair data for
/// every commuting pair (UnsupportedForCustom otherwise).
long orbifold_euler(const GSpace& S);

/// Sum of (-1)^k dim over all sectors, k the unshifted degree. Equals the
/// total for even cohomology.
long signed_cr_euler(const GSpace& S);

/// h -> gamma(g, h) on C(g), one line per sector (sector order).
struct TwistLine {
  Element g = 0;
  std::vector<Element> centralizer;
  std::vector<int> values;  // exponents mod modulus, parallel to centralizer
};

struct TwistLineData {
  int modulus = 1;
  std::vector<TwistLine> lines;

  /// Character of the sector of an arbitrary element g at h in C(g),
  /// transported from the class representative.
  int value(const FiniteGroup& G, Element g, Element h) const;
};

TwistLineData torsion_line_system(const GSpace& S, const Cocycle& alpha);

struct LocalSystemCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Conditions (a) trivial on the untwisted sector, (b) compatible with
/// inversion, (c) trivial product over commuting triples with g1 g2 g3 = 1.
LocalSystemCheck check_inner_local_system(const GSpace& S, const TwistLineData& L);

/// "1 + 2 q^{3/2} + 1 q^{3}", degrees ascending; "0" when empty.
std::string poincare_string(const GradedDims& D);

}  // namespace orbi
