#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbi/gspace.hpp"

namespace orbi {

/// A tuple of sector-group elements up to simultaneous conjugation, stored
/// as the lexicographically smallest tuple of its class.
struct SectorIndex {
  std::vector<Element> elements;
  friend bool operator==(const SectorIndex&, const SectorIndex&) = default;
  friend auto operator<=>(const SectorIndex&, const SectorIndex&) = default;
};

/// One twisted sector X_(g); the untwisted sector has g = identity.
struct Sector {
  SectorIndex index;
  Element g = 0;
  std::string label;
  std::vector<FixedComponent> components;
  std::vector<Rational> ages;  // parallel to components
  CentralizerActionData action;
};

/// Canonical representative of the simultaneous conjugacy class of a tuple.
SectorIndex canonical_index(const GSpace& S, std::span<const Element> tuple);

/// One sector per conjugacy class of the sector group, ordered by class
/// representative.
std::vector<Sector> twisted_sectors(const GSpace& S);

/// Sum of the normal weights; throws ComponentNotFixed when `component` is
/// not a component of Y^g.
Rational age(const GSpace& S, Element g, const FixedComponent& component);

struct MultiSector {
  SectorIndex index;
  bool commuting = true;
  /// components of the common fixed locus; nullopt when the space does not
  /// determine them (Custom data)
  std::optional<std::vector<FixedComponent>> components;
};

/// Classes of k-tuples, k <= 3 (UnsupportedK otherwise). Commuting tuples
/// carry their common fixed locus; for non-abelian groups the
/// non-commuting classes are listed with no components. With
/// `product_one`, only tuples with g1 g2 ... gk = 1 are kept.
std::vector<MultiSector> multi_sectors(const GSpace& S, int k, bool product_one = false);

/// Projection to the given positions (1-based); PositionOutOfRange.
SectorIndex evaluation_map(const GSpace& S, const SectorIndex& index,
                           std::span<const int> positions);

/// Componentwise inverse.
SectorIndex inversion_map(const GSpace& S, const SectorIndex& index);

}  // namespace orbi
