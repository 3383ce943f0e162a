#include "orbi/inertia.hpp"

#include <algorithm>
#include <set>

#include "orbi/error.hpp"

namespace orbi {

SectorIndex canonical_index(const GSpace& S, std::span<const Element> tuple) {
  const auto& G = S.sector_group();
  for (Element g : tuple)
    if (!G.contains(g))
      throw Error("ElementNotInGroup", "element " + std::to_string(g) + " not in group");
  SectorIndex best{std::vector<Element>(tuple.begin(), tuple.end())};
  if (G.is_abelian()) return best;
  std::vector<Element> conj(tuple.size());
  for (Element x = 0; x < G.order(); ++x) {
    const Element xi = G.inv(x);
    for (size_t i = 0; i < tuple.size(); ++i) conj[i] = G.mul(G.mul(x, tuple[i]), xi);
    if (conj < best.elements) best.elements = conj;
  }
  return best;
}

Rational age(const GSpace& S, Element g, const FixedComponent& component) {
  for (const auto& c : fixed_locus(S, g))
    if (c.label == component.label && c.dimension == component.dimension &&
        c.normal_weights == component.normal_weights)
      return c.age();
  throw Error("ComponentNotFixed",
              "component " + component.label + " is not fixed by " + S.sector_label(g));
}

std::vector<Sector> twisted_sectors(const GSpace& S) {
  const auto& G = S.sector_group();
  std::vector<Sector> out;
  for (const auto& cls : G.conjugacy_classes()) {
    Sector s;
    s.g = cls.representative;
    s.index = SectorIndex{{s.g}};
    s.label = S.sector_label(s.g);
    s.components = fixed_locus(S, s.g);
    for (const auto& c : s.components) s.ages.push_back(c.age());
    s.action = cohomology_action(S, s.g);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Sector& a, const Sector& b) { return a.g < b.g; });
  return out;
}

std::vector<MultiSector> multi_sectors(const GSpace& S, int k, bool product_one) {
  if (k < 1 || k > 3)
    throw Error("UnsupportedK", "multi-sectors are supported for 1 <= k <= 3, got " + std::to_string(k));
  const auto& G = S.sector_group();
  const int n = G.order();
  std::set<SectorIndex> seen;
  std::vector<MultiSector> out;
  std::vector<Element> t(static_cast<size_t>(k), 0);
  while (true) {
    bool keep = true;
    if (product_one) {
      Element p = G.identity();
      for (Element g : t) p = G.mul(p, g);
      keep = p == G.identity();
    }
    if (keep) {
      auto idx = canonical_index(S, t);
      if (seen.insert(idx).second) {
        MultiSector m;
        m.index = idx;
        for (size_t i = 0; i < t.size() && m.commuting; ++i)
          for (size_t j = i + 1; j < t.size(); ++j)
            if (!G.commute(t[i], t[j])) {
              m.commuting = false;
              break;
            }
        if (m.commuting)
          m.components = common_fixed_locus(S, idx.elements);
        else
          m.components = std::vector<FixedComponent>{};
        out.push_back(std::move(m));
      }
    }
    int p = k;
    while (p-- > 0) {
      if (++t[static_cast<size_t>(p)] < n) break;
      t[static_cast<size_t>(p)] = 0;
    }
    if (p < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const MultiSector& a, const MultiSector& b) { return a.index < b.index; });
  return out;
}

SectorIndex evaluation_map(const GSpace& S, const SectorIndex& index,
                           std::span<const int> positions) {
  std::vector<Element> t;
  for (int p : positions) {
    if (p < 1 || p > static_cast<int>(index.elements.size()))
      throw Error("PositionOutOfRange", "position " + std::to_string(p) + " outside 1.." +
                                            std::to_string(index.elements.size()));
    t.push_back(index.elements[static_cast<size_t>(p - 1)]);
  }
  return canonical_index(S, t);
}

SectorIndex inversion_map(const GSpace& S, const SectorIndex& index) {
  std::vector<Element> t;
  for (Element g : index.elements) t.push_back(S.sector_group().inv(g));
  return canonical_index(S, t);
}

}  // namespace orbi
