#include "orbi/chenruan.hpp"

#include <sstream>

#include "orbi/error.hpp"
#include "orbi/inertia.hpp"
#include "orbi/kernels.hpp"

namespace orbi {

void GradedDims::add(const Rational& degree, long n) {
  if (n == 0) return;
  auto& v = dims[degree];
  v += n;
  if (v == 0) dims.erase(degree);
}

long GradedDims::total() const {
  long t = 0;
  for (const auto& [d, n] : dims) t += n;
  return t;
}

long GradedDims::at(const Rational& degree) const {
  auto it = dims.find(degree);
  return it == dims.end() ? 0 : it->second;
}

GradedDims& GradedDims::operator+=(const GradedDims& other) {
  for (const auto& [d, n] : other.dims) add(d, n);
  return *this;
}

std::vector<SectorContribution> cr_contributions(const GSpace& S, const Cocycle* alpha) {
  if (alpha) {
    if (!alpha->group.same_as(S.group()))
      throw Error("GroupMismatch", "cocycle belongs to a different group");
    if (!S.group().is_abelian())
      throw Error("NonAbelianTwist", "discrete torsion twisting needs an abelian group");
    // weighted spaces carry the trivial group, whose only cocycle is trivial
    if (alpha->is_trivial() || S.kind() == SpaceKind::WeightedProjective) alpha = nullptr;
  }
  return kernels::sector_contributions(S, alpha, Exec::Parallel);
}

GradedDims cr_dimensions(const GSpace& S) {
  GradedDims d;
  for (const auto& c : cr_contributions(S)) d += c.dims;
  return d;
}

GradedDims cr_twisted_dimensions(const GSpace& S, const Cocycle& alpha) {
  GradedDims d;
  for (const auto& c : cr_contributions(S, &alpha)) d += c.dims;
  return d;
}

long orbifold_euler(const GSpace& S) {
  if (S.kind() == SpaceKind::WeightedProjective) {
    long s = 0;
    for (int w : S.weighted().weights) s += w;
    return s;
  }
  const long sum = kernels::commuting_pair_euler_sum(S, Exec::Parallel);
  const long n = S.group().order();
  if (sum % n != 0)
    throw Error("NonIntegerDimension", "commuting-pair Euler sum " + std::to_string(sum) +
                                           " is not divisible by |G| = " + std::to_string(n),
                ErrorKind::Internal);
  return sum / n;
}

long signed_cr_euler(const GSpace& S) {
  long e = 0;
  for (const auto& c : cr_contributions(S)) e += c.signed_euler;
  return e;
}

int TwistLineData::value(const FiniteGroup& G, Element g, Element h) const {
  const Element rep = G.class_representative(g);
  const Element x = G.conjugator(g, rep);
  const Element hx = G.mul(G.mul(x, h), G.inv(x));
  for (const auto& line : lines)
    if (line.g == rep)
      for (size_t i = 0; i < line.centralizer.size(); ++i)
        if (line.centralizer[i] == hx) return line.values[i];
  throw Error("ElementNotInGroup", "no line data at (" + G.element_label(g) + ", " + G.element_label(h) + ")");
}

TwistLineData torsion_line_system(const GSpace& S, const Cocycle& alpha) {
  const auto& G = S.group();
  if (!alpha.group.same_as(G)) throw Error("GroupMismatch", "cocycle belongs to a different group");
  TwistLineData L;
  L.modulus = alpha.modulus;
  for (const auto& cls : G.conjugacy_classes()) {
    TwistLine line;
    line.g = cls.representative;
    line.centralizer = G.centralizer(line.g);
    // alpha(g,h) alpha(ghg^-1, g)^-1, and ghg^-1 = h on the centralizer
    for (Element h : line.centralizer) line.values.push_back(gamma_pairing(alpha, line.g, h));
    L.lines.push_back(std::move(line));
  }
  return L;
}

LocalSystemCheck check_inner_local_system(const GSpace& S, const TwistLineData& L) {
  const auto& G = S.group();
  const int N = L.modulus;
  LocalSystemCheck out;
  auto fail = [&](std::string v) {
    out.ok = false;
    out.violations.push_back(std::move(v));
  };
  for (Element h : G.centralizer(G.identity()))
    if (mod(L.value(G, G.identity(), h), N) != 0) {
      fail("(a) untwisted sector: character is nontrivial at " + G.element_label(h));
      break;
    }
  for (const auto& line : L.lines) {
    const Element gi = G.inv(line.g);
    for (size_t i = 0; i < line.centralizer.size(); ++i) {
      const Element h = line.centralizer[i];
      if (mod(line.values[i] + L.value(G, gi, h), N) != 0) {
        fail("(b) sector " + G.element_label(line.g) + ": L at inverse sector " + G.element_label(gi) +
             " is not the inverse character (at " + G.element_label(h) + ")");
        break;
      }
    }
  }
  // triples with g1 g2 g3 = 1 of a multi-sector enumeration over the group
  const auto triples = multi_sectors(S.group().same_as(S.sector_group())
                                         ? S
                                         : build_linear_projective(G, {trivial_character(G)}),
                                     3, true);
  for (const auto& t : triples) {
    if (!t.commuting) continue;
    const auto& e = t.index.elements;
    for (Element h = 0; h < G.order(); ++h) {
      if (!G.commute(h, e[0]) || !G.commute(h, e[1]) || !G.commute(h, e[2])) continue;
      const long v = static_cast<long>(L.value(G, e[0], h)) + L.value(G, e[1], h) + L.value(G, e[2], h);
      if (mod(v, N) != 0) {
        fail("(c) triple (" + G.element_label(e[0]) + ", " + G.element_label(e[1]) + ", " +
             G.element_label(e[2]) + "): product is nontrivial at " + G.element_label(h));
        break;
      }
    }
  }
  return out;
}

std::string poincare_string(const GradedDims& D) {
  if (D.dims.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, n] : D.dims) {
    if (!first) os << " + ";
    first = false;
    os << n;
    if (deg.numerator() != 0) os << " q^{" << to_string(deg) << "}";
  }
  return os.str();
}

}  // namespace orbi
