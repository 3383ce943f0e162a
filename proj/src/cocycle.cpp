#include "orbi/cocycle.hpp"

#include <algorithm>
#include <numeric>

#include "orbi/error.hpp"
#include "orbi/rational.hpp"

namespace orbi {

bool Cocycle::is_trivial() const {
  return std::all_of(table.begin(), table.end(), [](int v) { return v == 0; });
}

Cocycle trivial_cocycle(const FiniteGroup& G) {
  Cocycle a{G, G.order(), {}};
  a.table.assign(static_cast<size_t>(G.order()) * G.order(), 0);
  return a;
}

int cocycle_parameter_count(const FiniteGroup& G) {
  if (!G.has_factors()) return 0;
  const int r = static_cast<int>(G.factors().size());
  return r * (r - 1) / 2;
}

Cocycle standard_cocycle(const FiniteGroup& G, const std::vector<int>& eps) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "standard cocycles need an abelian presentation");
  const auto& f = G.factors();
  const size_t r = f.size();
  if (static_cast<int>(eps.size()) != cocycle_parameter_count(G))
    throw Error("BadExponentRange",
                "expected " + std::to_string(cocycle_parameter_count(G)) + " torsion exponents");
  const int N = G.order();
  size_t p = 0;
  std::vector<std::pair<std::pair<size_t, size_t>, long>> terms;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j, ++p) {
      const int g = std::gcd(f[i], f[j]);
      if (eps[p] < 0 || eps[p] >= g)
        throw Error("BadExponentRange", "eps_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                            " must lie in [0, " + std::to_string(g) + ")");
      if (eps[p] != 0) terms.push_back({{i, j}, static_cast<long>(eps[p]) * (N / g)});
    }
  Cocycle a = trivial_cocycle(G);
  for (int x = 0; x < N; ++x) {
    const auto tx = G.tuple(x);
    for (int y = 0; y < N; ++y) {
      const auto ty = G.tuple(y);
      long v = 0;
      for (const auto& [ij, coef] : terms) v += coef * tx[ij.first] * ty[ij.second];
      a.table[static_cast<size_t>(x) * N + y] = static_cast<int>(mod(v, N));
    }
  }
  return a;
}

bool verify_cocycle(const Cocycle& alpha) {
  const auto& G = alpha.group;
  const int n = G.order();
  const int N = alpha.modulus;
  if (static_cast<int>(alpha.table.size()) != n * n) return false;
  const Element e = G.identity();
  for (int g = 0; g < n; ++g)
    if (alpha(e, g) != 0 || alpha(g, e) != 0) return false;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = G.mul(g, h);
      for (int k = 0; k < n; ++k) {
        const long lhs = alpha(g, G.mul(h, k)) + alpha(h, k);
        const long rhs = alpha(g, h) + alpha(gh, k);
        if (mod(lhs - rhs, N) != 0) return false;
      }
    }
  return true;
}

int gamma_pairing(const Cocycle& alpha, Element g, Element h) {
  return static_cast<int>(mod(alpha(g, h) - alpha(h, g), alpha.modulus));
}

std::vector<std::vector<int>> cocycle_class_parameters(const FiniteGroup& G) {
  if (!G.has_factors())
    throw Error("NonAbelianGroup", "torsion classes are only enumerated for abelian presentations");
  const auto& f = G.factors();
  std::vector<int> range;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j) range.push_back(std::gcd(f[i], f[j]));
  std::vector<std::vector<int>> out;
  std::vector<int> cur(range.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t p = cur.size();
    while (p > 0) {
      --p;
      if (++cur[p] < range[p]) break;
      cur[p] = 0;
      if (p == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

Cocycle pullback(const Cocycle& alpha, const std::vector<Element>& phi) {
  Cocycle b = alpha;
  const int n = alpha.group.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) b.table[static_cast<size_t>(g) * n + h] = alpha(phi[g], phi[h]);
  return b;
}

}  // namespace orbi
