#pragma once

#include <vector>

#include "orbi/group.hpp"

namespace orbi {

/// Normalized 2-cocycle G x G -> mu_N, N = |G|, stored as exponents:
/// the value at (g, h) is exp(2 pi i alpha(g,h) / N).
struct Cocycle {
  FiniteGroup group;
  int modulus = 1;
  std::vector<int> table;  // row-major |G| x |G|

  int operator()(Element g, Element h) const {
    return table[static_cast<size_t>(g) * group.order() + h];
  }
  bool is_trivial() const;
};

Cocycle trivial_cocycle(const FiniteGroup& G);

/// Number of exponents standard_cocycle expects: one per pair i < j of
/// cyclic factors.
int cocycle_parameter_count(const FiniteGroup& G);

/// alpha(a, b) = sum_{i<j} eps_ij a_i b_j (N / gcd(n_i, n_j)) mod N, pairs
/// (i, j) in lexicographic order. Throws BadExponentRange unless
/// 0 <= eps_ij < gcd(n_i, n_j).
Cocycle standard_cocycle(const FiniteGroup& G, const std::vector<int>& eps);

/// Normalization and the cocycle identity on every triple.
bool verify_cocycle(const Cocycle& alpha);

/// gamma(g, h) = alpha(g, h) - alpha(h, g) mod N.
int gamma_pairing(const Cocycle& alpha, Element g, Element h);

/// One representative per class of H^2(G; C*) for an abelian presentation:
/// every eps vector in the standard parametrization, lexicographic, trivial
/// class first.
std::vector<std::vector<int>> cocycle_class_parameters(const FiniteGroup& G);

/// (phi^* alpha)(g, h) = alpha(phi g, phi h).
Cocycle pullback(const Cocycle& alpha, const std::vector<Element>& phi);

}  // namespace orbi
