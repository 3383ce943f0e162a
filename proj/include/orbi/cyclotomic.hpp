#pragma once

#include <cstdint>
#include <vector>

#include "orbi/rational.hpp"

namespace orbi {

/// Exact element of Q(zeta_N), sum_k q_k zeta_N^k.
///
/// Coefficients are kept on all N powers; comparisons and the integrality
/// test use the canonical remainder modulo the cyclotomic polynomial Phi_N.
class Cyclotomic {
 public:
  explicit Cyclotomic(int conductor);

  int conductor() const { return static_cast<int>(coeffs_.size()); }

  /// this += q * zeta_N^k
  void add_root(std::int64_t k, const Rational& q);
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& q);

  /// Remainder modulo Phi_N, length phi(N).
  std::vector<Rational> canonical() const;
  bool is_rational_integer() const;
  /// Throws NonIntegerDimension (internal) unless is_rational_integer().
  std::int64_t to_integer() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of Phi_N, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

}  // namespace orbi
