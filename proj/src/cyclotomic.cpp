#include "orbi/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "orbi/error.hpp"

namespace orbi {

namespace {

using Poly = std::vector<std::int64_t>;

// exact division by a monic polynomial
Poly divide_monic(Poly num, const Poly& den) {
  const size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

const Poly& cyclotomic_polynomial(int n) {
  static std::map<int, Poly> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int conductor)
    : coeffs_(static_cast<size_t>(conductor < 1 ? 1 : conductor), Rational(0)) {}

void Cyclotomic::add_root(std::int64_t k, const Rational& q) {
  coeffs_[static_cast<size_t>(mod(k, conductor()))] += q;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.conductor() != conductor())
    throw Error("ConductorMismatch", "cyclotomic conductors differ", ErrorKind::Internal);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

std::vector<Rational> Cyclotomic::canonical() const {
  const Poly& phi = cyclotomic_polynomial(conductor());
  const size_t deg = phi.size() - 1;
  std::vector<Rational> r = coeffs_;
  for (size_t i = r.size(); i-- > deg;) {
    const Rational c = r[i];
    if (c.numerator() == 0) continue;
    for (size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool Cyclotomic::is_rational_integer() const {
  const auto r = canonical();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i].numerator() != 0) return false;
  return r.empty() || r[0].denominator() == 1;
}

std::int64_t Cyclotomic::to_integer() const {
  if (!is_rational_integer())
    throw Error("NonIntegerDimension", "character average is not a rational integer",
                ErrorKind::Internal);
  const auto r = canonical();
  return r.empty() ? 0 : r[0].numerator();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor() == b.conductor() && a.canonical() == b.canonical();
}

}  // namespace orbi
