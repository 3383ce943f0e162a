#include "orbi/lattice.hpp"

#include <algorithm>
#include <utility>

#include "orbi/error.hpp"

namespace orbi {

namespace {

std::size_t leading(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// a*x + b*y = g = gcd(a, b) >= 0
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  x = s0;
  y = t0;
  return r0;
}

void axpy(IntVector& v, const BigInt& q, const IntVector& r) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (r[i] != 0) v[i] -= q * r[i];
}

}  // namespace

bool HermiteLattice::add(IntVector v) {
  if (v.size() != n_) throw Error("InternalError", "lattice row has wrong length", ErrorKind::Internal);
  bool changed = false;
  while (true) {
    const std::size_t c = leading(v);
    if (c == n_) return changed;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_.emplace(c, std::move(v));
      return true;
    }
    IntVector& r = it->second;
    if (v[c] % r[c] == 0) {
      axpy(v, v[c] / r[c], r);
      continue;
    }
    // replace the pivot row by a combination with pivot gcd(r[c], v[c])
    BigInt x, y;
    const BigInt g = ext_gcd(r[c], v[c], x, y);
    const BigInt rc = r[c] / g, vc = v[c] / g;
    IntVector nr(n_), nv(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      nr[i] = x * r[i] + y * v[i];
      nv[i] = rc * v[i] - vc * r[i];
    }
    r = std::move(nr);
    v = std::move(nv);
    changed = true;
  }
}

bool HermiteLattice::contains(IntVector v) const {
  if (v.size() != n_) return false;
  while (true) {
    const std::size_t c = leading(v);
    if (c == n_) return true;
    auto it = rows_.find(c);
    if (it == rows_.end() || v[c] % it->second[c] != 0) return false;
    axpy(v, v[c] / it->second[c], it->second);
  }
}

std::vector<IntVector> HermiteLattice::basis() const {
  std::vector<std::pair<std::size_t, IntVector>> rows(rows_.begin(), rows_.end());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& [p, rj] = rows[j];
    for (std::size_t i = 0; i < j; ++i) {
      const BigInt q = floor_div(rows[i].second[p], rj[p]);
      if (q != 0) axpy(rows[i].second, q, rj);
    }
  }
  std::vector<IntVector> out;
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

std::vector<BigInt> smith_invariants(std::vector<IntVector> a, std::size_t columns) {
  const std::size_t m = a.size(), n = columns;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      const BigInt p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / p;
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / p;
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad == m) {
        diag.push_back(abs(p));
        break;
      }
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
  }
  return diag;
}

QuotientStructure quotient_structure(const HermiteLattice& L) {
  const auto d = smith_invariants(L.basis(), L.columns());
  QuotientStructure q;
  q.free_rank = L.columns() - d.size();
  for (const auto& x : d)
    if (x > 1) q.torsion.push_back(x);
  return q;
}

std::string QuotientStructure::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1)
    parts.push_back("Z");
  else if (free_rank > 1)
    parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
  return s;
}

}  // namespace orbi
