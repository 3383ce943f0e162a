#include "orbi/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>

#include "orbi/cyclotomic.hpp"
#include "orbi/error.hpp"

namespace orbi {

namespace {

std::atomic<int> g_thread_cap{0};

int team_size() {
  const int cap = g_thread_cap.load();
  return cap > 0 ? cap : omp_get_max_threads();
}

// Runs body(i) for i in [0, n), rethrowing the first exception (lowest i).
template <class Body>
void for_each_index(long n, Exec exec, Body body) {
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(team_size())
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

SectorContribution contribution(const GSpace& S, Element g, const Cocycle* alpha) {
  SectorContribution out;
  out.g = g;
  out.label = S.sector_label(g);
  const auto comps = fixed_locus(S, g);
  if (comps.empty()) return out;
  const auto act = cohomology_action(S, g);
  const long c = static_cast<long>(act.centralizer.size());
  // components in one centralizer orbit share their age
  std::map<Rational, std::vector<size_t>> by_age;
  for (size_t i = 0; i < comps.size(); ++i) by_age[comps[i].age()].push_back(i);
  const size_t degrees = static_cast<size_t>(2 * S.dimension() + 1);
  for (const auto& [a, idx] : by_age) {
    for (size_t k = 0; k < degrees; ++k) {
      long dim = 0;
      if (!alpha) {
        long sum = 0;
        for (size_t h = 0; h < act.centralizer.size(); ++h)
          for (size_t i : idx)
            if (act.permutation[h][i] == static_cast<int>(i) && k < act.traces[h][i].size())
              sum += act.traces[h][i][k];
        if (sum % c != 0 || sum < 0)
          throw Error("NonIntegerDimension",
                      "sector " + out.label + " degree " + std::to_string(k) +
                          ": character average " + std::to_string(sum) + "/" + std::to_string(c) +
                          " is not a nonnegative integer",
                      ErrorKind::Internal);
        dim = sum / c;
      } else {
        Cyclotomic avg(alpha->modulus);
        for (size_t h = 0; h < act.centralizer.size(); ++h) {
          long tr = 0;
          for (size_t i : idx)
            if (act.permutation[h][i] == static_cast<int>(i) && k < act.traces[h][i].size())
              tr += act.traces[h][i][k];
          if (tr) avg.add_root(gamma_pairing(*alpha, g, act.centralizer[h]), Rational(tr));
        }
        avg *= Rational(1, c);
        if (!avg.is_rational_integer())
          throw Error("NonIntegerDimension",
                      "sector " + out.label + " degree " + std::to_string(k) +
                          ": twisted average is not a rational integer",
                      ErrorKind::Internal);
        dim = avg.to_integer();
        if (dim < 0)
          throw Error("NonIntegerDimension", "sector " + out.label + ": negative twisted dimension",
                      ErrorKind::Internal);
      }
      if (dim == 0) continue;
      out.dims.add(Rational(static_cast<long>(k)) + 2 * a, dim);
      out.signed_euler += (k % 2 ? -dim : dim);
    }
  }
  return out;
}

long class_chi(const GSpace& S, Element g) {
  long chi = 0;
  for (const auto& c : fixed_locus(S, g)) chi += c.euler_characteristic();
  return chi;
}

bool in_cyclic(const FiniteGroup& G, Element g, Element h) {
  Element p = G.identity();
  for (int i = 0; i < G.element_order(g); ++i, p = G.mul(p, g))
    if (p == h) return true;
  return false;
}

long custom_pair_chi(const GSpace& S, Element g, Element h) {
  const auto& G = S.group();
  // Y^g is contained in Y^h whenever h is a power of g
  if (in_cyclic(G, g, h)) return class_chi(S, g);
  if (in_cyclic(G, h, g)) return class_chi(S, h);
  const auto& pe = S.custom().pair_euler;
  for (Element x = 0; x < G.order(); ++x) {
    const Element xi = G.inv(x);
    const Element a = G.mul(G.mul(x, g), xi), b = G.mul(G.mul(x, h), xi);
    if (auto it = pe.find({a, b}); it != pe.end()) return it->second;
    if (auto it = pe.find({b, a}); it != pe.end()) return it->second;
  }
  throw Error("UnsupportedForCustom", "no intersection Euler number for the pair (" + G.element_label(g) +
                                          ", " + G.element_label(h) + ")");
}

long pair_chi(const GSpace& S, Element g, Element h) {
  if (S.kind() == SpaceKind::Custom) return custom_pair_chi(S, g, h);
  const Element pair[2] = {g, h};
  long chi = 0;
  const auto comps = common_fixed_locus(S, pair).value();
  for (const auto& c : comps) chi += c.euler_characteristic();
  return chi;
}

// every sorted k-sub-multiset of sorted entries, each listed once
void sub_multisets(const std::vector<Element>& s, size_t k, size_t from, std::vector<size_t>& pick,
                   std::vector<std::vector<size_t>>& out) {
  if (pick.size() == k) {
    out.push_back(pick);
    return;
  }
  for (size_t i = from; i < s.size(); ++i) {
    if (i > from && s[i] == s[i - 1]) continue;
    pick.push_back(i);
    sub_multisets(s, k, i + 1, pick, out);
    pick.pop_back();
  }
}

std::vector<SparseRow> rows_for_symbol(const FiniteGroup& G, const Symbol& s, int d,
                                       const std::map<std::vector<Element>, int>& index) {
  std::vector<SparseRow> rows;
  for (int k = 2; k <= d; ++k) {
    std::vector<std::vector<size_t>> subs;
    std::vector<size_t> pick;
    sub_multisets(s.entries, static_cast<size_t>(k), 0, pick, subs);
    for (const auto& sub : subs) {
      std::vector<Element> order;
      std::vector<char> used(s.entries.size(), 0);
      for (size_t i : sub) {
        order.push_back(s.entries[i]);
        used[i] = 1;
      }
      for (size_t i = 0; i < s.entries.size(); ++i)
        if (!used[i]) order.push_back(s.entries[i]);
      const Relation rel = blowup_relation_ordered(G, order, k);
      std::map<int, long> row;
      auto col = [&](const Symbol& t) {
        auto it = index.find(t.entries);
        if (it == index.end())
          throw Error("InternalError", "relation leaves the symbol universe", ErrorKind::Internal);
        return it->second;
      };
      row[col(rel.left)] += 1;
      for (const auto& [t, c] : rel.right.terms) row[col(t)] -= c;
      SparseRow r;
      for (const auto& [j, c] : row)
        if (c) r.push_back({j, c});
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

void set_thread_cap(int threads) { g_thread_cap.store(threads > 0 ? threads : 0); }
int thread_cap() { return g_thread_cap.load(); }

namespace kernels {

std::vector<SectorContribution> sector_contributions(const GSpace& S, const Cocycle* alpha, Exec exec) {
  const auto& classes = S.sector_group().conjugacy_classes();
  std::vector<SectorContribution> out(classes.size());
  for_each_index(static_cast<long>(classes.size()), exec, [&](long i) {
    out[static_cast<size_t>(i)] = contribution(S, classes[static_cast<size_t>(i)].representative, alpha);
  });
  std::sort(out.begin(), out.end(),
            [](const SectorContribution& a, const SectorContribution& b) { return a.g < b.g; });
  return out;
}

long commuting_pair_euler_sum(const GSpace& S, Exec exec) {
  const auto& G = S.sector_group();
  const long n = G.order();
  std::vector<long> partial(static_cast<size_t>(n), 0);
  for_each_index(n, exec, [&](long g) {
    long sum = 0;
    for (Element h : G.centralizer(static_cast<Element>(g))) sum += pair_chi(S, static_cast<Element>(g), h);
    partial[static_cast<size_t>(g)] = sum;
  });
  long total = 0;
  for (long v : partial) total += v;
  return total;
}

std::vector<SparseRow> relation_rows(const FiniteGroup& G, const std::vector<Symbol>& universe, int d,
                                     Exec exec) {
  std::map<std::vector<Element>, int> index;
  for (size_t i = 0; i < universe.size(); ++i) index[universe[i].entries] = static_cast<int>(i);
  std::vector<std::vector<SparseRow>> per(universe.size());
  for_each_index(static_cast<long>(universe.size()), exec, [&](long i) {
    per[static_cast<size_t>(i)] = rows_for_symbol(G, universe[static_cast<size_t>(i)], d, index);
  });
  std::vector<SparseRow> rows;
  for (auto& p : per)
    for (auto& r : p) rows.push_back(std::move(r));
  return rows;
}

}  // namespace kernels

}  // namespace orbi
