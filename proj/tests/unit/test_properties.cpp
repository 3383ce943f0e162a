#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "orbi/burnside.hpp"
#include "orbi/chenruan.hpp"
#include "orbi/cocycle.hpp"
#include "orbi/error.hpp"
#include "orbi/inertia.hpp"
#include "orbi/kernels.hpp"
#include "support/matrix.hpp"

using namespace orbi;

namespace {

const std::vector<std::vector<int>> kGroups = {{2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}};

/// Random spaces from a fixed seed: linear ones of dimension 1..4, and
/// (P^1)^m or (P^2)^m with factors permuted by the first generator.
std::vector<GSpace> random_spaces(unsigned seed, int count) {
  std::mt19937 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  std::vector<GSpace> out;
  while (static_cast<int>(out.size()) < count) {
    const auto& f = kGroups[static_cast<size_t>(pick(static_cast<int>(kGroups.size())))];
    const auto G = FiniteGroup::abelian(f);
    const auto X = character_group(G);
    if (rng() % 3 != 0) {
      const int d = 1 + pick(4);
      std::vector<Character> ch;
      for (int i = 0; i <= d; ++i) ch.push_back(X[static_cast<size_t>(pick(G.order()))]);
      out.push_back(build_linear_projective(G, ch));
    } else {
      const int m = 2 + pick(2), n = 1 + pick(2);
      std::vector<std::vector<int>> perms(f.size());
      for (size_t i = 0; i < f.size(); ++i) {
        perms[i].resize(static_cast<size_t>(m));
        std::iota(perms[i].begin(), perms[i].end(), 0);
      }
      // cyclic shift by the first generator when its order allows it
      if (f[0] % m == 0 && rng() % 2 == 0) std::rotate(perms[0].begin(), perms[0].begin() + 1, perms[0].end());
      std::vector<Character> coords;
      for (int j = 0; j <= n; ++j) coords.push_back(X[static_cast<size_t>(pick(G.order()))]);
      std::vector<std::vector<Character>> chars(static_cast<size_t>(m), coords);
      try {
        out.push_back(build_product_projective(G, std::vector<int>(static_cast<size_t>(m), n), perms, chars));
      } catch (const Error&) {
        // the permutation and characters do not define an action; draw again
      }
    }
  }
  return out;
}

const FixedComponent* find_label(const std::vector<FixedComponent>& v, const std::string& l) {
  for (const auto& c : v)
    if (c.label == l) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("age duality") {
    auto spaces = random_spaces(20240601u, 60);
    for (auto& [n, S] : test::builtin_matrix()) spaces.push_back(S);
    for (auto& [n, S] : test::custom_matrix()) spaces.push_back(S);
    for (const auto& S : spaces) {
      const auto& G = S.sector_group();
      for (Element g = 0; g < G.order(); ++g) {
        const auto F = fixed_locus(S, g), Fi = fixed_locus(S, G.inv(g));
        REQUIRE(F.size() == Fi.size());
        for (const auto& c : F) {
          const auto* d = find_label(Fi, c.label);
          REQUIRE(d != nullptr);
          CHECK(c.age() + d->age() == Rational(S.dimension() - c.dimension));
        }
      }
    }
  }

  TEST_CASE("Chen-Ruan dimensions are symmetric about the middle degree") {
    for (const auto& S : random_spaces(7u, 60)) {
      const auto D = cr_dimensions(S);
      for (const auto& [k, n] : D.dims) CHECK(D.at(Rational(2 * S.dimension()) - k) == n);
    }
  }

  TEST_CASE("inverse sectors carry the same dimensions") {
    for (const auto& S : random_spaces(99u, 40)) {
      const auto& G = S.group();
      const auto contrib = cr_contributions(S);
      for (const auto& c : contrib) {
        const Element gi = G.class_representative(G.inv(c.g));
        for (const auto& d : contrib)
          if (d.g == gi) CHECK(d.dims.total() == c.dims.total());
      }
    }
  }

  TEST_CASE("totals match the geometric Euler oracle") {
    for (const auto& S : random_spaces(31337u, 80)) {
      const auto e = oracle::orbifold_euler(S);
      REQUIRE(e.has_value());
      CHECK(cr_dimensions(S).total() == *e);
      CHECK(orbifold_euler(S) == *e);
    }
  }

  TEST_CASE("linear fixed loci match eigenvalue ages") {
    for (const auto& S : random_spaces(4242u, 60)) {
      if (S.kind() != SpaceKind::LinearProjective) continue;
      for (Element g = 0; g < S.group().order(); ++g) {
        std::multiset<std::pair<int, std::pair<long, long>>> got;
        for (const auto& c : fixed_locus(S, g))
          got.insert({c.dimension, {c.age().numerator(), c.age().denominator()}});
        CHECK(got == oracle::linear_fixed_ages(S, g));
      }
    }
  }

  TEST_CASE("twisted dimensions: trivial class, numeric averages, local systems") {
    for (const auto& S : random_spaces(555u, 40)) {
      const auto& G = S.group();
      CHECK(cr_twisted_dimensions(S, trivial_cocycle(G)) == cr_dimensions(S));
      for (const auto& eps : cocycle_class_parameters(G)) {
        const auto a = standard_cocycle(G, eps);
        const auto D = cr_twisted_dimensions(S, a);
        CHECK(D.total() == oracle::twisted_total_numeric(S, a));
        CHECK(D.total() <= cr_dimensions(S).total());
        CHECK(check_inner_local_system(S, torsion_line_system(S, a)).ok);
      }
    }
  }

  TEST_CASE("serial and parallel kernels agree") {
    set_thread_cap(4);
    for (const auto& S : random_spaces(2718u, 40)) {
      const auto a = kernels::sector_contributions(S, nullptr, Exec::Serial);
      const auto b = kernels::sector_contributions(S, nullptr, Exec::Parallel);
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].dims == b[i].dims);
        CHECK(a[i].signed_euler == b[i].signed_euler);
      }
      CHECK(kernels::commuting_pair_euler_sum(S, Exec::Serial) == kernels::commuting_pair_euler_sum(S, Exec::Parallel));
      const auto& G = S.group();
      for (const auto& eps : cocycle_class_parameters(G)) {
        const auto c = standard_cocycle(G, eps);
        const auto x = kernels::sector_contributions(S, &c, Exec::Serial);
        const auto y = kernels::sector_contributions(S, &c, Exec::Parallel);
        for (size_t i = 0; i < x.size(); ++i) CHECK(x[i].dims == y[i].dims);
      }
    }
    for (const auto& [f, d] : std::vector<std::pair<std::vector<int>, int>>{{{4}, 3}, {{2, 2}, 3}, {{5}, 3}, {{6}, 2}}) {
      const auto G = FiniteGroup::abelian(f);
      const auto u = symbol_universe(G, d);
      CHECK(kernels::relation_rows(G, u, d, Exec::Serial) == kernels::relation_rows(G, u, d, Exec::Parallel));
    }
    set_thread_cap(0);
  }

  TEST_CASE("symbol normalization is idempotent and order-blind") {
    std::mt19937 rng(8u);
    for (const auto& f : kGroups) {
      const auto G = FiniteGroup::abelian(f);
      for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 4);
        std::vector<Element> e;
        for (int i = 0; i < d; ++i) e.push_back(static_cast<Element>(rng() % static_cast<unsigned>(G.order())));
        const auto s = symbol_normalize(G, e, d);
        const auto t = symbol_normalize(G, s.entries, d);
        CHECK(t.entries == s.entries);
        CHECK(t.admissible == s.admissible);
        std::shuffle(e.begin(), e.end(), rng);
        CHECK(symbol_normalize(G, e, d).entries == s.entries);
        CHECK(s.admissible == symbol_admissible(G, e));
      }
    }
  }

  TEST_CASE("closure of the relations over the universe") {
    for (const auto& [f, d] : std::vector<std::pair<std::vector<int>, int>>{{{2}, 3}, {{4}, 3}, {{2, 2}, 2}, {{3}, 3}}) {
      const auto G = FiniteGroup::abelian(f);
      const RelationLattice L(G, d);
      std::mt19937 rng(11u);
      for (const auto& s : L.universe())
        for (int k = 2; k <= d; ++k) {
          auto e = s.entries;
          std::shuffle(e.begin(), e.end(), rng);
          const auto r = blowup_relation_ordered(G, e, k);
          for (const auto& [t, c] : r.right.terms) CHECK(L.index_of(t) >= 0);
          BurnsideClass lhs;
          lhs.add(r.left, 1);
          CHECK(classes_equal(lhs, r.right, L));
        }
    }
  }

  TEST_CASE("Hermite form is idempotent and agrees with the dense Smith oracle") {
    std::mt19937 rng(77u);
    for (int trial = 0; trial < 60; ++trial) {
      const size_t n = 2 + rng() % 5, m = 1 + rng() % 7;
      std::vector<std::vector<long>> rows(m, std::vector<long>(n));
      HermiteLattice L(n);
      for (auto& r : rows) {
        for (auto& x : r) x = static_cast<long>(rng() % 13) - 6;
        L.add(IntVector(r.begin(), r.end()));
      }
      const auto B = L.basis();
      HermiteLattice M(n);
      for (const auto& b : B) M.add(b);
      CHECK(M.basis() == B);
      for (const auto& b : B) CHECK_FALSE(M.add(b));
      for (const auto& r : rows) CHECK(M.contains(IntVector(r.begin(), r.end())));
      CHECK(quotient_structure(L) == oracle::dense_snf(rows, n));
      std::vector<IntVector> big;
      for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
      auto inv = smith_invariants(big, n);
      const auto q = oracle::dense_snf(rows, n);
      CHECK(n - inv.size() == q.free_rank);
    }
  }
}
