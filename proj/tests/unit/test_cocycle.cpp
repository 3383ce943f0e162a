#include <doctest.h>

#include <set>

#include "orbi/cocycle.hpp"
#include "support/check.hpp"

using namespace orbi;

TEST_SUITE("cocycle") {
  TEST_CASE("standard cocycle on C2xC2") {
    const auto G = FiniteGroup::abelian({2, 2});
    const auto a = standard_cocycle(G, {1});
    CHECK(a.modulus == 4);
    for (int g = 0; g < 4; ++g)
      for (int h = 0; h < 4; ++h) {
        const auto x = G.tuple(g), y = G.tuple(h);
        CHECK(a(g, h) == (2 * x[0] * y[1]) % 4);
      }
    CHECK(verify_cocycle(a));
    CHECK_FALSE(a.is_trivial());
    CHECK(standard_cocycle(G, {0}).is_trivial());
    const Element g = G.from_tuple(std::vector<int>{1, 0}), h = G.from_tuple(std::vector<int>{0, 1});
    CHECK(gamma_pairing(a, g, h) == 2);
    CHECK(gamma_pairing(a, h, g) == 2);
    // sector (1,0): h = (b1,b2) -> (-1)^b2
    for (int k = 0; k < 4; ++k) CHECK(gamma_pairing(a, g, k) == 2 * G.tuple(k)[1]);
  }

  TEST_CASE("parameters and ranges") {
    CHECK(cocycle_parameter_count(FiniteGroup::abelian({4})) == 0);
    CHECK(cocycle_parameter_count(FiniteGroup::abelian({2, 2, 2})) == 3);
    const auto G = FiniteGroup::abelian({2, 4});
    CHECK_CODE(standard_cocycle(G, {2}), "BadExponentRange");
    CHECK_CODE(standard_cocycle(G, {0, 0}), "BadExponentRange");
    CHECK(cocycle_class_parameters(G) == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(cocycle_class_parameters(FiniteGroup::abelian({4, 4})).size() == 4);
    CHECK(cocycle_class_parameters(FiniteGroup::abelian({2, 2, 2})).size() == 8);
  }

  TEST_CASE("gamma is an alternating bicharacter") {
    for (const auto& f : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {4, 4}, {2, 2, 2}}) {
      const auto G = FiniteGroup::abelian(f);
      const int n = G.order();
      for (const auto& eps : cocycle_class_parameters(G)) {
        const auto a = standard_cocycle(G, eps);
        REQUIRE(verify_cocycle(a));
        for (int g = 0; g < n; ++g) {
          CHECK(gamma_pairing(a, g, g) == 0);
          for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
              REQUIRE(gamma_pairing(a, G.mul(g, h), k) == (gamma_pairing(a, g, k) + gamma_pairing(a, h, k)) % n);
        }
      }
    }
  }

  TEST_CASE("distinct classes give distinct pairings") {
    const auto G = FiniteGroup::abelian({2, 2, 2});
    std::set<std::vector<int>> seen;
    for (const auto& eps : cocycle_class_parameters(G)) {
      const auto a = standard_cocycle(G, eps);
      std::vector<int> t;
      for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h) t.push_back(gamma_pairing(a, g, h));
      CHECK(seen.insert(t).second);
    }
  }

  TEST_CASE("broken tables are rejected") {
    const auto G = FiniteGroup::abelian({2, 2});
    auto a = standard_cocycle(G, {1});
    a.table[5] = 1;  // alpha((0,1),(0,1))
    CHECK_FALSE(verify_cocycle(a));
    auto b = trivial_cocycle(G);
    b.table[1] = 2;  // alpha(1, g) must vanish
    CHECK_FALSE(verify_cocycle(b));
  }

  TEST_CASE("pullback along an automorphism") {
    const auto G = FiniteGroup::abelian({2, 2});
    const auto a = standard_cocycle(G, {1});
    for (const auto& phi : automorphisms(G)) {
      const auto p = pullback(a, phi);
      CHECK(verify_cocycle(p));
      // C2xC2 has one nontrivial class, preserved by every automorphism
      CHECK(gamma_pairing(p, 1, 2) == 2);
    }
  }
}
