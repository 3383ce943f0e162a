#include <doctest.h>

#include <set>

#include "orbi/inertia.hpp"
#include "orbi/scenario.hpp"
#include "support/check.hpp"
#include "support/groups.hpp"
#include "support/matrix.hpp"

using namespace orbi;
using orbi::test::linear_cyclic;
using orbi::test::product;

namespace {

std::vector<Rational> sorted_ages(const Sector& s) {
  auto a = s.ages;
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_SUITE("inertia") {
  TEST_CASE("sectors of P4 under C4") {
    const auto S = linear_cyclic(4, {0, 1, 2, 3, 0});
    const auto sec = twisted_sectors(S);
    REQUIRE(sec.size() == 4);
    CHECK(sec[0].g == 0);
    CHECK(sec[0].ages == std::vector<Rational>{Rational(0)});
    REQUIRE(sec[1].components.size() == 4);
    // {0,4}, {1}, {2}, {3}
    CHECK(sec[1].ages == std::vector<Rational>{Rational(3, 2), Rational(9, 4), Rational(2), Rational(7, 4)});
    CHECK(sec[1].label == "1");
    CHECK(sec[1].index.elements == std::vector<Element>{1});
  }

  TEST_CASE("sectors of the cyclic (P1)^4") {
    const auto S = product({4}, {1, 1, 1, 1}, {{1, 2, 3, 0}}, {});
    const auto sec = twisted_sectors(S);
    REQUIRE(sec.size() == 4);
    CHECK(sorted_ages(sec[1]) == std::vector<Rational>{Rational(3, 2)});
    CHECK(sorted_ages(sec[2]) == std::vector<Rational>{Rational(1)});
    CHECK(sorted_ages(sec[3]) == std::vector<Rational>{Rational(3, 2)});
    CHECK(sec[2].components[0].dimension == 2);
  }

  TEST_CASE("age of a point on P1") {
    const auto S = linear_cyclic(2, {0, 1});
    for (const auto& c : fixed_locus(S, 1)) CHECK(age(S, 1, c) == Rational(1, 2));
    const auto whole = fixed_locus(S, 0)[0];
    CHECK_CODE(age(S, 1, whole), "ComponentNotFixed");
    const auto T = product({4}, {1, 1, 1, 1}, {{1, 2, 3, 0}}, {});
    CHECK(age(T, 1, fixed_locus(T, 1)[0]) == Rational(3, 2));
  }

  TEST_CASE("weighted sectors") {
    const auto A = build_weighted_projective({1, 2});
    const auto sa = twisted_sectors(A);
    REQUIRE(sa.size() == 2);
    CHECK(sa[1].label == "1/2");
    CHECK(sa[1].ages == std::vector<Rational>{Rational(1, 2)});
    const auto B = build_weighted_projective({1, 3});
    const auto sb = twisted_sectors(B);
    REQUIRE(sb.size() == 3);
    CHECK(sb[1].ages == std::vector<Rational>{Rational(1, 3)});
    CHECK(sb[2].ages == std::vector<Rational>{Rational(2, 3)});
    CHECK(twisted_sectors(build_weighted_projective({1, 1})).size() == 1);
    // P(2,4) has a generic mu_2 stabilizer: the -1 sector is the whole line
    const auto C = twisted_sectors(build_weighted_projective({2, 4}));
    REQUIRE(C.size() == 4);
    CHECK(C[2].components[0].dimension == 1);
  }

  TEST_CASE("empty sectors are listed") {
    const auto S = load_scenario(test::scenario_path("twist_pair_fixed")).space;
    const auto sec = twisted_sectors(S);
    REQUIRE(sec.size() == 4);
    CHECK(sec[1].components.empty());
    CHECK(sec[3].components.empty());
    CHECK(sec[2].components.size() == 2);
  }

  TEST_CASE("canonical index under conjugation") {
    const auto G = test::metacyclic_42();
    const auto S = build_linear_projective(G, {trivial_character(G)});
    // a and a^3 are conjugate by b
    const std::vector<Element> t1{1, 7};
    const auto i1 = canonical_index(S, t1);
    for (Element x = 0; x < 42; ++x) {
      std::vector<Element> c{G.mul(G.mul(x, 1), G.inv(x)), G.mul(G.mul(x, 7), G.inv(x))};
      CHECK(canonical_index(S, c) == i1);
    }
    CHECK(canonical_index(S, std::vector<Element>{5}).elements == std::vector<Element>{1});
  }

  TEST_CASE("double sectors of P1 under C2") {
    const auto S = linear_cyclic(2, {0, 1});
    const auto M = multi_sectors(S, 2);
    REQUIRE(M.size() == 4);
    for (const auto& m : M) {
      REQUIRE(m.components.has_value());
      const auto& e = m.index.elements;
      if (e[0] == 0 && e[1] == 0) {
        REQUIRE(m.components->size() == 1);
        CHECK(m.components->front().dimension == 1);
      } else {
        CHECK(m.components->size() == 2);
      }
    }
    CHECK_CODE(multi_sectors(S, 4), "UnsupportedK");
    CHECK_CODE(multi_sectors(S, 0), "UnsupportedK");
    CHECK(multi_sectors(S, 1).size() == 2);
  }

  TEST_CASE("triples with product one on the Klein product") {
    const auto S = product({2, 2}, {1, 1}, {{0, 1}, {0, 1}}, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}});
    const auto M = multi_sectors(S, 3, true);
    // g1, g2 free, g3 = (g1 g2)^-1
    CHECK(M.size() == 16);
    for (const auto& m : M) {
      const auto& e = m.index.elements;
      CHECK(S.group().mul(S.group().mul(e[0], e[1]), e[2]) == 0);
    }
  }

  TEST_CASE("non-commuting tuples of a table group") {
    const auto G = test::metacyclic_42();
    const auto S = build_linear_projective(G, {trivial_character(G)});
    const auto M = multi_sectors(S, 2);
    long commuting = 0, other = 0;
    for (const auto& m : M) (m.commuting ? commuting : other)++;
    CHECK(other > 0);
    // commuting pairs up to conjugacy = sum over classes of classes of C(g)
    long expect = 0;
    for (const auto& c : G.conjugacy_classes()) {
      const auto C = G.centralizer(c.representative);
      std::set<std::vector<Element>> orbits;
      for (Element h : C) {
        std::vector<Element> o;
        for (Element x : C) o.push_back(G.mul(G.mul(x, h), G.inv(x)));
        std::sort(o.begin(), o.end());
        orbits.insert(o);
      }
      expect += static_cast<long>(orbits.size());
    }
    CHECK(commuting == expect);
  }

  TEST_CASE("evaluation and inversion maps") {
    const auto S = linear_cyclic(4, {0, 1, 2, 3});
    const auto& G = S.group();
    const Element g1 = 1, g2 = 2, g3 = G.inv(G.mul(g1, g2));
    const auto idx = canonical_index(S, std::vector<Element>{g1, g2, g3});
    CHECK(evaluation_map(S, idx, std::vector<int>{3}).elements == std::vector<Element>{1});
    CHECK(evaluation_map(S, idx, std::vector<int>{2, 1}).elements == std::vector<Element>{2, 1});
    CHECK_CODE(evaluation_map(S, idx, std::vector<int>{4}), "PositionOutOfRange");
    CHECK_CODE(evaluation_map(S, idx, std::vector<int>{0}), "PositionOutOfRange");
    CHECK(inversion_map(S, idx).elements == std::vector<Element>{3, 2, 3});
    CHECK(inversion_map(S, inversion_map(S, idx)) == idx);
  }
}
