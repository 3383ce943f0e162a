#include <doctest.h>

#include "orbi/obstruct.hpp"
#include "support/check.hpp"
#include "support/matrix.hpp"

using namespace orbi;
using orbi::test::linear;
using orbi::test::linear_cyclic;
using orbi::test::product;
using orbi::test::scenario_space;

namespace {

const InvariantEntry& entry(const ObstructionReport& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return e;
  FAIL("missing entry " << name);
  return r.entries.front();
}

bool has_warning(const ObstructionReport& r, const std::string& needle) {
  for (const auto& w : r.warnings)
    if (w.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("obstruct") {
  TEST_CASE("P4 against the cyclic (P1)^4") {
    const auto r = compare(linear_cyclic(4, {0, 1, 2, 3, 0}), product({4}, {1, 1, 1, 1}, {{1, 2, 3, 0}}, {}), {},
                           "P4", "P1^4");
    CHECK(r.verdict == "OBSTRUCTED");
    const auto& d = entry(r, "cr_dims");
    CHECK_FALSE(d.match);
    CHECK(d.detail == "first difference at degree 3: 3 vs 2; totals 20 vs 13");
    CHECK_FALSE(entry(r, "euler").match);
    CHECK(entry(r, "euler").left == "20");
    CHECK(entry(r, "beta").skipped == false);
    CHECK(r.left_id == "P4");
  }

  TEST_CASE("self comparison is inconclusive") {
    for (const auto& [name, S] : test::builtin_matrix()) {
      const auto r = compare(S, S);
      CHECK_MESSAGE(r.verdict == "INCONCLUSIVE", name);
      for (const auto& e : r.entries) CHECK_MESSAGE((e.match || e.skipped), name << " " << e.name);
    }
  }

  TEST_CASE("twisting separates a pair with equal dimensions") {
    const auto r = compare(scenario_space("twist_pair_fixed"), scenario_space("twist_pair_swapped"));
    CHECK(entry(r, "cr_dims").match);
    CHECK_FALSE(entry(r, "cr_twisted").match);
    CHECK(entry(r, "euler").skipped);
    CHECK(entry(r, "beta").skipped);
    CHECK(r.verdict == "OBSTRUCTED");
    CompareOptions only_dims;
    only_dims.cr_twisted = false;
    CHECK(compare(scenario_space("twist_pair_fixed"), scenario_space("twist_pair_swapped"), only_dims).verdict ==
          "INCONCLUSIVE");
  }

  TEST_CASE("two-nodal cubic against P3") {
    const auto r = compare(scenario_space("cubic_2nodal_c4"), linear_cyclic(4, {0, 1, 2, 3}));
    CHECK(r.verdict == "OBSTRUCTED");
    CHECK_FALSE(entry(r, "cr_dims").match);
    CHECK(entry(r, "euler").left == "14");
    CHECK(entry(r, "euler").right == "16");
    CHECK(entry(r, "beta").skipped);
    CHECK(has_warning(r, "unverified"));
  }

  TEST_CASE("incompatible inputs") {
    CHECK_CODE(compare(linear_cyclic(4, {0, 1}), linear_cyclic(2, {0, 1})), "GroupMismatch");
    CHECK_CODE(compare(linear_cyclic(4, {0, 1}), linear_cyclic(4, {0, 1, 2})), "DimensionMismatch");
  }

  TEST_CASE("beta is skipped without a free action") {
    const auto r = compare(linear_cyclic(4, {0, 2, 0, 2}), linear_cyclic(4, {0, 1, 2, 3}));
    CHECK(entry(r, "beta").skipped);
    CHECK(entry(r, "beta").detail.find("generically free") != std::string::npos);
    CHECK(has_warning(r, "effective=false"));
  }

  TEST_CASE("invariant selection") {
    CompareOptions o;
    o.cr_twisted = o.beta = o.euler = false;
    const auto r = compare(linear_cyclic(2, {0, 1}), linear_cyclic(2, {0, 1}), o);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].name == "cr_dims");
  }

  TEST_CASE("automorphism relabelling") {
    // the same P3 under C2xC2xC2 with coordinates moved by an automorphism
    const auto A = linear({2, 2, 2}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto B = linear({2, 2, 2}, {{0, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    CompareOptions o;
    o.aut_relabel = true;
    const auto r = compare(A, B, o);
    CHECK(entry(r, "cr_twisted").match);
    CHECK(entry(r, "cr_twisted").detail == "matched after an automorphism of G");
    CHECK(compare(A, B).verdict == "INCONCLUSIVE");
  }

  TEST_CASE("kernel copies") {
    const auto k = kernel_copy_count(linear_cyclic(4, {0, 2, 0, 2}));
    CHECK(k.kernel == std::vector<Element>{0, 2});
    CHECK(k.kernel_order == 2);
    CHECK(k.copies == 2);
    const auto e = kernel_copy_count(linear_cyclic(4, {0, 1, 2, 3}));
    CHECK(e.kernel_order == 1);
    CHECK(e.copies == 1);
    const auto t = kernel_copy_count(scenario_space("p1_agl17"));
    CHECK(t.kernel_order == 7);
    CHECK(t.copies == 2);
  }

  TEST_CASE("space warnings") {
    const auto w = space_warnings(linear_cyclic(4, {0, 2, 0, 2}));
    REQUIRE(w.size() == 1);
    CHECK(w[0] == "effective=false: ineffective kernel of order 2 {0,2}");
    CHECK(space_warnings(linear_cyclic(4, {0, 1, 2, 3})).empty());
    const auto c = space_warnings(scenario_space("twist_pair_fixed"));
    CHECK(c.size() == 2);
  }
}
