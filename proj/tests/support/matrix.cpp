#include "support/matrix.hpp"

#include "orbi/scenario.hpp"

namespace orbi::test {

std::string scenario_path(const std::string& name) {
  return std::string(ORBI_SCENARIO_DIR) + "/" + name + ".json";
}

GSpace scenario_space(const std::string& name) { return load_scenario(scenario_path(name)).space; }

GSpace linear(const std::vector<int>& factors, const std::vector<std::vector<int>>& weights) {
  const auto G = FiniteGroup::abelian(factors);
  std::vector<Character> chars;
  for (const auto& w : weights) chars.push_back(character_from_exponents(G, w));
  return build_linear_projective(G, chars);
}

GSpace linear_cyclic(int n, const std::vector<int>& weights) {
  std::vector<std::vector<int>> w;
  for (int x : weights) w.push_back({x});
  return linear({n}, w);
}

GSpace product(const std::vector<int>& factors, const std::vector<int>& dims,
               const std::vector<std::vector<int>>& perms,
               const std::vector<std::vector<std::vector<int>>>& chars) {
  const auto G = FiniteGroup::abelian(factors);
  std::vector<std::vector<Character>> c;
  for (const auto& f : chars) {
    std::vector<Character> row;
    for (const auto& w : f) row.push_back(character_from_exponents(G, w));
    c.push_back(row);
  }
  return build_product_projective(G, dims, perms, c);
}

std::vector<NamedSpace> builtin_matrix() {
  std::vector<NamedSpace> m;
  auto add = [&](std::string n, GSpace s) { m.push_back({std::move(n), std::move(s)}); };
  // C2
  add("P1/C2 (0,1)", linear_cyclic(2, {0, 1}));
  add("P2/C2 (0,0,1)", linear_cyclic(2, {0, 0, 1}));
  add("P3/C2 (0,1,0,1)", linear_cyclic(2, {0, 1, 0, 1}));
  add("P1xP1/C2 swap", product({2}, {1, 1}, {{1, 0}}, {}));
  add("P1xP1/C2 sign", product({2}, {1, 1}, {{0, 1}}, {{{0}, {1}}, {{0}, {1}}}));
  add("P1xP2/C2 mixed", product({2}, {1, 2}, {{0, 1}}, {{{0}, {1}}, {{0}, {0}, {1}}}));
  // C4
  add("P4/C4 (0,1,2,3,0)", linear_cyclic(4, {0, 1, 2, 3, 0}));
  add("P3/C4 (0,1,2,3)", linear_cyclic(4, {0, 1, 2, 3}));
  add("P3/C4 (0,2,0,2)", linear_cyclic(4, {0, 2, 0, 2}));
  add("P2/C4 (0,1,3)", linear_cyclic(4, {0, 1, 3}));
  add("(P1)^4/C4 cyclic", product({4}, {1, 1, 1, 1}, {{1, 2, 3, 0}}, {}));
  add("(P1)^2/C4 swap+scale", product({4}, {1, 1}, {{1, 0}}, {{{0}, {2}}, {{0}, {2}}}));
  add("P1xP1/C4 diagonal", product({4}, {1, 1}, {{0, 1}}, {{{0}, {1}}, {{0}, {2}}}));
  // C2xC2
  add("P1/C2xC2 (00,10)", linear({2, 2}, {{0, 0}, {1, 0}}));
  add("P2/C2xC2 (00,10,01)", linear({2, 2}, {{0, 0}, {1, 0}, {0, 1}}));
  add("P3/C2xC2 (00,10,01,11)", linear({2, 2}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  add("(P1)^2/C2xC2 sign", product({2, 2}, {1, 1}, {{0, 1}, {0, 1}}, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}}));
  add("(P1)^2/C2xC2 swap+sign", product({2, 2}, {1, 1}, {{1, 0}, {0, 1}}, {{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}}}));
  // C2xC4
  add("P2/C2xC4 (00,10,01)", linear({2, 4}, {{0, 0}, {1, 0}, {0, 1}}));
  add("P3/C2xC4 (00,10,01,12)", linear({2, 4}, {{0, 0}, {1, 0}, {0, 1}, {1, 2}}));
  add("(P1)^2/C2xC4 swap+scale", product({2, 4}, {1, 1}, {{1, 0}, {0, 1}}, {{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}}}));
  add("(P1)^4/C2xC4 cyclic+sign", product({2, 4}, {1, 1, 1, 1}, {{0, 1, 2, 3}, {1, 2, 3, 0}},
                                           {{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}}));
  // weighted projective lines and planes
  add("P(1,1)", build_weighted_projective({1, 1}));
  add("P(1,2)", build_weighted_projective({1, 2}));
  add("P(1,3)", build_weighted_projective({1, 3}));
  add("P(2,3)", build_weighted_projective({2, 3}));
  add("P(1,1,2)", build_weighted_projective({1, 1, 2}));
  add("P(1,2,3)", build_weighted_projective({1, 2, 3}));
  // non-abelian table group, acting through a quotient
  add("P1/AGL(1,7)", load_scenario(scenario_path("p1_agl17")).space);
  return m;
}

std::vector<NamedSpace> custom_matrix() {
  std::vector<NamedSpace> m;
  for (const char* n : {"cubic_2nodal_c4", "twist_pair_fixed", "twist_pair_swapped"})
    m.push_back({n, load_scenario(scenario_path(n)).space});
  return m;
}

}  // namespace orbi::test
