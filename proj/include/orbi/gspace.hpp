#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbi/group.hpp"
#include "orbi/rational.hpp"

namespace orbi {

/// Eigenvalue exp(2 pi i num/den) on a normal direction, 0 < num < den.
struct NormalWeight {
  int num = 0;
  int den = 1;
  Rational value() const { return Rational(num, den); }
  friend bool operator==(const NormalWeight&, const NormalWeight&) = default;
};

/// One factor of a built-in fixed component: an orbit of factors (in cycle
/// order for single elements) and the coordinate subset of its base factor.
struct Block {
  std::vector<int> orbit;
  std::vector<int> coords;
  int dimension() const { return static_cast<int>(coords.size()) - 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

struct FixedComponent {
  std::string label;
  int dimension = 0;
  /// betti[k] = dim H^k, k = 0..2*dimension
  std::vector<long> betti;
  std::vector<NormalWeight> normal_weights;
  /// human-readable ambient description, e.g. "P^1 on coords {0,4}"
  std::string ambient;
  /// Kunneth blocks of a built-in component; empty for Custom.
  std::vector<Block> blocks;

  Rational age() const;
  long euler_characteristic() const;
};

/// How the centralizer C(g) acts on the components of Y^g and their
/// cohomology. Entry [i] belongs to centralizer[i].
struct CentralizerActionData {
  Element g = 0;
  std::vector<Element> centralizer;
  std::vector<std::vector<int>> permutation;           // [h][component] -> component
  std::vector<std::vector<std::vector<long>>> traces;  // [h][component][degree]
};

enum class SpaceKind { LinearProjective, ProductProjective, WeightedProjective, Custom };

const char* to_string(SpaceKind k);

struct LinearData {
  std::vector<Character> characters;
};

struct ProductData {
  std::vector<int> factor_dims;
  /// per abelian generator, image list of the factor permutation
  std::vector<std::vector<int>> generator_permutations;
  /// per element, the induced permutation of factors
  std::vector<std::vector<int>> permutation;
  /// [factor][coordinate]
  std::vector<std::vector<Character>> characters;
};

struct WeightedData {
  std::vector<int> weights;
  int lcm = 1;
};

/// Action of one centralizer element on the components of a Custom class.
struct CustomAction {
  Element h = 0;
  std::vector<int> permutation;
  std::vector<std::vector<long>> traces;  // [component][degree]
};

struct CustomClass {
  Element element = 0;  // any element of the class
  std::vector<FixedComponent> components;
  std::vector<CustomAction> action;  // empty: trivial action
};

struct CustomData {
  int dimension = 0;
  /// indexed by conjugacy-class index of the group
  std::vector<CustomClass> classes;
  std::optional<bool> generically_free;
  std::optional<bool> effective;
  /// chi(Y^g cap Y^h) for commuting pairs, when supplied
  std::map<std::pair<Element, Element>, long> pair_euler;
  bool action_defaulted = false;
};

/// A variety with a finite group action, described by fixed-locus data.
class GSpace {
 public:
  using Data = std::variant<LinearData, ProductData, WeightedData, CustomData>;

  GSpace(FiniteGroup group, FiniteGroup sector_group, int dimension, Data data);

  SpaceKind kind() const;
  /// The acting group (trivial for weighted projective spaces).
  const FiniteGroup& group() const { return group_; }
  /// The group indexing twisted sectors; for weighted projective spaces the
  /// cyclic group mu_L, L = lcm of the weights, otherwise group().
  const FiniteGroup& sector_group() const { return sector_group_; }
  int dimension() const { return dimension_; }
  bool is_builtin() const { return kind() != SpaceKind::Custom; }
  bool effective() const { return effective_; }

  const Data& data() const { return data_; }
  const LinearData& linear() const { return std::get<LinearData>(data_); }
  const ProductData& product() const { return std::get<ProductData>(data_); }
  const WeightedData& weighted() const { return std::get<WeightedData>(data_); }
  const CustomData& custom() const { return std::get<CustomData>(data_); }

  /// Label for a sector-group element: "1/2" for roots of unity of a
  /// weighted space, the group element label otherwise.
  std::string sector_label(Element g) const;

 private:
  FiniteGroup group_;
  FiniteGroup sector_group_;
  int dimension_;
  Data data_;
  bool effective_ = true;
};

/// Diagonal action on P^d through d+1 characters.
GSpace build_linear_projective(const FiniteGroup& G, std::vector<Character> characters);

/// Product of projective spaces, factors permuted by `generator_permutations`
/// (one image list per cyclic factor of G) and scaled coordinatewise by
/// `characters` ([factor][coordinate]; empty means trivial).
GSpace build_product_projective(const FiniteGroup& G, std::vector<int> factor_dims,
                                std::vector<std::vector<int>> generator_permutations,
                                std::vector<std::vector<Character>> characters);

GSpace build_weighted_projective(std::vector<int> weights);

/// `classes` may list classes in any order and by any member; every
/// conjugacy class must appear exactly once.
GSpace build_custom(const FiniteGroup& G, int dimension, std::vector<CustomClass> classes,
                    std::optional<bool> generically_free = std::nullopt,
                    std::optional<bool> effective = std::nullopt,
                    std::map<std::pair<Element, Element>, long> pair_euler = {});

/// Components of Y^g sorted by label.
std::vector<FixedComponent> fixed_locus(const GSpace& S, Element g);

/// Components (dimension and Betti numbers only) of the locus fixed by every
/// listed element; nullopt when a Custom space does not determine it.
std::optional<std::vector<FixedComponent>> common_fixed_locus(const GSpace& S,
                                                              std::span<const Element> elements);

CentralizerActionData cohomology_action(const GSpace& S, Element g);

struct Freeness {
  bool generically_free = false;
  std::optional<Element> witness;  // a non-identity element acting trivially
};
Freeness is_generically_free(const GSpace& S);

/// Betti numbers of the whole space.
std::vector<long> total_betti(const GSpace& S);

/// Trace of g^* on H^*(S), from the action on cohomology of the whole space
/// (built-ins only).
long lefschetz_number(const GSpace& S, Element g);

/// Elements acting trivially (the ineffective kernel), ascending.
std::vector<Element> ineffective_kernel(const GSpace& S);

/// Tangent characters at a point of each component of Y^G (abelian
/// built-ins). `characters` has dimension() entries, tangent directions
/// along the component included as trivial characters.
struct TangentData {
  FixedComponent component;
  std::vector<Character> characters;
};
std::vector<TangentData> fixed_point_tangents(const GSpace& S);

/// Betti numbers of a product of projective spaces, and the trace of a
/// block permutation on its cohomology: blocks of dimension dims[i],
/// permuted by sigma (sigma empty: identity).
std::vector<long> kunneth_traces(std::span<const int> dims, std::span<const int> sigma);

}  // namespace orbi
