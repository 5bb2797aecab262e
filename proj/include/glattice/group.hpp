#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace glattice {

/// 0-based permutation: p[i] is the image of point i. Products compose
/// right to left, (p * q)[i] = p[q[i]].
using Perm = std::vector<int>;

Perm perm_identity(std::size_t degree);
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);
/// Parses 1-based cycle notation such as "(1 2)(3 4)" or "()".
Perm perm_from_cycles(std::string_view text, std::size_t degree);
/// 1-based cycle notation; "()" for the identity.
std::string perm_to_cycles(const Perm& p);

/// One letter of a group word: generator index and exponent +1 or -1.
struct Letter {
  std::size_t gen;
  int exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// How a group was built, which decides whether a presentation is known.
struct ShapeTag {
  enum class Kind { None, Trivial, Symmetric, Cyclic, Klein4, Product };
  Kind kind = Kind::None;
  std::size_t n = 0;               // Symmetric degree or cyclic order
  std::vector<ShapeTag> factors;   // Product only
  std::vector<std::size_t> factor_gens;  // generator count per factor
};

class FiniteGroup;

struct Presentation {
  std::size_t num_generators = 0;
  std::vector<Word> relators;
  /// realization[i] = element index of abstract generator i.
  std::vector<std::size_t> realization;

  std::string str() const;
};

/// A finite permutation group with an explicit, sorted element list.
///
/// Elements are sorted lexicographically, so the identity is element 0.
/// Every element has a fixed word in the generators, found breadth-first.
class FiniteGroup {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  FiniteGroup() = default;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }
  const ShapeTag& shape() const noexcept { return shape_; }

  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  /// Index of a permutation, or npos.
  std::size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) != npos; }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;

  /// Generator word for element i (positive letters only).
  Word word(std::size_t i) const;
  /// Element obtained by evaluating a word.
  std::size_t evaluate(const Word& w) const;
  /// BFS tree: element i == mul(parent(i), generators()[parent_gen(i)]).
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_gen(std::size_t i) const { return parent_gen_[i]; }
  /// Elements in BFS order (identity first, each after its parent).
  const std::vector<std::size_t>& bfs_order() const noexcept { return bfs_order_; }

  FiniteGroup renamed(std::string name) const;

  friend FiniteGroup make_group(std::size_t degree, std::vector<Perm> gens, std::string name, ShapeTag shape,
                                std::size_t max_order);

 private:
  std::size_t degree_ = 0;
  std::string name_;
  ShapeTag shape_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> parent_, parent_gen_, bfs_order_;
  std::vector<std::uint32_t> table_;  // multiplication table for small groups
};

constexpr std::size_t kMaxGroupOrder = 100000;

/// Closure of `gens` inside S_degree with an explicit shape tag.
FiniteGroup make_group(std::size_t degree, std::vector<Perm> gens, std::string name, ShapeTag shape,
                       std::size_t max_order = kMaxGroupOrder);

/// S_n, 1 <= n <= 8, with the Coxeter generators (i, i+1).
FiniteGroup symmetric_group(std::size_t n);
/// C_m acting regularly on m points.
FiniteGroup cyclic_group(std::size_t m);
/// Klein four group generated by (12)(34) and (13)(24) in S_4.
FiniteGroup klein_four();
FiniteGroup trivial_group(std::size_t degree = 1);
/// G x H on disjoint supports; generators of G come first.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Closure of arbitrary generators. A single generator is tagged cyclic, two
/// commuting involutions generating a group of order 4 are tagged Klein four.
FiniteGroup from_generators(std::size_t degree, const std::vector<Perm>& gens, std::string name,
                            std::size_t max_order = kMaxGroupOrder);

/// S_{p1} x S_{p2} x ... on consecutive blocks of points, Coxeter generators
/// on each block. Blocks of size 1 contribute nothing.
FiniteGroup young_subgroup(const std::vector<std::size_t>& parts);

/// Element indices of `sub` inside `parent`; throws ContainmentError if some
/// element is missing.
std::vector<std::size_t> embed(const FiniteGroup& sub, const FiniteGroup& parent);
bool is_subgroup(const FiniteGroup& sub, const FiniteGroup& parent);

/// Subgroup of `parent` generated by the given element indices.
FiniteGroup subgroup_generated(const FiniteGroup& parent, const std::vector<std::size_t>& gens, std::string name);
/// Point stabilizer (0-based point).
FiniteGroup stabilizer(const FiniteGroup& g, std::size_t point);

/// All subgroups (|g| <= 48), sorted by order then by parent element set.
std::vector<FiniteGroup> subgroups(const FiniteGroup& g);
/// Cyclic subgroups, one per distinct subgroup, same ordering rule.
std::vector<FiniteGroup> cyclic_subgroups(const FiniteGroup& g);

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// Verified presentation for registry shapes; throws
/// UnsupportedPresentationError for other groups.
Presentation presentation(const FiniteGroup& g);
bool has_presentation(const FiniteGroup& g);

/// Left cosets gH and the permutation action of G on them.
struct CosetAction {
  std::vector<std::vector<std::size_t>> cosets;   // element indices; cosets[i][0] is the minimal representative
  std::vector<std::size_t> coset_of;              // element index -> coset index
  std::vector<Perm> generator_action;             // per generator of g
  std::size_t degree() const noexcept { return cosets.size(); }
  /// Permutation of cosets induced by element x.
  Perm action_of(const FiniteGroup& g, std::size_t x) const;
};

CosetAction coset_action(const FiniteGroup& g, const FiniteGroup& h);

/// Parses `sym(n)`, `cyclic(m)`, `klein4`, `trivial`, `gens(degree; (1 2), ...)`
/// and `product(spec, spec)`.
FiniteGroup parse_group_spec(std::string_view text, std::size_t max_order = kMaxGroupOrder);

}  // namespace glattice
