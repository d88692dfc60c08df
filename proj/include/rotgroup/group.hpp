#pragma once

/**
 * @file group.hpp
 * @brief Finite groups of exact rotations.
 *
 * A FiniteRotGroup stores its elements in a deterministic order (identity
 * first, then BFS layer by layer with each layer sorted entry-wise) together
 * with a full Cayley table, so every later algorithm works on indices.
 * Subgroups are sorted index sets into the owning group.
 *
 * Algorithms that enumerate subgroups are limited to groups of order
 * kMaxEnumerableOrder and throw GroupTooLarge beyond it.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rotgroup/rotation.hpp"

namespace rotgroup {

constexpr std::size_t kMaxEnumerableOrder = 200;
constexpr std::size_t kMaxWordLength = 12;

using ElementIndex = std::size_t;

/// Sorted set of element indices; always contains index 0 (the identity) when valid.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<ElementIndex> members);

  const std::vector<ElementIndex>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementIndex i) const;
  bool is_trivial() const noexcept { return members_.size() <= 1; }
  /// True iff every element of this set lies in other.
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() <=> b.order();
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<ElementIndex> members_;
};

class FiniteRotGroup {
 public:
  const std::vector<Rot3>& elements() const noexcept { return elements_; }
  const Rot3& element(ElementIndex i) const { return elements_.at(i); }
  std::size_t order() const noexcept { return elements_.size(); }
  Ambient ambient() const noexcept { return elements_.front().ambient(); }
  const std::vector<ElementIndex>& generator_indices() const noexcept { return generators_; }

  static constexpr ElementIndex identity_index() noexcept { return 0; }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const { return cayley_[a * order() + b]; }
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  /// Order of the element at index a (Cayley-table iteration).
  std::size_t element_order(ElementIndex a) const { return element_orders_[a]; }
  std::optional<ElementIndex> index_of(const Rot3& m) const;

  bool commute(ElementIndex a, ElementIndex b) const { return multiply(a, b) == multiply(b, a); }

  Subgroup whole() const;
  Subgroup trivial() const { return Subgroup({identity_index()}); }

  /// Smallest subgroup containing the given indices.
  Subgroup generated_by(std::span<const ElementIndex> gens) const;

  bool is_subgroup(const Subgroup& s) const;
  bool is_abelian(const Subgroup& s) const;
  bool is_abelian() const { return is_abelian(whole()); }
  bool has_involution(const Subgroup& s) const;

 private:
  friend FiniteRotGroup generate_closure(std::span<const Rot3> gens, std::size_t cap);

  std::vector<Rot3> elements_;
  std::vector<ElementIndex> cayley_;
  std::vector<ElementIndex> inverses_;
  std::vector<std::size_t> element_orders_;
  std::vector<ElementIndex> generators_;
  std::unordered_map<Rot3, ElementIndex, Rot3Hash> index_;
};

/// BFS closure under the generators and their inverses. Throws
/// ClosureExceedsCap once more than cap elements are found, and
/// std::invalid_argument for an empty generator list.
FiniteRotGroup generate_closure(std::span<const Rot3> gens, std::size_t cap);

/// Every subgroup of G (trivial and whole included), sorted by (order, members).
std::vector<Subgroup> subgroups(const FiniteRotGroup& g);

Subgroup center(const FiniteRotGroup& g);
Subgroup centralizer(const FiniteRotGroup& g, ElementIndex x);

std::vector<Subgroup> maximal_abelian_subgroups(const FiniteRotGroup& g);
/// Same, but for the subgroup s (quantifies over subgroups of s only).
std::vector<Subgroup> maximal_abelian_subgroups(const FiniteRotGroup& g, const Subgroup& s);

/// For all x in ambient \ H: xHx⁻¹ ∩ H = {E}. Throws NotASubgroup.
bool is_malnormal(const FiniteRotGroup& g, const Subgroup& h);
bool is_malnormal(const FiniteRotGroup& g, const Subgroup& ambient, const Subgroup& h);

/// Unordered non-trivial internal direct factorisation; factor_h has the
/// smaller (order, members) key.
struct Decomposition {
  Subgroup factor_h;
  Subgroup factor_k;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Checks the Decomposition invariants against the subgroup s.
bool is_valid_decomposition(const FiniteRotGroup& g, const Subgroup& s, const Decomposition& dec);

std::vector<Decomposition> direct_product_decompositions(const FiniteRotGroup& g, const Subgroup& s);
inline std::vector<Decomposition> direct_product_decompositions(const FiniteRotGroup& g) {
  return direct_product_decompositions(g, g.whole());
}

/// Same as above, reusing a precomputed subgroup list of g.
std::vector<Decomposition> direct_product_decompositions(const FiniteRotGroup& g, const Subgroup& s,
                                                         std::span<const Subgroup> all_subgroups);

enum class IsoFamily { Trivial, Cyclic, Dihedral, TetrahedralA4, OctahedralS4, IcosahedralA5 };

struct IsoType {
  IsoFamily family = IsoFamily::Trivial;
  std::size_t n = 1;  // Cyclic(n) / Dihedral(n); 0 otherwise
  friend bool operator==(const IsoType&, const IsoType&) = default;
  friend auto operator<=>(const IsoType&, const IsoType&) = default;
};

/// Classifies via order and element-order statistics. Throws UnrecognizedGroup.
IsoType classify_iso_type(const FiniteRotGroup& g);
IsoType classify_iso_type(const FiniteRotGroup& g, const Subgroup& s);

/// "Trivial", "C4", "Dihedral(3)", "A4", "S4", "A5".
std::string to_string(const IsoType& t);

/// Isomorphism types of the two factors, smaller type first.
using FactorTypes = std::pair<IsoType, IsoType>;

/// Distinct factor-type pairs among decs, sorted. Several internal
/// decompositions can share a type pair (D12 has two S3 complements of its
/// center), so this is at most decs.size() long.
std::vector<FactorTypes> decomposition_types(const FiniteRotGroup& g, std::span<const Decomposition> decs);

/// "C2 × Dihedral(3)".
std::string to_string(const FactorTypes& t);

/// Word over generators: letter +k is g_k, -k is g_k⁻¹ (1-based).
using Word = std::vector<int>;

/// "g1^2 g2^-1"; the empty word prints as "e".
std::string to_string(const Word& w);

struct WordSearchResult {
  bool all_distinct = true;
  std::size_t count = 0;  // words (free mode) or exponent tuples (abelian mode) examined
  Word relation;          // nontrivial word evaluating to E when !all_distinct
  bool abelian_mode = false;
};

/// Pairwise commuting generators: checks g1^m1 ... gk^mk = E only for m = 0,
/// |mi| <= max_len. Otherwise: evaluates every freely reduced word of length
/// <= max_len and reports whether all are distinct. Throws DepthTooLarge.
WordSearchResult word_no_relation_search(std::span<const Rot3> gens, std::size_t max_len);

Rot3 evaluate_word(std::span<const Rot3> gens, const Word& w);

}  // namespace rotgroup
