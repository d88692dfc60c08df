#pragma once

/**
 * @file properties.hpp
 * @brief Group properties about commutation and direct-product subgroups,
 *        decided exhaustively on finite rotation groups.
 *
 *   P1  abelian
 *   P2  every maximal abelian subgroup is malnormal (CSA)
 *   P3  commutation is transitive on G \ {1}
 *   R3  commutation is transitive on G \ Z(G)
 *   P4  every non-trivial direct-product subgroup is abelian
 *   P5  ... or exactly one factor is C2 and the other is non-abelian with an involution
 *   P6  ... or exactly one factor is abelian, the non-abelian one has an
 *           involution and every non-trivial element of the abelian one is an involution
 *   P7  ... or both factors contain an involution
 *   P8  every torsion-free such subgroup is abelian (vacuous for finite groups)
 *   R4  ... or one factor is non-abelian and the other lies in Z(G)
 *   R6  in every such subgroup at least one factor is abelian
 *
 * "Such subgroup" ranges over every subgroup S of G and every internal
 * decomposition S = H x K with H, K non-trivial.
 */

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rotgroup/group.hpp"

namespace rotgroup {

enum class PropertyTag { P1, P2, P3, P4, P5, P6, P7, P8, R3, R4, R6 };

inline constexpr PropertyTag kAllPropertyTags[] = {
    PropertyTag::P1, PropertyTag::P2, PropertyTag::P3, PropertyTag::P4, PropertyTag::P5, PropertyTag::P6,
    PropertyTag::P7, PropertyTag::P8, PropertyTag::R3, PropertyTag::R4, PropertyTag::R6,
};

std::string to_string(PropertyTag tag);
std::optional<PropertyTag> parse_property_tag(std::string_view text);

/// Counterexample to a property. Which fields are set depends on the tag:
/// P1 elements {a, b}; P2 subgroup H plus elements {x, h}; P3/R3 elements
/// {x, y, z}; decomposition tags subgroup S plus decomposition.
struct PropertyWitness {
  std::vector<ElementIndex> elements;
  std::optional<Subgroup> subgroup;
  std::optional<Decomposition> decomposition;
};

struct PropertyReport {
  PropertyTag tag = PropertyTag::P1;
  bool holds = true;
  bool vacuous = false;  // P8 on a finite group
  std::optional<PropertyWitness> witness;
};

/// Throws GroupTooLarge for subgroup-quantified tags when |G| exceeds the enumeration limit.
PropertyReport check_property(const FiniteRotGroup& g, PropertyTag tag);

/// Re-evaluates the witness of a failing report from scratch; true iff it still violates the property.
bool replay_witness(const FiniteRotGroup& g, const PropertyReport& report);

/// Implication edges source -> target between the properties.
std::span<const std::pair<PropertyTag, PropertyTag>> implication_edges();

struct NamedGroup {
  std::string name;
  FiniteRotGroup group;
};

struct ImplicationViolation {
  std::string group;
  PropertyTag source;
  PropertyTag target;
};

struct ImplicationReport {
  std::size_t groups_checked = 0;
  std::size_t edges_checked = 0;
  std::size_t vacuous_edges = 0;  // source fails
  std::vector<ImplicationViolation> violations;
  /// Property verdicts per group, in corpus order and tag order.
  std::vector<std::pair<std::string, std::vector<PropertyReport>>> verdicts;
};

ImplicationReport implication_harness(std::span<const NamedGroup> corpus);

}  // namespace rotgroup
