#include "rotgroup/properties.hpp"

#include <algorithm>
#include <array>

#include "rotgroup/error.hpp"

namespace rotgroup {

namespace {

bool is_c2(const Subgroup& s) { return s.order() == 2; }

bool all_nontrivial_are_involutions(const FiniteRotGroup& g, const Subgroup& s) {
  return std::all_of(s.members().begin(), s.members().end(), [&](ElementIndex x) {
    return x == FiniteRotGroup::identity_index() || g.element_order(x) == 2;
  });
}

/// Whether the decomposition S = H x K has the shape the tag demands.
bool decomposition_conforms(PropertyTag tag, const FiniteRotGroup& g, const Subgroup& center_g,
                            const Decomposition& dec) {
  const Subgroup& h = dec.factor_h;
  const Subgroup& k = dec.factor_k;
  const bool ab_h = g.is_abelian(h);
  const bool ab_k = g.is_abelian(k);
  const bool abelian = ab_h && ab_k;
  switch (tag) {
    case PropertyTag::P4:
      return abelian;
    case PropertyTag::P5: {
      auto shaped = [&](const Subgroup& c2, bool ab_other, const Subgroup& other) {
        return is_c2(c2) && !ab_other && g.has_involution(other);
      };
      return abelian || shaped(h, ab_k, k) || shaped(k, ab_h, h);
    }
    case PropertyTag::P6: {
      if (abelian) return true;
      if (ab_h == ab_k) return false;
      const Subgroup& ab = ab_h ? h : k;
      const Subgroup& non_ab = ab_h ? k : h;
      return g.has_involution(non_ab) && all_nontrivial_are_involutions(g, ab);
    }
    case PropertyTag::P7:
      return abelian || (g.has_involution(h) && g.has_involution(k));
    case PropertyTag::P8:
      return true;
    case PropertyTag::R4:
      return abelian || (!ab_h && k.is_subset_of(center_g)) || (!ab_k && h.is_subset_of(center_g));
    case PropertyTag::R6:
      return ab_h || ab_k;
    default:
      return true;
  }
}

std::optional<PropertyWitness> find_noncommuting_pair(const FiniteRotGroup& g) {
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = a + 1; b < g.order(); ++b) {
      if (!g.commute(a, b)) return PropertyWitness{{a, b}, std::nullopt, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<PropertyWitness> find_non_malnormal(const FiniteRotGroup& g) {
  for (const Subgroup& h : maximal_abelian_subgroups(g)) {
    for (ElementIndex x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      for (ElementIndex y : h.members()) {
        if (y == FiniteRotGroup::identity_index()) continue;
        if (h.contains(g.multiply(g.multiply(x, y), g.inverse(x)))) return PropertyWitness{{x, y}, h, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

std::optional<PropertyWitness> find_transitivity_failure(const FiniteRotGroup& g, const Subgroup& excluded) {
  std::vector<ElementIndex> pool;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (!excluded.contains(x)) pool.push_back(x);
  }
  for (ElementIndex x : pool) {
    for (ElementIndex y : pool) {
      if (!g.commute(x, y)) continue;
      for (ElementIndex z : pool) {
        if (g.commute(x, z) && !g.commute(y, z)) return PropertyWitness{{x, y, z}, std::nullopt, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

std::optional<PropertyWitness> find_nonconforming_decomposition(const FiniteRotGroup& g, PropertyTag tag) {
  const auto all = subgroups(g);
  const Subgroup z = center(g);
  for (const Subgroup& s : all) {
    if (s.order() < 4) continue;  // a non-trivial product needs two factors of order >= 2
    for (Decomposition& dec : direct_product_decompositions(g, s, all)) {
      if (!decomposition_conforms(tag, g, z, dec)) return PropertyWitness{{}, s, std::move(dec)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(PropertyTag tag) {
  switch (tag) {
    case PropertyTag::P1: return "P1";
    case PropertyTag::P2: return "P2";
    case PropertyTag::P3: return "P3";
    case PropertyTag::P4: return "P4";
    case PropertyTag::P5: return "P5";
    case PropertyTag::P6: return "P6";
    case PropertyTag::P7: return "P7";
    case PropertyTag::P8: return "P8";
    case PropertyTag::R3: return "R3";
    case PropertyTag::R4: return "R4";
    case PropertyTag::R6: return "R6";
  }
  return "?";
}

std::optional<PropertyTag> parse_property_tag(std::string_view text) {
  for (PropertyTag tag : kAllPropertyTags) {
    if (to_string(tag) == text) return tag;
  }
  return std::nullopt;
}

PropertyReport check_property(const FiniteRotGroup& g, PropertyTag tag) {
  PropertyReport report;
  report.tag = tag;
  switch (tag) {
    case PropertyTag::P1:
      report.witness = find_noncommuting_pair(g);
      break;
    case PropertyTag::P2:
      if (g.order() > kMaxEnumerableOrder) throw GroupTooLarge(g.order(), kMaxEnumerableOrder);
      report.witness = find_non_malnormal(g);
      break;
    case PropertyTag::P3:
      report.witness = find_transitivity_failure(g, g.trivial());
      break;
    case PropertyTag::R3:
      report.witness = find_transitivity_failure(g, center(g));
      break;
    case PropertyTag::P8:
      // Every non-trivial finite group has torsion, so there is nothing to check.
      if (g.order() > kMaxEnumerableOrder) throw GroupTooLarge(g.order(), kMaxEnumerableOrder);
      report.vacuous = true;
      break;
    default:
      if (g.order() > kMaxEnumerableOrder) throw GroupTooLarge(g.order(), kMaxEnumerableOrder);
      report.witness = find_nonconforming_decomposition(g, tag);
      break;
  }
  report.holds = !report.witness.has_value();
  return report;
}

bool replay_witness(const FiniteRotGroup& g, const PropertyReport& report) {
  if (report.holds || !report.witness) return false;
  const PropertyWitness& w = *report.witness;
  const auto in_range = [&](ElementIndex i) { return i < g.order(); };
  if (!std::all_of(w.elements.begin(), w.elements.end(), in_range)) return false;
  const ElementIndex e = FiniteRotGroup::identity_index();

  switch (report.tag) {
    case PropertyTag::P1:
      return w.elements.size() == 2 && !g.commute(w.elements[0], w.elements[1]);
    case PropertyTag::P2: {
      if (!w.subgroup || w.elements.size() != 2) return false;
      const Subgroup& h = *w.subgroup;
      if (!g.is_subgroup(h) || !g.is_abelian(h)) return false;
      // Maximal among abelian subgroups iff nothing outside H centralizes H.
      for (ElementIndex y = 0; y < g.order(); ++y) {
        if (h.contains(y)) continue;
        const bool centralizes = std::all_of(h.members().begin(), h.members().end(),
                                             [&](ElementIndex a) { return g.commute(a, y); });
        if (centralizes) return false;
      }
      const ElementIndex x = w.elements[0];
      const ElementIndex y = w.elements[1];
      return !h.contains(x) && y != e && h.contains(y) && h.contains(g.multiply(g.multiply(x, y), g.inverse(x)));
    }
    case PropertyTag::P3:
    case PropertyTag::R3: {
      if (w.elements.size() != 3) return false;
      const Subgroup excluded = report.tag == PropertyTag::P3 ? g.trivial() : center(g);
      const ElementIndex x = w.elements[0], y = w.elements[1], z = w.elements[2];
      if (excluded.contains(x) || excluded.contains(y) || excluded.contains(z)) return false;
      return g.commute(x, y) && g.commute(x, z) && !g.commute(y, z);
    }
    case PropertyTag::P8:
      return false;
    default: {
      if (!w.subgroup || !w.decomposition) return false;
      if (!g.is_subgroup(*w.subgroup) || !is_valid_decomposition(g, *w.subgroup, *w.decomposition)) return false;
      return !decomposition_conforms(report.tag, g, center(g), *w.decomposition);
    }
  }
}

std::span<const std::pair<PropertyTag, PropertyTag>> implication_edges() {
  using T = PropertyTag;
  static constexpr std::array<std::pair<PropertyTag, PropertyTag>, 12> kEdges{{
      {T::P2, T::P3},
      {T::P3, T::P4},
      {T::P4, T::P5},
      {T::P5, T::P6},
      {T::P6, T::P7},
      {T::P7, T::P8},
      {T::P1, T::P2},
      {T::P3, T::R3},
      {T::R3, T::R4},
      {T::P4, T::R4},
      {T::P6, T::R6},
      {T::R4, T::R6},
  }};
  return kEdges;
}

ImplicationReport implication_harness(std::span<const NamedGroup> corpus) {
  ImplicationReport out;
  for (const NamedGroup& entry : corpus) {
    std::vector<PropertyReport> reports;
    for (PropertyTag tag : kAllPropertyTags) reports.push_back(check_property(entry.group, tag));
    auto holds = [&](PropertyTag tag) {
      return std::find_if(reports.begin(), reports.end(), [&](const PropertyReport& r) { return r.tag == tag; })->holds;
    };
    for (const auto& [source, target] : implication_edges()) {
      ++out.edges_checked;
      if (!holds(source)) {
        ++out.vacuous_edges;
      } else if (!holds(target)) {
        out.violations.push_back({entry.name, source, target});
      }
    }
    ++out.groups_checked;
    out.verdicts.emplace_back(entry.name, std::move(reports));
  }
  return out;
}

}  // namespace rotgroup
