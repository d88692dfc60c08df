#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "rotgroup/error.hpp"

using namespace rotgroup;
using testing_helpers::Q;

namespace {

FiniteRotGroup group_of(std::vector<Rot3> gens) { return generate_closure(gens, 200); }

FiniteRotGroup d8() { return group_of({theta(Q("1,1,0,0")), theta(Q("0,0,1,0"))}); }

FiniteRotGroup corpus_group(const std::string& name) {
  for (const auto& e : standard_corpus()) {
    if (e.name == name) return generate_closure(e.generators, 200);
  }
  throw std::runtime_error("no corpus entry " + name);
}

// P3 by its definition: commuting is transitive on non-identity elements.
bool transitive_oracle(const FiniteRotGroup& g, const Subgroup& excluded) {
  const std::size_t n = g.order();
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex y = 0; y < n; ++y)
      for (ElementIndex z = 0; z < n; ++z) {
        if (excluded.contains(x) || excluded.contains(y) || excluded.contains(z)) continue;
        const auto comm = [&](ElementIndex a, ElementIndex b) {
          return g.element(a) * g.element(b) == g.element(b) * g.element(a);
        };
        if (comm(x, y) && comm(x, z) && !comm(y, z)) return false;
      }
  return true;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("tag names") {
  for (PropertyTag t : kAllPropertyTags) CHECK(parse_property_tag(to_string(t)) == t);
  CHECK_FALSE(parse_property_tag("P9").has_value());
  CHECK(std::size(kAllPropertyTags) == 11);
}

TEST_CASE("commutative transitivity fails on D8 but holds off the center") {
  const FiniteRotGroup g = d8();
  const PropertyReport p3 = check_property(g, PropertyTag::P3);
  CHECK_FALSE(p3.holds);
  REQUIRE(p3.witness);
  REQUIRE(p3.witness->elements.size() == 3);
  CHECK(g.element(p3.witness->elements[0]) == theta(Q("0,1,0,0")));
  CHECK(replay_witness(g, p3));
  CHECK(check_property(g, PropertyTag::R3).holds);
  CHECK(transitive_oracle(g, center(g)));
  CHECK_FALSE(transitive_oracle(g, g.trivial()));
}

TEST_CASE("P3 and R3 agree with the definition on the corpus") {
  for (const auto& [name, g] : build_corpus(standard_corpus(true))) {
    CAPTURE(name);
    CHECK(check_property(g, PropertyTag::P3).holds == transitive_oracle(g, g.trivial()));
    CHECK(check_property(g, PropertyTag::R3).holds == transitive_oracle(g, center(g)));
  }
}

TEST_CASE("D12 is C2 × S3, so P4 fails and P5 holds") {
  for (const char* name : {"D12", "D12(sqrt3)"}) {
    CAPTURE(name);
    const FiniteRotGroup g = corpus_group(name);
    const PropertyReport p4 = check_property(g, PropertyTag::P4);
    CHECK_FALSE(p4.holds);
    REQUIRE(p4.witness);
    REQUIRE(p4.witness->decomposition);
    const Decomposition& dec = *p4.witness->decomposition;
    CHECK(p4.witness->subgroup->order() == 12);
    CHECK(dec.factor_h == center(g));
    CHECK(classify_iso_type(g, dec.factor_k) == IsoType{IsoFamily::Dihedral, 3});
    CHECK(replay_witness(g, p4));
    CHECK(check_property(g, PropertyTag::P5).holds);
  }
}

TEST_CASE("subgroup-quantified properties hold on every corpus group") {
  for (const auto& [name, g] : build_corpus(standard_corpus())) {
    CAPTURE(name);
    for (PropertyTag t : {PropertyTag::P5, PropertyTag::P6, PropertyTag::P7, PropertyTag::R6}) {
      CHECK(check_property(g, t).holds);
    }
  }
}

TEST_CASE("P8 is vacuous") {
  const PropertyReport r = check_property(d8(), PropertyTag::P8);
  CHECK(r.holds);
  CHECK(r.vacuous);
  CHECK_FALSE(r.witness);
}

TEST_CASE("abelian groups satisfy every tag") {
  for (const char* name : {"C1", "C2", "C3", "C4", "C6", "V4"}) {
    CAPTURE(name);
    const FiniteRotGroup g = corpus_group(name);
    REQUIRE(check_property(g, PropertyTag::P1).holds);
    for (PropertyTag t : kAllPropertyTags) CHECK(check_property(g, t).holds);
  }
}

TEST_CASE("CSA fails on the non-abelian corpus groups") {
  for (const char* name : {"D6", "D8", "A4", "S4"}) {
    CAPTURE(name);
    const FiniteRotGroup g = corpus_group(name);
    const PropertyReport r = check_property(g, PropertyTag::P2);
    CHECK_FALSE(r.holds);
    CHECK(replay_witness(g, r));
    CHECK_FALSE(is_malnormal(g, *r.witness->subgroup));
  }
}

TEST_CASE("every failing report carries a witness that replays") {
  std::size_t failures = 0;
  for (const auto& [name, g] : build_corpus(standard_corpus())) {
    for (PropertyTag t : kAllPropertyTags) {
      const PropertyReport r = check_property(g, t);
      CHECK(r.holds == !r.witness.has_value());
      if (!r.holds) {
        ++failures;
        CAPTURE(name);
        CAPTURE(to_string(t));
        CHECK(replay_witness(g, r));
      } else {
        CHECK_FALSE(replay_witness(g, r));
      }
    }
  }
  CHECK(failures > 10);
}

TEST_CASE("tampered witnesses do not replay") {
  const FiniteRotGroup g = d8();
  PropertyReport p1 = check_property(g, PropertyTag::P1);
  REQUIRE_FALSE(p1.holds);
  p1.witness->elements = {0, 1};
  CHECK_FALSE(replay_witness(g, p1));

  const FiniteRotGroup h = corpus_group("D12");
  PropertyReport p4 = check_property(h, PropertyTag::P4);
  REQUIRE_FALSE(p4.holds);
  // Swapping the factors is the same unordered decomposition and still replays.
  std::swap(p4.witness->decomposition->factor_h, p4.witness->decomposition->factor_k);
  CHECK(replay_witness(h, p4));
  p4.witness->decomposition->factor_k = h.whole();
  CHECK_FALSE(replay_witness(h, p4));
}

TEST_CASE("implication edges") {
  const auto edges = implication_edges();
  CHECK(edges.size() == 12);
  CHECK(std::find(edges.begin(), edges.end(), std::pair{PropertyTag::P4, PropertyTag::R4}) != edges.end());
  CHECK(std::find(edges.begin(), edges.end(), std::pair{PropertyTag::P7, PropertyTag::P8}) != edges.end());
}

TEST_CASE("implication harness on small corpora") {
  {
    const std::vector<NamedGroup> corpus{{"C6", corpus_group("C6")}};
    const ImplicationReport r = implication_harness(corpus);
    CHECK(r.violations.empty());
    CHECK(r.vacuous_edges == 0);
    CHECK(r.edges_checked == 12);
  }
  {
    const std::vector<NamedGroup> corpus{{"D8", d8()}};
    const ImplicationReport r = implication_harness(corpus);
    CHECK(r.violations.empty());
    std::map<PropertyTag, bool> holds;
    for (const auto& rep : r.verdicts.front().second) holds[rep.tag] = rep.holds;
    CHECK_FALSE(holds[PropertyTag::P3]);
    for (PropertyTag t : {PropertyTag::P4, PropertyTag::P5, PropertyTag::P6, PropertyTag::P7, PropertyTag::P8})
      CHECK(holds[t]);
    // P1, P2 and P3 fail, so every edge out of them is vacuous.
    CHECK(r.vacuous_edges == 4);
  }
  {
    const std::vector<NamedGroup> corpus{{"D12", corpus_group("D12")}};
    const ImplicationReport r = implication_harness(corpus);
    CHECK(r.violations.empty());
    std::map<PropertyTag, bool> holds;
    for (const auto& rep : r.verdicts.front().second) holds[rep.tag] = rep.holds;
    CHECK_FALSE(holds[PropertyTag::P4]);
    CHECK(holds[PropertyTag::P5]);
  }
}

TEST_CASE("implication harness on the full corpus") {
  const auto corpus = build_corpus(standard_corpus());
  const ImplicationReport r = implication_harness(corpus);
  CHECK(r.groups_checked == corpus.size());
  CHECK(r.edges_checked == 12 * corpus.size());
  CHECK(r.violations.empty());
}

}  // TEST_SUITE
