#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "rotgroup/error.hpp"

using namespace rotgroup;
using testing_helpers::M;
using testing_helpers::Q;

namespace {

FiniteRotGroup corpus_group(const std::string& name) {
  for (const auto& e : standard_corpus()) {
    if (e.name == name) return generate_closure(e.generators, 200);
  }
  throw std::runtime_error("no corpus entry " + name);
}

FiniteRotGroup d8() {
  const std::vector<Rot3> gens{theta(Q("1,1,0,0")), theta(Q("0,0,1,0"))};
  return generate_closure(gens, 100);
}

FiniteRotGroup d12_sqrt3() {
  const std::vector<Rot3> gens{M("1,0,0;0,1/2,-1/2√3;0,1/2√3,1/2", 3), Rot3::diagonal(-1, 1, -1, 3)};
  return generate_closure(gens, 100);
}

ElementIndex idx(const FiniteRotGroup& g, const Rot3& m) { return g.index_of(m).value(); }

// All subsets containing E and closed under the product, straight from the table.
std::vector<Subgroup> brute_force_subgroups(const FiniteRotGroup& g) {
  const std::size_t n = g.order();
  std::vector<Subgroup> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 = identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if ((mask >> b & 1) && !(mask >> g.multiply(a, b) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<ElementIndex> members;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1) members.push_back(a);
    }
    out.emplace_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Unordered pairs of subgroups of s whose elementwise product set is s, with
// the factors commuting and meeting only in E.
std::set<std::pair<Subgroup, Subgroup>> brute_force_decompositions(const FiniteRotGroup& g, const Subgroup& s,
                                                                   const std::vector<Subgroup>& all) {
  std::set<std::pair<Subgroup, Subgroup>> out;
  for (const Subgroup& h : all) {
    for (const Subgroup& k : all) {
      if (!(h < k) || h.is_trivial() || k.is_trivial()) continue;
      if (!h.is_subset_of(s) || !k.is_subset_of(s)) continue;
      bool ok = true;
      std::set<ElementIndex> product;
      for (ElementIndex a : h.members()) {
        for (ElementIndex b : k.members()) {
          if (a != 0 && a == b) ok = false;
          if (!g.commute(a, b)) ok = false;
          product.insert(g.multiply(a, b));
        }
      }
      if (ok && product == std::set<ElementIndex>(s.members().begin(), s.members().end())) out.insert({h, k});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("closure of the quarter-turn and half-turn pair") {
  const FiniteRotGroup g = d8();
  CHECK(g.order() == 8);
  CHECK(g.element(0).is_identity());
  CHECK(g.generator_indices().size() == 2);
  CHECK(classify_iso_type(g) == IsoType{IsoFamily::Dihedral, 4});
  // Adding the half-turn about x changes nothing: it is the square of the quarter-turn.
  const std::vector<Rot3> abc{theta(Q("0,1,0,0")), theta(Q("1,1,0,0")), theta(Q("0,0,1,0"))};
  const FiniteRotGroup g3 = generate_closure(abc, 100);
  for (const Rot3& m : g3.elements()) CHECK(g.index_of(m).has_value());
  CHECK(g3.order() == g.order());
}

TEST_CASE("closure of the √3 pair") {
  const FiniteRotGroup g = d12_sqrt3();
  CHECK(g.order() == 12);
  CHECK(g.ambient() == 3);
  CHECK(classify_iso_type(g) == IsoType{IsoFamily::Dihedral, 6});
}

TEST_CASE("closure is deterministic and idempotent") {
  for (const auto& entry : standard_corpus()) {
    const FiniteRotGroup g = generate_closure(entry.generators, 200);
    const FiniteRotGroup again = generate_closure(entry.generators, 200);
    CHECK(g.elements() == again.elements());
    const FiniteRotGroup closed = generate_closure(g.elements(), 200);
    CHECK(closed.order() == g.order());
    for (const Rot3& m : closed.elements()) CHECK(g.index_of(m).has_value());
  }
}

TEST_CASE("Cayley table agrees with matrix multiplication") {
  for (const auto& [name, g] : build_corpus(standard_corpus())) {
    for (ElementIndex a = 0; a < g.order(); ++a) {
      CHECK(g.element(g.inverse(a)) * g.element(a) == Rot3::identity(g.ambient()));
      for (ElementIndex b = 0; b < g.order(); ++b) {
        REQUIRE(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
      }
      const OrderResult r = element_order(g.element(a), 100);
      CHECK(r.order == g.element_order(a));
    }
  }
}

TEST_CASE("infinite generator pairs hit the cap") {
  const std::vector<Rot3> free_pair{theta(Q("1,2,0,0")), theta(Q("1,0,2,0"))};
  try {
    generate_closure(free_pair, 10000);
    FAIL("expected ClosureExceedsCap");
  } catch (const ClosureExceedsCap& e) {
    CHECK(e.count_so_far() > 10000);
  }
  const std::vector<Rot3> commuting{theta(Q("1,2,0,0")), theta(Q("1,4,0,0"))};
  CHECK_THROWS_AS(generate_closure(commuting, 500), ClosureExceedsCap);
  CHECK_THROWS_AS(generate_closure(std::vector<Rot3>{}, 10), std::invalid_argument);
  CHECK_THROWS_AS(generate_closure(std::vector<Rot3>{theta(Q("1,1,0,0"))}, 3), ClosureExceedsCap);
}

TEST_CASE("subgroup counts") {
  const std::vector<Rot3> c2{Rot3::diagonal(1, -1, -1)};
  CHECK(subgroups(generate_closure(c2, 10)).size() == 2);
  CHECK(subgroups(d8()).size() == 10);
  CHECK(subgroups(d12_sqrt3()).size() == 16);
  // Classical counts for the rest of the corpus.
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"C1", 1}, {"C4", 3}, {"C5", 2}, {"C6", 4}, {"V4", 5}, {"D6", 6}, {"D12", 16}, {"A4", 10}, {"S4", 30}, {"A5", 59}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    CHECK(subgroups(corpus_group(name)).size() == count);
  }
}

TEST_CASE("subgroup enumeration matches a brute-force subset scan") {
  for (const char* name : {"C6", "V4", "D6", "D8", "D12", "A4", "D12(sqrt3)"}) {
    CAPTURE(name);
    const FiniteRotGroup g = corpus_group(name);
    CHECK(subgroups(g) == brute_force_subgroups(g));
  }
}

TEST_CASE("Lagrange") {
  for (const auto& [name, g] : build_corpus(standard_corpus())) {
    for (const Subgroup& s : subgroups(g)) {
      CHECK(g.is_subgroup(s));
      CHECK(g.order() % s.order() == 0);
    }
  }
}

TEST_CASE("centers") {
  const FiniteRotGroup v4 = corpus_group("V4");
  CHECK(center(v4) == v4.whole());
  const FiniteRotGroup g = d8();
  const Subgroup z = center(g);
  CHECK(z.order() == 2);
  const Rot3 b = theta(Q("1,1,0,0"));
  CHECK(g.element(z.members()[1]) == b * b);
  CHECK(g.element(z.members()[1]) == Rot3::diagonal(1, -1, -1));
  const FiniteRotGroup h = d12_sqrt3();
  CHECK(center(h).order() == 2);
  CHECK(h.element(center(h).members()[1]) == Rot3::diagonal(1, -1, -1, 3));
}

TEST_CASE("centralizers") {
  const FiniteRotGroup g = d8();
  CHECK(centralizer(g, idx(g, Rot3::diagonal(1, -1, -1))) == g.whole());
  CHECK(centralizer(g, FiniteRotGroup::identity_index()) == g.whole());
  const FiniteRotGroup h = d12_sqrt3();
  const Subgroup cr = centralizer(h, idx(h, M("1,0,0;0,1/2,-1/2√3;0,1/2√3,1/2", 3)));
  CHECK(cr.order() == 6);
  CHECK(classify_iso_type(h, cr) == IsoType{IsoFamily::Cyclic, 6});
  CHECK(centralizer(h, 0) == h.whole());
}

TEST_CASE("centralizers of elements of order at least 3 share their axis") {
  for (const auto& [name, g] : build_corpus(standard_corpus())) {
    for (ElementIndex x = 0; x < g.order(); ++x) {
      if (g.element_order(x) < 3) continue;
      const Axis ax = axis_of(g.element(x));
      const Subgroup cz = centralizer(g, x);
      for (ElementIndex y : cz.members()) {
        if (y != 0) CHECK(axis_of(g.element(y)) == ax);
      }
    }
  }
  // A half-turn is the exception: its perpendicular half-turns centralize it too.
  const FiniteRotGroup v4 = corpus_group("V4");
  CHECK_FALSE(axis_of(v4.element(1)) == axis_of(v4.element(2)));
}

TEST_CASE("maximal abelian subgroups") {
  const FiniteRotGroup c6 = corpus_group("C6");
  CHECK(maximal_abelian_subgroups(c6) == std::vector<Subgroup>{c6.whole()});

  const FiniteRotGroup g = d8();
  const auto mas = maximal_abelian_subgroups(g);
  REQUIRE(mas.size() == 3);
  std::multiset<std::string> types;
  for (const Subgroup& s : mas) types.insert(to_string(classify_iso_type(g, s)));
  CHECK(types == std::multiset<std::string>{"C4", "Dihedral(2)", "Dihedral(2)"});

  const FiniteRotGroup h = d12_sqrt3();
  const auto all = subgroups(h);
  const auto s3 = std::find_if(all.begin(), all.end(), [&](const Subgroup& s) {
    return s.order() == 6 && !h.is_abelian(s);
  });
  REQUIRE(s3 != all.end());
  const auto in_s3 = maximal_abelian_subgroups(h, *s3);
  std::multiset<std::size_t> orders;
  for (const Subgroup& s : in_s3) orders.insert(s.order());
  CHECK(orders == std::multiset<std::size_t>{2, 2, 2, 3});

  // Oracle: abelian subgroups not strictly inside another abelian subgroup.
  for (const char* name : {"D12", "A4", "S4"}) {
    const FiniteRotGroup k = corpus_group(name);
    const auto subs = subgroups(k);
    std::vector<Subgroup> expect;
    for (const Subgroup& s : subs) {
      if (!k.is_abelian(s)) continue;
      const bool dominated = std::any_of(subs.begin(), subs.end(), [&](const Subgroup& t) {
        return t.order() > s.order() && k.is_abelian(t) && s.is_subset_of(t);
      });
      if (!dominated) expect.push_back(s);
    }
    auto got = maximal_abelian_subgroups(k);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("malnormality") {
  const FiniteRotGroup g = d8();
  CHECK(is_malnormal(g, g.whole()));
  CHECK_FALSE(is_malnormal(g, center(g)));
  CHECK(is_malnormal(g, g.trivial()));
  CHECK_THROWS_AS(is_malnormal(g, Subgroup({0, 1, 2})), NotASubgroup);

  const FiniteRotGroup h = d12_sqrt3();
  const auto all = subgroups(h);
  const Subgroup s3 = *std::find_if(all.begin(), all.end(), [&](const Subgroup& s) {
    return s.order() == 6 && !h.is_abelian(s);
  });
  for (const Subgroup& t : all) {
    if (!t.is_subset_of(s3) || t.is_trivial() || t == s3) continue;
    // Inside S3 the rotation subgroup is normal, each reflection subgroup malnormal.
    CHECK(is_malnormal(h, s3, t) == (t.order() == 2));
  }
}

TEST_CASE("direct product decompositions") {
  CHECK(direct_product_decompositions(d8()).empty());

  const FiniteRotGroup v4 = corpus_group("V4");
  const auto vd = direct_product_decompositions(v4);
  CHECK(vd.size() == 3);
  for (const auto& d : vd) CHECK(d.factor_h.order() * d.factor_k.order() == 4);

  const FiniteRotGroup h = d12_sqrt3();
  const auto hd = direct_product_decompositions(h);
  // One S3 complement of the center for each of the two reflection classes.
  CHECK(hd.size() == 2);
  for (const auto& d : hd) {
    CHECK(d.factor_h == center(h));
    CHECK(classify_iso_type(h, d.factor_k) == IsoType{IsoFamily::Dihedral, 3});
  }
  const auto types = decomposition_types(h, hd);
  REQUIRE(types.size() == 1);
  CHECK(to_string(types.front()) == "C2 × Dihedral(3)");

  CHECK(direct_product_decompositions(corpus_group("C6")).size() == 1);
  CHECK(direct_product_decompositions(corpus_group("C4")).empty());
  CHECK(direct_product_decompositions(corpus_group("A4")).empty());
}

TEST_CASE("decompositions match a brute-force pair scan on every small subgroup") {
  for (const auto& [name, g] : build_corpus(standard_corpus())) {
    const auto all = subgroups(g);
    for (const Subgroup& s : all) {
      if (s.order() > 24) continue;
      const auto got = direct_product_decompositions(g, s, all);
      std::set<std::pair<Subgroup, Subgroup>> got_set;
      for (const auto& d : got) {
        CHECK(is_valid_decomposition(g, s, d));
        CHECK(d.factor_h < d.factor_k);
        got_set.insert({d.factor_h, d.factor_k});
      }
      CHECK(got_set.size() == got.size());
      REQUIRE_MESSAGE(got_set == brute_force_decompositions(g, s, all), name);
    }
  }
}

TEST_CASE("classification") {
  const std::vector<Rot3> ij{theta(Q("0,1,0,0")), theta(Q("0,0,1,0"))};
  const FiniteRotGroup v4 = generate_closure(ij, 10);
  CHECK(v4.order() == 4);
  CHECK(classify_iso_type(v4) == IsoType{IsoFamily::Dihedral, 2});
  for (const auto& entry : standard_corpus()) {
    CAPTURE(entry.name);
    CHECK(classify_iso_type(generate_closure(entry.generators, 200)) == entry.expected);
  }
  CHECK(to_string(IsoType{IsoFamily::Cyclic, 4}) == "C4");
  CHECK(to_string(IsoType{IsoFamily::IcosahedralA5, 0}) == "A5");
}

TEST_CASE("word search") {
  const std::vector<Rot3> half{theta(Q("0,1,0,0"))};
  const auto r = word_no_relation_search(half, 4);
  CHECK_FALSE(r.all_distinct);
  CHECK(to_string(r.relation) == "g1^2");

  const std::vector<Rot3> free_pair{theta(Q("1,2,0,0")), theta(Q("1,0,2,0"))};
  const auto f = word_no_relation_search(free_pair, 8);
  CHECK(f.all_distinct);
  CHECK_FALSE(f.abelian_mode);
  std::size_t expected = 1, layer = 4;
  for (int len = 1; len <= 8; ++len, layer *= 3) expected += layer;
  CHECK(f.count == expected);
  CHECK(f.count == 13121);

  const std::vector<Rot3> commuting{theta(Q("1,2,0,0")), theta(Q("1,4,0,0"))};
  const auto c = word_no_relation_search(commuting, 10);
  CHECK(c.all_distinct);
  CHECK(c.abelian_mode);
  CHECK(c.count == 21 * 21);

  const std::vector<Rot3> d8_gens{theta(Q("1,1,0,0")), theta(Q("0,0,1,0"))};
  const auto d = word_no_relation_search(d8_gens, 4);
  CHECK_FALSE(d.all_distinct);
  CHECK(evaluate_word(d8_gens, d.relation).is_identity());
  CHECK_FALSE(d.relation.empty());

  CHECK_THROWS_AS(word_no_relation_search(free_pair, 13), DepthTooLarge);
  CHECK(to_string(Word{}) == "e");
  CHECK(to_string(Word{1, 1, -2}) == "g1^2 g2^-1");
}

TEST_CASE("relations among the half-turn, the Pythagorean rotation and the y half-turn") {
  const Rot3 a = theta(Q("0,1,0,0")), bt = theta(Q("1,2,0,0")), c = theta(Q("0,0,1,0"));
  CHECK(a * bt == bt * a);
  CHECK(a * c == c * a);
  CHECK(c * bt == bt.inverse() * c);
  for (std::int64_t n = -50; n <= 50; ++n) {
    CHECK_FALSE(a == power(bt, n));
    CHECK_FALSE(a == power(bt, n) * c);
  }
  const Rot3 b = theta(Q("1,1,0,0"));
  CHECK(a * b == b * a);
  CHECK_FALSE(b * c == c * b);
  CHECK(a == b * b);
}

}  // TEST_SUITE
