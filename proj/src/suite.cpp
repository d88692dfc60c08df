#include "rotgroup/suite.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "rotgroup/corpus.hpp"
#include "rotgroup/error.hpp"
#include "rotgroup/fuzz.hpp"
#include "rotgroup/group.hpp"
#include "rotgroup/properties.hpp"
#include "rotgroup/rotation.hpp"

namespace rotgroup {

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  /// Runs body; a thrown exception is a failure with the message recorded.
  void check(std::string id, std::string anchor, const std::function<bool(Values&)>& body) {
    CheckRecord rec{std::move(id), std::move(anchor), Verdict::Fail, {}};
    try {
      rec.verdict = body(rec.values) ? Verdict::Pass : Verdict::Fail;
    } catch (const std::exception& e) {
      rec.values.emplace_back("error", e.what());
    }
    report_.checks.push_back(std::move(rec));
  }

  void skip(std::string id, std::string anchor, std::string reason) {
    report_.checks.push_back({std::move(id), std::move(anchor), Verdict::Skipped, {{"reason", std::move(reason)}}});
  }

 private:
  SuiteReport& report_;
};

std::string str(std::size_t n) { return std::to_string(n); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

Rot3 matrix(std::initializer_list<const char*> entries, Ambient d = 0) {
  Rot3::Entries e;
  std::size_t i = 0;
  for (const char* s : entries) e[i++] = parse_scalar(s, d);
  return Rot3(std::move(e));
}

// ------------------------------------------------------------ fuzz checks

void fuzz_checks(Recorder& rec, const SuiteOptions& opt, Ambient d, const std::string& suffix) {
  const std::size_t n = opt.fuzz_pairs;
  const std::uint64_t base = opt.seed + static_cast<std::uint64_t>(d) * 7919;

  rec.check("fuzz.anticommutation-criterion" + suffix, "xy = -yx iff x0 = y0 = 0 and x ⊥ y", [&](Values& v) {
    QuaternionFuzzer fuzz(base + 1, d);
    std::size_t mismatches = 0, positives = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [x, y] = anticommutation_pair(fuzz);
      const bool direct = anticommutes(x, y);
      positives += direct;
      mismatches += direct != anticommutes_by_criterion(x, y);
    }
    v = {{"pairs", str(n)}, {"anticommuting", str(positives)}, {"discrepancies", str(mismatches)}};
    return mismatches == 0 && positives > 0 && positives < n;
  });

  rec.check("fuzz.commutation-criterion" + suffix, "xy = yx iff the vector parts are linearly dependent",
            [&](Values& v) {
              QuaternionFuzzer fuzz(base + 2, d);
              std::size_t mismatches = 0, positives = 0;
              for (std::size_t i = 0; i < n; ++i) {
                const auto [x, y] = commutation_pair(fuzz);
                const bool direct = commutes(x, y);
                positives += direct;
                mismatches += direct != commutes_by_minors(x, y);
              }
              v = {{"pairs", str(n)}, {"commuting", str(positives)}, {"discrepancies", str(mismatches)}};
              return mismatches == 0 && positives > 0 && positives < n;
            });

  rec.check("fuzz.commutative-transitivity" + suffix,
            "non-real x, y, z with xy = yx and xz = zx satisfy yz = zy", [&](Values& v) {
              QuaternionFuzzer fuzz(base + 3, d);
              std::size_t failures = 0;
              for (std::size_t i = 0; i < n; ++i) {
                const Quaternion x = fuzz.nonreal_quaternion();
                const Quaternion y = Quaternion::real(fuzz.scalar()) + fuzz.nonzero_scalar() * x;
                const Quaternion z = Quaternion::real(fuzz.scalar()) + fuzz.nonzero_scalar() * x;
                const bool hypothesis = commutes(x, y) && commutes(x, z) && !y.is_real() && !z.is_real();
                if (!hypothesis || !commutes(y, z)) ++failures;
              }
              v = {{"triples", str(n)}, {"failures", str(failures)}};
              return failures == 0;
            });

  rec.check("fuzz.norm-multiplicative" + suffix, "|xy|² = |x|²|y|²", [&](Values& v) {
    QuaternionFuzzer fuzz(base + 4, d);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Quaternion x = fuzz.quaternion();
      const Quaternion y = fuzz.quaternion();
      failures += !(qnorm_sq(qmul(x, y)) == qnorm_sq(x) * qnorm_sq(y));
    }
    v = {{"pairs", str(n)}, {"failures", str(failures)}};
    return failures == 0;
  });

  rec.check("fuzz.theta-homomorphism" + suffix, "θ(xy) = θ(x)θ(y) and θ(x) ∈ SO3", [&](Values& v) {
    QuaternionFuzzer fuzz(base + 5, d);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Quaternion x = fuzz.nonzero_quaternion();
      const Quaternion y = fuzz.nonzero_quaternion();
      const Rot3 tx = theta(x);
      failures += !(theta(qmul(x, y)) == tx * theta(y));
      // Re-validate through the checking constructor.
      Rot3 checked(tx.entries());
      (void)checked;
    }
    v = {{"pairs", str(n)}, {"failures", str(failures)}};
    return failures == 0;
  });

  rec.check("fuzz.theta-kernel" + suffix, "θ(λx) = θ(x) for real λ ≠ 0; θ(λ) = E", [&](Values& v) {
    QuaternionFuzzer fuzz(base + 6, d);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const QuadScalar lambda = fuzz.nonzero_rational();
      const Quaternion x = fuzz.nonzero_quaternion();
      failures += !(theta(lambda * x) == theta(x));
      failures += !theta(Quaternion::real(lambda)).is_identity();
    }
    v = {{"samples", str(n)}, {"failures", str(failures)}};
    return failures == 0;
  });

  rec.check("fuzz.trichotomy-vs-rotations" + suffix,
            "θ(x), θ(y) commute iff xy = ±yx", [&](Values& v) {
              QuaternionFuzzer fuzz(base + 7, d);
              std::size_t failures = 0;
              std::size_t counts[3] = {0, 0, 0};
              for (std::size_t i = 0; i < n; ++i) {
                const auto [x, y] = i % 2 == 0 ? anticommutation_pair(fuzz) : commutation_pair(fuzz);
                const Commutation c = commutation_trichotomy(x, y);
                ++counts[static_cast<int>(c)];
                failures += (c == Commutation::Neither) != !rot_commutes(theta(x), theta(y));
              }
              v = {{"pairs", str(n)},
                   {"commute", str(counts[0])},
                   {"anticommute", str(counts[1])},
                   {"neither", str(counts[2])},
                   {"failures", str(failures)}};
              return failures == 0 && counts[0] > 0 && counts[1] > 0 && counts[2] > 0;
            });
}

// --------------------------------------------------------- rotation checks

void theta_golden_checks(Recorder& rec) {
  auto golden = [&](std::string id, Quaternion q, Rot3 expected) {
    const std::string quat = to_string(q);
    rec.check(std::move(id), "θ(" + quat + ") has the stated matrix", [q, expected](Values& v) {
      const Rot3 m = theta(q);
      v = {{"theta", to_string(m)}, {"expected", to_string(expected)}};
      return m == expected;
    });
  };
  golden("theta.golden.1", Quaternion::of(1, 0, 0, 0), Rot3::identity());
  golden("theta.golden.i", Quaternion::of(0, 1, 0, 0), Rot3::diagonal(1, -1, -1));
  golden("theta.golden.j", Quaternion::of(0, 0, 1, 0), Rot3::diagonal(-1, 1, -1));
  golden("theta.golden.1+2i", Quaternion::of(1, 2, 0, 0),
         matrix({"1", "0", "0", "0", "-3/5", "-4/5", "0", "4/5", "-3/5"}));
  golden("theta.golden.1+2j", Quaternion::of(1, 0, 2, 0),
         matrix({"-3/5", "0", "4/5", "0", "1", "0", "-4/5", "0", "-3/5"}));
  golden("theta.golden.1+4i", Quaternion::of(1, 4, 0, 0),
         matrix({"1", "0", "0", "0", "-15/17", "-8/17", "0", "8/17", "-15/17"}));
  golden("theta.golden.1+i", Quaternion::of(1, 1, 0, 0), matrix({"1", "0", "0", "0", "0", "-1", "0", "1", "0"}));
}

void noncommuting_triple_checks(Recorder& rec) {
  const Rot3 a = named::half_turn_x();
  const Rot3 b = named::quarter_turn_x();
  const Rot3 c = named::half_turn_y();

  rec.check("triple.relations", "AB = BA and AC = CA but BC ≠ CB", [&](Values& v) {
    const bool ab = rot_commutes(a, b), ac = rot_commutes(a, c), bc = rot_commutes(b, c);
    v = {{"AB=BA", yes_no(ab)}, {"AC=CA", yes_no(ac)}, {"BC=CB", yes_no(bc)}};
    return ab && ac && !bc;
  });

  rec.check("triple.quaternion-trichotomy", "i(1+i) = (1+i)i, ij = -ji, (1+i)j ≠ ±j(1+i)", [&](Values& v) {
    const Quaternion i = Quaternion::of(0, 1, 0, 0);
    const Quaternion j = Quaternion::of(0, 0, 1, 0);
    const Quaternion one_i = Quaternion::of(1, 1, 0, 0);
    const auto t1 = commutation_trichotomy(i, one_i);
    const auto t2 = commutation_trichotomy(i, j);
    const auto t3 = commutation_trichotomy(one_i, j);
    v = {{"(i,1+i)", to_string(t1)}, {"(i,j)", to_string(t2)}, {"(1+i,j)", to_string(t3)}};
    return t1 == Commutation::Commute && t2 == Commutation::Anticommute && t3 == Commutation::Neither &&
           theta(i) == a && theta(one_i) == b && theta(j) == c;
  });

  rec.check("triple.a-is-b-squared", "A = B²", [&](Values& v) {
    v = {{"B^2", to_string(b * b)}};
    return b * b == a;
  });

  const std::vector<Rot3> abc{a, b, c};
  const std::vector<Rot3> bc{b, c};
  rec.check("d8.closure-equality", "⟨A, B, C⟩ = ⟨B, C⟩", [&](Values& v) {
    const auto g1 = generate_closure(abc, 100);
    const auto g2 = generate_closure(bc, 100);
    bool same = g1.order() == g2.order();
    for (const Rot3& m : g1.elements()) same = same && g2.index_of(m).has_value();
    v = {{"order<A,B,C>", str(g1.order())}, {"order<B,C>", str(g2.order())}};
    return same;
  });

  rec.check("d8.order-and-type", "⟨B, C⟩ is the dihedral group of order 8", [&](Values& v) {
    const auto g = generate_closure(bc, 100);
    const IsoType t = classify_iso_type(g);
    v = {{"order", str(g.order())}, {"type", to_string(t)}};
    return g.order() == 8 && t == IsoType{IsoFamily::Dihedral, 4};
  });

  rec.check("d8.indecomposable", "the dihedral group of order 8 is not a non-trivial direct product", [&](Values& v) {
    const auto g = generate_closure(bc, 100);
    const auto decs = direct_product_decompositions(g);
    v = {{"decompositions", str(decs.size())}};
    return decs.empty();
  });

  rec.check("d8.p3-fails", "commutation is not transitive on non-identity elements of ⟨B, C⟩", [&](Values& v) {
    const auto g = generate_closure(bc, 100);
    const auto report = check_property(g, PropertyTag::P3);
    if (report.holds) return false;
    const auto& w = report.witness->elements;
    v = {{"x", to_string(g.element(w[0]))}, {"y", to_string(g.element(w[1]))}, {"z", to_string(g.element(w[2]))}};
    return replay_witness(g, report) && g.element(w[0]) == a;
  });

  rec.check("d8.r3-holds", "commutation is transitive on non-central elements of ⟨B, C⟩", [&](Values& v) {
    const auto g = generate_closure(bc, 100);
    const auto report = check_property(g, PropertyTag::R3);
    v = {{"center_order", str(center(g).order())}};
    return report.holds;
  });
}

void infinite_product_checks(Recorder& rec) {
  const Rot3 a = named::half_turn_x();
  const Rot3 bt = named::pythagorean_x();
  const Rot3 c = named::half_turn_y();

  rec.check("infinite.commuting-factor", "A commutes with B̃ and with C", [&](Values& v) {
    const bool ab = rot_commutes(a, bt), ac = rot_commutes(a, c);
    v = {{"AB~=B~A", yes_no(ab)}, {"AC=CA", yes_no(ac)}};
    return ab && ac;
  });

  rec.check("infinite.dihedral-relation", "CB̃ = B̃⁻¹C and CB̃⁻¹ = B̃C", [&](Values& v) {
    v = {{"CB~", to_string(c * bt)}, {"B~^-1C", to_string(bt.inverse() * c)}};
    return c * bt == bt.inverse() * c && c * bt.inverse() == bt * c;
  });

  rec.check("infinite.order-certificate", "B̃ has infinite order", [&](Values& v) {
    const OrderResult r = element_order(bt, 100);
    const QuadScalar t = bt.trace() - QuadScalar::one();
    v = {{"order", to_string(r)}, {"trace_minus_one", to_string(t)}, {"certificate", r.certificate}};
    return r.kind == OrderKind::InfiniteCertified && t == parse_scalar("-6/5", 0) && !is_algebraic_integer(t);
  });

  rec.check("infinite.a-outside-bc", "A ∉ {B̃ⁿ, B̃ⁿC : |n| <= 50}", [&](Values& v) {
    constexpr long bound = 50;
    std::size_t hits = 0;
    Rot3 pos = Rot3::identity();
    Rot3 neg = Rot3::identity();
    const Rot3 inv = bt.inverse();
    for (long n = 0; n <= bound; ++n) {
      for (const Rot3* p : {&pos, &neg}) hits += (*p == a) + (*p * c == a);
      pos = pos * bt;
      neg = neg * inv;
    }
    v = {{"bound", std::to_string(bound)}, {"hits", str(hits)}};
    return hits == 0;
  });

  rec.check("infinite.closure-exceeds-cap", "⟨A, B̃, C⟩ is infinite", [&](Values& v) {
    const std::vector<Rot3> gens{a, bt, c};
    try {
      generate_closure(gens, 1000);
    } catch (const ClosureExceedsCap& e) {
      v = {{"cap", "1000"}, {"count_so_far", str(e.count_so_far())}};
      return true;
    }
    return false;
  });
}

// Every internal decomposition pairs the order-2 center with a Dihedral(3),
// and that is the only factor-type pair. There are two such decompositions,
// one per S3 complement of the center.
bool center_times_s3(const FiniteRotGroup& g, Values& v) {
  const auto decs = direct_product_decompositions(g);
  const auto types = decomposition_types(g, decs);
  const Subgroup z = center(g);
  v = {{"decompositions", str(decs.size())}, {"factor_types", str(types.size())}};
  for (const auto& t : types) v.emplace_back("types", to_string(t));
  const bool center_factor = std::all_of(decs.begin(), decs.end(), [&](const Decomposition& d) {
    return z.order() == 2 && d.factor_h == z;
  });
  return !decs.empty() && center_factor && types.size() == 1 &&
         types.front() == FactorTypes{IsoType{IsoFamily::Cyclic, 2}, IsoType{IsoFamily::Dihedral, 3}};
}

void sqrt3_dihedral_checks(Recorder& rec, bool rational_only) {
  const std::string anchor_type = "the √3 pair generates the dihedral group of order 12";
  const std::string anchor_dec = "the dihedral group of order 12 is C2 × S3";
  if (rational_only) {
    for (const char* id : {"d12-sqrt3.order-and-type", "d12-sqrt3.sixfold-order", "d12-sqrt3.center"}) {
      rec.skip(id, anchor_type, "skipped (needs √3)");
    }
    rec.skip("d12-sqrt3.decomposition", anchor_dec, "skipped (needs √3)");
    rec.skip("d12-sqrt3.p4-fails", anchor_dec, "skipped (needs √3)");
    rec.skip("d12-sqrt3.p5-holds", anchor_dec, "skipped (needs √3)");
    return;
  }
  const std::vector<Rot3> gens{named::sixfold_x_sqrt3(), named::half_turn_y_sqrt3()};
  const FiniteRotGroup g = generate_closure(gens, 100);

  rec.check("d12-sqrt3.order-and-type", anchor_type, [&](Values& v) {
    const IsoType t = classify_iso_type(g);
    v = {{"order", str(g.order())}, {"type", to_string(t)}};
    return g.order() == 12 && t == IsoType{IsoFamily::Dihedral, 6};
  });

  rec.check("d12-sqrt3.sixfold-order", anchor_type, [&](Values& v) {
    const OrderResult r = element_order(gens[0], 10);
    const Subgroup cz = centralizer(g, *g.index_of(gens[0]));
    v = {{"order", to_string(r)}, {"centralizer", to_string(classify_iso_type(g, cz))}};
    return r.kind == OrderKind::Finite && r.order == 6 && classify_iso_type(g, cz) == IsoType{IsoFamily::Cyclic, 6};
  });

  rec.check("d12-sqrt3.center", anchor_dec, [&](Values& v) {
    const Subgroup z = center(g);
    v = {{"center_order", str(z.order())}};
    return z.order() == 2 && g.element(z.members()[1]) == Rot3::diagonal(1, -1, -1, 3);
  });

  rec.check("d12-sqrt3.decomposition", anchor_dec, [&](Values& v) { return center_times_s3(g, v); });

  rec.check("d12-sqrt3.p4-fails", anchor_dec, [&](Values& v) {
    const auto report = check_property(g, PropertyTag::P4);
    if (report.holds) return false;
    const auto& dec = *report.witness->decomposition;
    v = {{"subgroup_order", str(report.witness->subgroup->order())},
         {"factors", to_string(classify_iso_type(g, dec.factor_h)) + " x " +
                         to_string(classify_iso_type(g, dec.factor_k))}};
    return replay_witness(g, report);
  });

  rec.check("d12-sqrt3.p5-holds", anchor_dec, [&](Values&) { return check_property(g, PropertyTag::P5).holds; });
}

void rational_dihedral_checks(Recorder& rec) {
  const auto entries = standard_corpus(true);
  const auto it = std::find_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.name == "D12"; });
  const FiniteRotGroup g = generate_closure(it->generators, 100);
  rec.check("d12.rational-decomposition", "a rational dihedral group of order 12 is C2 × S3", [&](Values& v) {
    const bool ok = center_times_s3(g, v);
    v.emplace_back("order", str(g.order()));
    v.emplace_back("type", to_string(classify_iso_type(g)));
    return ok && g.order() == 12;
  });
  rec.check("d12.rational-p4-fails", "some direct product subgroup is non-abelian", [&](Values& v) {
    const auto report = check_property(g, PropertyTag::P4);
    v = {{"holds", yes_no(report.holds)}};
    return !report.holds && replay_witness(g, report);
  });
}

// ------------------------------------------------------------ corpus checks

void corpus_checks(Recorder& rec, const SuiteOptions& opt) {
  const auto entries = standard_corpus(opt.rational_only);
  if (opt.rational_only) {
    for (const auto& e : standard_corpus(false)) {
      if (e.ambient != 0) rec.skip("corpus." + e.name, "finite groups", "skipped (needs √" + std::to_string(e.ambient) + ")");
    }
  }
  const auto corpus = build_corpus(entries);

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i].group;
    rec.check("corpus." + corpus[i].name + ".type", "finite rotation groups are cyclic, dihedral, A4, S4 or A5",
              [&](Values& v) {
                const IsoType t = classify_iso_type(g);
                v = {{"order", str(g.order())}, {"type", to_string(t)}};
                return t == entries[i].expected;
              });
    rec.check("corpus." + corpus[i].name + ".direct-product-shape",
              "non-abelian direct product subgroups are C2 × (non-abelian with an involution)", [&](Values& v) {
                bool ok = true;
                for (PropertyTag tag : {PropertyTag::P5, PropertyTag::P6, PropertyTag::P7, PropertyTag::R6}) {
                  const bool holds = check_property(g, tag).holds;
                  v.emplace_back(to_string(tag), yes_no(holds));
                  ok = ok && holds;
                }
                return ok;
              });
  }

  rec.check("corpus.p8-vacuous", "finite groups satisfy the torsion-free condition vacuously", [&](Values& v) {
    bool ok = true;
    for (const auto& e : corpus) {
      const auto r = check_property(e.group, PropertyTag::P8);
      ok = ok && r.holds && r.vacuous;
    }
    v = {{"groups", str(corpus.size())}, {"marker", "vacuous"}};
    return ok;
  });

  rec.check("corpus.implication-diagram", "every implication between the properties holds", [&](Values& v) {
    const auto report = implication_harness(corpus);
    v = {{"groups", str(report.groups_checked)},
         {"edges_checked", str(report.edges_checked)},
         {"vacuous_edges", str(report.vacuous_edges)},
         {"violations", str(report.violations.size())}};
    for (const auto& viol : report.violations) {
      v.emplace_back("violation", viol.group + ": " + to_string(viol.source) + " -> " + to_string(viol.target));
    }
    return report.violations.empty();
  });

  rec.check("corpus.centralizer-axis",
            "the centralizer of a rotation of order >= 3 consists of rotations about its axis", [&](Values& v) {
              std::size_t elements = 0, members = 0, failures = 0;
              for (const auto& e : corpus) {
                const auto& g = e.group;
                for (ElementIndex x = 0; x < g.order(); ++x) {
                  if (g.element_order(x) < 3) continue;
                  ++elements;
                  const Axis ax = axis_of(g.element(x));
                  const Subgroup cz = centralizer(g, x);
                  for (ElementIndex y : cz.members()) {
                    if (y == FiniteRotGroup::identity_index()) continue;
                    ++members;
                    failures += !(axis_of(g.element(y)) == ax);
                  }
                }
              }
              v = {{"elements", str(elements)}, {"centralizer_members", str(members)}, {"failures", str(failures)}};
              return failures == 0 && elements > 0;
            });
}

// ------------------------------------------------------- matrix-level fuzz

void half_turn_checks(Recorder& rec, const SuiteOptions& opt) {
  rec.check("fuzz.commuting-with-half-turn",
            "rotations commuting with diag(1,-1,-1) are x-axis rotations or half-turns about yz-plane axes",
            [&](Values& v) {
              QuaternionFuzzer fuzz(opt.seed + 11, 0);
              const Rot3 a = named::half_turn_x();
              std::size_t commuting = 0, failures = 0;
              for (std::size_t i = 0; i < opt.fuzz_pairs; ++i) {
                Quaternion q = fuzz.nonzero_quaternion();
                switch (fuzz.pick(3)) {
                  case 0: q.x2 = q.x3 = QuadScalar::zero(); break;
                  case 1: q.x0 = q.x1 = QuadScalar::zero(); break;
                  default: break;
                }
                if (q.is_zero()) continue;
                const Rot3 m = theta(q);
                if (!rot_commutes(m, a)) continue;
                ++commuting;
                const bool border = m(0, 1).is_zero() && m(0, 2).is_zero() && m(1, 0).is_zero() && m(2, 0).is_zero();
                const bool x_rotation = m(0, 0).is_one();
                const bool yz_half_turn = (-m(0, 0)).is_one() && (m * m).is_identity();
                failures += !(border && (x_rotation || yz_half_turn));
              }
              v = {{"samples", str(opt.fuzz_pairs)}, {"commuting", str(commuting)}, {"failures", str(failures)}};
              return failures == 0 && commuting > 0;
            });

  rec.check("fuzz.half-turn-commutation",
            "two half-turns about yz-plane axes commute iff their axes coincide or are perpendicular",
            [&](Values& v) {
              QuaternionFuzzer fuzz(opt.seed + 12, 0);
              const QuadScalar zero = QuadScalar::zero();
              std::size_t commuting = 0, failures = 0;
              for (std::size_t i = 0; i < opt.involution_pairs;) {
                const QuadScalar b = fuzz.scalar(), c = fuzz.scalar();
                if (b.is_zero() && c.is_zero()) continue;
                const QuadScalar lambda = fuzz.nonzero_scalar();
                Quaternion y{zero, zero, fuzz.scalar(), fuzz.scalar()};
                switch (fuzz.pick(3)) {
                  case 0: y = {zero, zero, lambda * b, lambda * c}; break;
                  case 1: y = {zero, zero, -(lambda * c), lambda * b}; break;
                  default: break;
                }
                if (y.is_zero()) continue;
                ++i;
                const Rot3 m = theta(Quaternion{zero, zero, b, c});
                const Rot3 n = theta(y);
                const Axis am = axis_of(m), an = axis_of(n);
                const bool comm = rot_commutes(m, n);
                commuting += comm;
                failures += comm != (am == an || perpendicular(am, an));
              }
              v = {{"pairs", str(opt.involution_pairs)}, {"commuting", str(commuting)}, {"failures", str(failures)}};
              return failures == 0 && commuting > 0 && commuting < opt.involution_pairs;
            });
}

// ---------------------------------------------------------- infinite groups

void free_and_abelian_checks(Recorder& rec) {
  const Rot3 g1 = named::pythagorean_x();
  const Rot3 g2 = named::pythagorean_y();
  const Rot3 h2 = named::pythagorean_x_17();

  rec.check("free.reduced-words-distinct", "θ(1+2i), θ(1+2j) generate a free group (words up to length 8)",
            [&](Values& v) {
              const std::vector<Rot3> gens{g1, g2};
              const auto r = word_no_relation_search(gens, 8);
              v = {{"max_len", "8"}, {"words", str(r.count)}, {"all_distinct", yes_no(r.all_distinct)}};
              return r.all_distinct && !r.abelian_mode && r.count == 13121;
            });

  rec.check("free.closure-exceeds-cap", "θ(1+2i), θ(1+2j) generate an infinite group", [&](Values& v) {
    const std::vector<Rot3> gens{g1, g2};
    try {
      generate_closure(gens, 10000);
    } catch (const ClosureExceedsCap& e) {
      v = {{"cap", "10000"}, {"count_so_far", str(e.count_so_far())}};
      return true;
    }
    return false;
  });

  rec.check("abelian.no-relation", "θ(1+2i), θ(1+4i) generate Z × Z (exponents up to 10)", [&](Values& v) {
    const std::vector<Rot3> gens{g1, h2};
    const auto o1 = element_order(g1), o2 = element_order(h2);
    const auto r = word_no_relation_search(gens, 10);
    v = {{"commute", yes_no(rot_commutes(g1, h2))},
         {"order_g1", to_string(o1)},
         {"order_g2", to_string(o2)},
         {"tuples", str(r.count)},
         {"all_distinct", yes_no(r.all_distinct)}};
    return rot_commutes(g1, h2) && o1.kind == OrderKind::InfiniteCertified &&
           o2.kind == OrderKind::InfiniteCertified && r.abelian_mode && r.all_distinct && r.count == 441;
  });
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::size_t SuiteReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [v](const CheckRecord& c) { return c.verdict == v; }));
}

const CheckRecord* SuiteReport::find(const std::string& id) const {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

SuiteReport run_verification_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.options = options;
  Recorder rec(report);

  theta_golden_checks(rec);
  fuzz_checks(rec, options, 0, "");
  if (options.rational_only) {
    for (const char* id : {"anticommutation-criterion", "commutation-criterion", "commutative-transitivity",
                           "norm-multiplicative", "theta-homomorphism", "theta-kernel", "trichotomy-vs-rotations"}) {
      rec.skip(std::string("fuzz.") + id + ".sqrt3", "fuzzing over Q(√3)", "skipped (needs √3)");
    }
  } else {
    SuiteOptions sqrt3 = options;
    sqrt3.fuzz_pairs = options.fuzz_pairs / 4;
    fuzz_checks(rec, sqrt3, 3, ".sqrt3");
  }
  noncommuting_triple_checks(rec);
  infinite_product_checks(rec);
  sqrt3_dihedral_checks(rec, options.rational_only);
  rational_dihedral_checks(rec);
  corpus_checks(rec, options);
  half_turn_checks(rec, options);
  free_and_abelian_checks(rec);
  return report;
}

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["seed"] = report.options.seed;
  j["rational_only"] = report.options.rational_only;
  j["fuzz_pairs"] = report.options.fuzz_pairs;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [s, t] : implication_edges()) edges.push_back(to_string(s) + "->" + to_string(t));
  j["implication_edges"] = edges;
  j["implication_edges_note"] =
      "edge set fixed by this list; the vertical arrows P3->R3, P4->R4, P6->R6 are read top-down";
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json rec;
    rec["id"] = c.id;
    rec["anchor"] = c.anchor;
    rec["verdict"] = to_string(c.verdict);
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.values) {
      if (values.contains(k)) {
        if (!values[k].is_array()) values[k] = nlohmann::ordered_json::array({values[k]});
        values[k].push_back(v);
      } else {
        values[k] = v;
      }
    }
    rec["values"] = values;
    checks.push_back(std::move(rec));
  }
  j["checks"] = checks;
  j["summary"] = {{"total", report.checks.size()},
                  {"pass", report.count(Verdict::Pass)},
                  {"fail", report.count(Verdict::Fail)},
                  {"skipped", report.count(Verdict::Skipped)}};
  return j;
}

std::string report_summary(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    std::string tag = c.verdict == Verdict::Pass ? "PASS" : (c.verdict == Verdict::Fail ? "FAIL" : "SKIP");
    out << tag << "  " << c.id;
    if (c.verdict != Verdict::Pass) {
      for (const auto& [k, v] : c.values) out << "  " << k << "=" << v;
    }
    out << '\n';
  }
  out << report.count(Verdict::Pass) << " passed, " << report.count(Verdict::Fail) << " failed, "
      << report.count(Verdict::Skipped) << " skipped\n";
  return out.str();
}

}  // namespace rotgroup
