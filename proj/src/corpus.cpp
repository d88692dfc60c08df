#include "rotgroup/corpus.hpp"

namespace rotgroup {

namespace {

constexpr std::size_t kCorpusCap = 200;

Rot3 theta_of(long a, long b, long c, long e, Ambient d = 0) { return theta(Quaternion::of(a, b, c, e, d)); }

/// φ + φ⁻¹ i + j with φ = (1 + √5)/2: a fifth of a turn about (φ⁻¹, 1, 0).
Rot3 fivefold_sqrt5() {
  const QuadScalar phi(mpq_class(1, 2), mpq_class(1, 2), 5);
  const QuadScalar phi_inv(mpq_class(-1, 2), mpq_class(1, 2), 5);
  return theta(Quaternion{phi, phi_inv, QuadScalar::one(5), QuadScalar::zero(5)});
}

}  // namespace

namespace named {

Rot3 half_turn_x() { return theta_of(0, 1, 0, 0); }
Rot3 half_turn_y() { return theta_of(0, 0, 1, 0); }
Rot3 quarter_turn_x() { return theta_of(1, 1, 0, 0); }
Rot3 pythagorean_x() { return theta_of(1, 2, 0, 0); }
Rot3 pythagorean_y() { return theta_of(1, 0, 2, 0); }
Rot3 pythagorean_x_17() { return theta_of(1, 4, 0, 0); }

Rot3 sixfold_x_sqrt3() {
  constexpr Ambient d = 3;
  const QuadScalar zero = QuadScalar::zero(d);
  const QuadScalar half = QuadScalar::rational(mpq_class(1, 2), d);
  const QuadScalar sin60(mpq_class(0), mpq_class(1, 2), d);
  return Rot3(Rot3::Entries{QuadScalar::one(d), zero, zero, zero, half, -sin60, zero, sin60, half});
}

Rot3 half_turn_y_sqrt3() { return Rot3::diagonal(-1, 1, -1, 3); }

}  // namespace named

std::vector<CorpusEntry> standard_corpus(bool rational_only) {
  using F = IsoFamily;
  std::vector<CorpusEntry> all{
      {"C1", 0, {F::Trivial, 0}, {Rot3::identity(0)}},
      {"C2", 0, {F::Cyclic, 2}, {theta_of(0, 0, 0, 1)}},
      {"C3", 0, {F::Cyclic, 3}, {theta_of(1, 1, 1, 1)}},
      {"C4", 0, {F::Cyclic, 4}, {theta_of(1, 0, 0, 1)}},
      {"C5", 5, {F::Cyclic, 5}, {fivefold_sqrt5()}},
      {"C6", 0, {F::Cyclic, 6}, {theta_of(3, 1, 1, 1)}},
      {"V4", 0, {F::Dihedral, 2}, {named::half_turn_x(), named::half_turn_y()}},
      {"D6", 0, {F::Dihedral, 3}, {theta_of(1, 1, 1, 1), theta_of(0, 1, -1, 0)}},
      {"D8", 0, {F::Dihedral, 4}, {named::quarter_turn_x(), named::half_turn_y()}},
      {"D12", 0, {F::Dihedral, 6}, {theta_of(3, 1, 1, 1), theta_of(0, 1, -1, 0)}},
      {"D12(sqrt3)", 3, {F::Dihedral, 6}, {named::sixfold_x_sqrt3(), named::half_turn_y_sqrt3()}},
      {"A4", 0, {F::TetrahedralA4, 0}, {theta_of(1, 1, 1, 1), named::half_turn_x()}},
      {"S4", 0, {F::OctahedralS4, 0}, {named::quarter_turn_x(), theta_of(1, 1, 1, 1)}},
      {"A5", 5, {F::IcosahedralA5, 0}, {theta_of(0, 1, 0, 0, 5), theta_of(1, 1, 1, 1, 5), fivefold_sqrt5()}},
  };
  if (!rational_only) return all;
  std::vector<CorpusEntry> rational;
  for (auto& e : all) {
    if (e.ambient == 0) rational.push_back(std::move(e));
  }
  return rational;
}

std::vector<NamedGroup> build_corpus(const std::vector<CorpusEntry>& entries) {
  std::vector<NamedGroup> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({e.name, generate_closure(e.generators, kCorpusCap)});
  return out;
}

}  // namespace rotgroup
