#pragma once

#include <cstdint>
#include <random>

#include "rotgroup/quaternion.hpp"

namespace rotgroup {

/// Seeded generator of small exact scalars and quaternions.
///
/// Scalars are p/q with |p| <= 20 and 1 <= q <= 10; in an irrational
/// ambient the surd coefficient is drawn the same way.
class QuaternionFuzzer {
 public:
  QuaternionFuzzer(std::uint64_t seed, Ambient d);

  Ambient ambient() const noexcept { return d_; }

  QuadScalar scalar();
  QuadScalar nonzero_scalar();
  /// Rational scalar (surd part zero) even in an irrational ambient.
  QuadScalar nonzero_rational();
  Quaternion quaternion();
  Quaternion nonzero_quaternion();
  /// Nonzero vector part.
  Quaternion nonreal_quaternion();
  Quaternion pure_quaternion();
  /// Uniform in [0, n).
  std::size_t pick(std::size_t n);

 private:
  mpq_class small_rational();

  std::mt19937_64 rng_;
  Ambient d_;
};

/// Pairs biased so that anticommuting, commuting, and neither cases all occur.
struct QuaternionPair {
  Quaternion x, y;
};

/// Mixes random pairs, pure perpendicular pairs and near misses.
QuaternionPair anticommutation_pair(QuaternionFuzzer& fuzz);
/// Mixes random pairs, y = a + b x pairs and perturbed near misses.
QuaternionPair commutation_pair(QuaternionFuzzer& fuzz);

}  // namespace rotgroup
