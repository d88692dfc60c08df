#include "rotgroup/fuzz.hpp"

namespace rotgroup {

namespace {

Quaternion with_vector(const QuadScalar& real, const QuadScalar& a, const QuadScalar& b, const QuadScalar& c) {
  return {real, a, b, c};
}

}  // namespace

QuaternionFuzzer::QuaternionFuzzer(std::uint64_t seed, Ambient d) : rng_(seed), d_(d) { require_valid_ambient(d); }

std::size_t QuaternionFuzzer::pick(std::size_t n) {
  return static_cast<std::size_t>(rng_() % n);
}

mpq_class QuaternionFuzzer::small_rational() {
  const long p = static_cast<long>(pick(41)) - 20;
  const long q = static_cast<long>(pick(10)) + 1;
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

QuadScalar QuaternionFuzzer::scalar() {
  mpq_class rat = small_rational();
  // Leave a third of the irrational draws rational so mixed cases stay common.
  mpq_class surd = d_ != 0 && pick(3) != 0 ? small_rational() : mpq_class(0);
  return QuadScalar(std::move(rat), std::move(surd), d_);
}

QuadScalar QuaternionFuzzer::nonzero_scalar() {
  for (;;) {
    QuadScalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

QuadScalar QuaternionFuzzer::nonzero_rational() {
  for (;;) {
    mpq_class r = small_rational();
    if (sgn(r) != 0) return QuadScalar::rational(std::move(r), d_);
  }
}

Quaternion QuaternionFuzzer::quaternion() {
  // Zero out each component with probability 1/4 to hit structured cases.
  auto component = [this] { return pick(4) == 0 ? QuadScalar::zero(d_) : scalar(); };
  QuadScalar a = component();
  QuadScalar b = component();
  QuadScalar c = component();
  QuadScalar e = component();
  return {std::move(a), std::move(b), std::move(c), std::move(e)};
}

Quaternion QuaternionFuzzer::nonzero_quaternion() {
  for (;;) {
    Quaternion q = quaternion();
    if (!q.is_zero()) return q;
  }
}

Quaternion QuaternionFuzzer::nonreal_quaternion() {
  for (;;) {
    Quaternion q = quaternion();
    if (!q.is_real()) return q;
  }
}

Quaternion QuaternionFuzzer::pure_quaternion() {
  Quaternion q = nonreal_quaternion();
  q.x0 = QuadScalar::zero(d_);
  return q;
}

QuaternionPair anticommutation_pair(QuaternionFuzzer& fuzz) {
  const Ambient d = fuzz.ambient();
  for (;;) {
    QuaternionPair p;
    switch (fuzz.pick(4)) {
      case 0:
        p = {fuzz.nonzero_quaternion(), fuzz.nonzero_quaternion()};
        break;
      case 1:
      case 2: {
        // y's vector part is x_vec × v, hence perpendicular to x.
        Quaternion x = fuzz.pure_quaternion();
        Quaternion v = fuzz.nonreal_quaternion();
        Quaternion y = with_vector(QuadScalar::zero(d), x.x2 * v.x3 - x.x3 * v.x2, x.x3 * v.x1 - x.x1 * v.x3,
                                   x.x1 * v.x2 - x.x2 * v.x1);
        if (fuzz.pick(2) == 0) y.x0 = fuzz.nonzero_scalar();  // near miss: perpendicular, not pure
        if (fuzz.pick(3) == 0) x.x0 = fuzz.nonzero_scalar();
        p = {x, y};
        break;
      }
      default:
        p = {fuzz.pure_quaternion(), fuzz.pure_quaternion()};
        break;
    }
    if (!p.x.is_zero() && !p.y.is_zero()) return p;
  }
}

QuaternionPair commutation_pair(QuaternionFuzzer& fuzz) {
  for (;;) {
    QuaternionPair p;
    switch (fuzz.pick(4)) {
      case 0:
        p = {fuzz.nonzero_quaternion(), fuzz.nonzero_quaternion()};
        break;
      case 1: {
        Quaternion x = fuzz.nonzero_quaternion();
        Quaternion y = Quaternion::real(fuzz.scalar()) + fuzz.scalar() * x;
        p = {x, y};
        break;
      }
      case 2: {
        // Proportional vector parts with one coordinate nudged.
        Quaternion x = fuzz.nonreal_quaternion();
        Quaternion y = Quaternion::real(fuzz.scalar()) + fuzz.nonzero_scalar() * x;
        switch (fuzz.pick(3)) {
          case 0: y.x1 += fuzz.nonzero_scalar(); break;
          case 1: y.x2 += fuzz.nonzero_scalar(); break;
          default: y.x3 += fuzz.nonzero_scalar(); break;
        }
        p = {x, y};
        break;
      }
      default:
        p = {Quaternion::real(fuzz.nonzero_scalar()), fuzz.nonzero_quaternion()};
        break;
    }
    if (!p.x.is_zero() && !p.y.is_zero()) return p;
  }
}

}  // namespace rotgroup
