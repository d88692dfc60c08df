#include "rotgroup/quaternion.hpp"

#include "rotgroup/error.hpp"

namespace rotgroup {

namespace {

void require_nonzero(const Quaternion& x, const Quaternion& y) {
  if (x.is_zero() || y.is_zero()) throw ZeroQuaternion();
}

}  // namespace

Quaternion Quaternion::zero(Ambient d) {
  const auto z = QuadScalar::zero(d);
  return {z, z, z, z};
}

Quaternion Quaternion::real(const QuadScalar& r) {
  const auto z = QuadScalar::zero(r.ambient());
  return {r, z, z, z};
}

Quaternion Quaternion::of(long a, long b, long c, long e, Ambient d) {
  return {QuadScalar::integer(a, d), QuadScalar::integer(b, d), QuadScalar::integer(c, d),
          QuadScalar::integer(e, d)};
}

bool Quaternion::is_zero() const { return x0.is_zero() && is_real(); }

bool Quaternion::is_real() const { return x1.is_zero() && x2.is_zero() && x3.is_zero(); }

Quaternion Quaternion::operator-() const { return {-x0, -x1, -x2, -x3}; }

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {x.x0 + y.x0, x.x1 + y.x1, x.x2 + y.x2, x.x3 + y.x3};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return {x.x0 - y.x0, x.x1 - y.x1, x.x2 - y.x2, x.x3 - y.x3};
}

Quaternion operator*(const QuadScalar& s, const Quaternion& x) {
  return {s * x.x0, s * x.x1, s * x.x2, s * x.x3};
}

Quaternion qmul(const Quaternion& x, const Quaternion& y) {
  return {
      x.x0 * y.x0 - x.x1 * y.x1 - x.x2 * y.x2 - x.x3 * y.x3,
      x.x0 * y.x1 + x.x1 * y.x0 + x.x2 * y.x3 - x.x3 * y.x2,
      x.x0 * y.x2 - x.x1 * y.x3 + x.x2 * y.x0 + x.x3 * y.x1,
      x.x0 * y.x3 + x.x1 * y.x2 - x.x2 * y.x1 + x.x3 * y.x0,
  };
}

QuadScalar qnorm_sq(const Quaternion& x) {
  return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
}

bool perp(const Quaternion& x, const Quaternion& y) {
  return (x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3).is_zero();
}

std::array<QuadScalar, 3> vector_minors(const Quaternion& x, const Quaternion& y) {
  return {x.x2 * y.x3 - x.x3 * y.x2, x.x3 * y.x1 - x.x1 * y.x3, x.x1 * y.x2 - x.x2 * y.x1};
}

bool anticommutes(const Quaternion& x, const Quaternion& y) {
  require_nonzero(x, y);
  return qmul(x, y) == -qmul(y, x);
}

bool anticommutes_by_criterion(const Quaternion& x, const Quaternion& y) {
  require_nonzero(x, y);
  return x.x0.is_zero() && y.x0.is_zero() && perp(x, y);
}

bool commutes(const Quaternion& x, const Quaternion& y) { return qmul(x, y) == qmul(y, x); }

bool commutes_by_minors(const Quaternion& x, const Quaternion& y) {
  for (const auto& m : vector_minors(x, y)) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Commutation commutation_trichotomy(const Quaternion& x, const Quaternion& y) {
  require_nonzero(x, y);
  const Quaternion xy = qmul(x, y);
  const Quaternion yx = qmul(y, x);
  if (xy == yx) return Commutation::Commute;
  if (xy == -yx) return Commutation::Anticommute;
  return Commutation::Neither;
}

std::string to_string(Commutation c) {
  switch (c) {
    case Commutation::Commute: return "Commute";
    case Commutation::Anticommute: return "Anticommute";
    case Commutation::Neither: return "Neither";
  }
  return "?";
}

std::string to_string(const Quaternion& x) {
  return to_string(x.x0) + "," + to_string(x.x1) + "," + to_string(x.x2) + "," + to_string(x.x3);
}

}  // namespace rotgroup
