#include "rotgroup/rotation.hpp"

#include <stdexcept>

#include "rotgroup/error.hpp"

namespace rotgroup {

namespace {

Rot3::Entries multiply(const Rot3::Entries& a, const Rot3::Entries& b) {
  Rot3::Entries out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      QuadScalar s = a[3 * r] * b[c];
      s += a[3 * r + 1] * b[3 + c];
      s += a[3 * r + 2] * b[6 + c];
      out[3 * r + c] = std::move(s);
    }
  }
  return out;
}

bool is_vector_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

}  // namespace

Rot3::Rot3(Entries entries) : m_(std::move(entries)) {
  const Ambient d = m_[0].ambient();
  for (const auto& e : m_) {
    if (e.ambient() != d) throw AmbientMismatch(d, e.ambient());
  }
  Entries transposed;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) transposed[3 * c + r] = m_[3 * r + c];
  }
  const Entries gram = multiply(transposed, m_);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const QuadScalar& g = gram[3 * r + c];
      if (r == c ? !g.is_one() : !g.is_zero()) throw InvalidRotation("matrix is not orthogonal");
    }
  }
  const auto& m = m_;
  const QuadScalar det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                         m[2] * (m[3] * m[7] - m[4] * m[6]);
  if (!det.is_one()) throw InvalidRotation("determinant is not 1");
}

Rot3 Rot3::identity(Ambient d) { return diagonal(1, 1, 1, d); }

Rot3 Rot3::diagonal(long a, long b, long c, Ambient d) {
  const auto z = QuadScalar::zero(d);
  return Rot3(Entries{QuadScalar::integer(a, d), z, z, z, QuadScalar::integer(b, d), z, z, z,
                      QuadScalar::integer(c, d)});
}

bool Rot3::is_identity() const {
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const QuadScalar& e = m_[3 * r + c];
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

QuadScalar Rot3::trace() const { return m_[0] + m_[4] + m_[8]; }

Rot3 Rot3::inverse() const {
  Entries t;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) t[3 * c + r] = m_[3 * r + c];
  }
  return Rot3(std::move(t), Trusted{});
}

Vec3 Rot3::apply(const Vec3& v) const {
  Vec3 out;
  for (std::size_t r = 0; r < 3; ++r) out[r] = m_[3 * r] * v[0] + m_[3 * r + 1] * v[1] + m_[3 * r + 2] * v[2];
  return out;
}

Rot3 operator*(const Rot3& a, const Rot3& b) { return Rot3(multiply(a.m_, b.m_), Rot3::Trusted{}); }

std::size_t Rot3::hash() const noexcept {
  std::size_t h = 0;
  for (const auto& e : m_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering lex_compare(const Rot3& a, const Rot3& b) {
  for (std::size_t i = 0; i < 9; ++i) {
    if (const auto c = lex_compare(a.entries()[i], b.entries()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Axis Axis::from_direction(Vec3 v) {
  std::size_t lead = 0;
  while (lead < 3 && v[lead].is_zero()) ++lead;
  if (lead == 3) throw std::invalid_argument("zero vector has no direction");
  const QuadScalar scale = v[lead].inverse();
  for (auto& c : v) c *= scale;
  return Axis(std::move(v));
}

QuadScalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool perpendicular(const Axis& a, const Axis& b) { return dot(a.direction(), b.direction()).is_zero(); }

Rot3 theta(const Quaternion& x) {
  if (x.is_zero()) throw ZeroQuaternion();
  const QuadScalar& a = x.x0;
  const QuadScalar& b = x.x1;
  const QuadScalar& c = x.x2;
  const QuadScalar& e = x.x3;
  const QuadScalar aa = a * a, bb = b * b, cc = c * c, ee = e * e;
  const QuadScalar inv = (aa + bb + cc + ee).inverse();
  const QuadScalar two_inv = inv + inv;
  Rot3::Entries m{
      (aa + bb - cc - ee) * inv, (b * c - a * e) * two_inv,  (b * e + a * c) * two_inv,
      (b * c + a * e) * two_inv, (aa - bb + cc - ee) * inv,  (c * e - a * b) * two_inv,
      (b * e - a * c) * two_inv, (c * e + a * b) * two_inv,  (aa - bb - cc + ee) * inv,
  };
  return Rot3(std::move(m), Rot3::Trusted{});
}

Axis axis_of(const Rot3& m) {
  if (m.is_identity()) throw IdentityHasNoAxis();
  Vec3 skew{m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)};
  if (!is_vector_zero(skew)) return Axis::from_direction(std::move(skew));
  // Half-turn: M + E = 2 v vᵀ / |v|², every nonzero column is parallel to v.
  for (std::size_t c = 0; c < 3; ++c) {
    Vec3 col{m(0, c), m(1, c), m(2, c)};
    col[c] += QuadScalar::one(m.ambient());
    if (!is_vector_zero(col)) return Axis::from_direction(std::move(col));
  }
  throw IdentityHasNoAxis();
}

bool passes_finite_order_certificate(const Rot3& m) {
  const QuadScalar t = m.trace() - QuadScalar::one(m.ambient());
  if (!is_algebraic_integer(t)) return false;
  const QuadScalar two = QuadScalar::integer(2, m.ambient());
  for (const QuadScalar& c : {t, surd_conjugate(t)}) {
    if (compare_value(c, two) > 0 || compare_value(c, -two) < 0) return false;
  }
  return true;
}

OrderResult element_order(const Rot3& m, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("order cap must be positive");
  const QuadScalar t = m.trace() - QuadScalar::one(m.ambient());
  if (!passes_finite_order_certificate(m)) {
    // No power of M can be the identity, so iterating is pointless.
    const std::string why = is_algebraic_integer(t) ? "has a conjugate outside [-2, 2]" : "is not an algebraic integer";
    return {OrderKind::InfiniteCertified, 0, "2cos = trace - 1 = " + to_string(t) + " " + why};
  }
  Rot3 p = m;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (p.is_identity()) return {OrderKind::Finite, n, "M^" + std::to_string(n) + " = E"};
    p = p * m;
  }
  return {OrderKind::UnknownWithinCap, 0,
          "certificate passes but no identity power within cap " + std::to_string(cap)};
}

bool rot_commutes(const Rot3& a, const Rot3& b) { return a * b == b * a; }

Rot3 power(const Rot3& m, std::int64_t exponent) {
  Rot3 base = exponent < 0 ? m.inverse() : m;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Rot3 result = Rot3::identity(m.ambient());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Finite: return "Finite";
    case OrderKind::InfiniteCertified: return "InfiniteCertified";
    case OrderKind::UnknownWithinCap: return "UnknownWithinCap";
  }
  return "?";
}

std::string to_string(const OrderResult& r) {
  if (r.kind == OrderKind::Finite) return "Finite(" + std::to_string(r.order) + ")";
  return to_string(r.kind);
}

std::string to_string(const Rot3& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < 3; ++r) {
    out += r == 0 ? "[" : ",[";
    for (std::size_t c = 0; c < 3; ++c) {
      if (c > 0) out += ',';
      out += to_string(m(r, c));
    }
    out += ']';
  }
  return out + "]";
}

std::string to_string(const Axis& a) {
  const auto& v = a.direction();
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

}  // namespace rotgroup
