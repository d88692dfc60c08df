#pragma once

/**
 * @file rotation.hpp
 * @brief Exact rotation matrices, the quaternion-to-rotation map, axes and
 *        element orders.
 *
 * Angles never appear as data. Statements about rotations "about the x-axis"
 * or "by 180 degrees" are expressed as exact predicates on matrix entries.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "rotgroup/quaternion.hpp"
#include "rotgroup/scalar.hpp"

namespace rotgroup {

using Vec3 = std::array<QuadScalar, 3>;

/// Exact 3x3 orthogonal matrix with determinant 1, row-major.
class Rot3 {
 public:
  using Entries = std::array<QuadScalar, 9>;

  /// Validates MᵀM = E and det M = 1. Throws InvalidRotation or AmbientMismatch.
  explicit Rot3(Entries entries);

  static Rot3 identity(Ambient d = 0);
  /// diag(a, b, c) with entries ±1.
  static Rot3 diagonal(long a, long b, long c, Ambient d = 0);

  const QuadScalar& operator()(std::size_t row, std::size_t col) const { return m_[3 * row + col]; }
  const Entries& entries() const noexcept { return m_; }
  Ambient ambient() const noexcept { return m_[0].ambient(); }

  bool is_identity() const;
  QuadScalar trace() const;
  /// The inverse, which is the transpose.
  Rot3 inverse() const;
  Vec3 apply(const Vec3& v) const;

  friend Rot3 operator*(const Rot3& a, const Rot3& b);
  friend bool operator==(const Rot3& a, const Rot3& b) { return a.m_ == b.m_; }

  std::size_t hash() const noexcept;

 private:
  struct Trusted {};
  Rot3(Entries entries, Trusted) : m_(std::move(entries)) {}

  Entries m_;

  friend Rot3 theta(const Quaternion& x);
};

struct Rot3Hash {
  std::size_t operator()(const Rot3& m) const noexcept { return m.hash(); }
};

/// Entry-wise structural order used for deterministic element lists.
std::strong_ordering lex_compare(const Rot3& a, const Rot3& b);

/// Rotation axis scaled so its first nonzero coordinate is 1.
class Axis {
 public:
  /// Throws std::invalid_argument for the zero vector.
  static Axis from_direction(Vec3 v);

  const Vec3& direction() const noexcept { return v_; }
  friend bool operator==(const Axis&, const Axis&) = default;

 private:
  explicit Axis(Vec3 v) : v_(std::move(v)) {}
  Vec3 v_;
};

QuadScalar dot(const Vec3& a, const Vec3& b);
bool perpendicular(const Axis& a, const Axis& b);

/// The rotation induced by conjugation with x, scaled by 1/|x|². Throws ZeroQuaternion.
Rot3 theta(const Quaternion& x);

/// Fixed line of M: skew part when nonzero, otherwise the first nonzero
/// column of M + E. Throws IdentityHasNoAxis.
Axis axis_of(const Rot3& m);

enum class OrderKind { Finite, InfiniteCertified, UnknownWithinCap };

struct OrderResult {
  OrderKind kind = OrderKind::UnknownWithinCap;
  std::uint64_t order = 0;  // meaningful for Finite only
  std::string certificate;
};

constexpr std::uint64_t kDefaultOrderCap = 1000;

/// Powers up to cap, then the trace certificate: t = trace - 1 must be an
/// algebraic integer with both conjugates in [-2, 2] for finite order.
OrderResult element_order(const Rot3& m, std::uint64_t cap = kDefaultOrderCap);

/// True iff t = trace(M) - 1 passes the finite-order test.
bool passes_finite_order_certificate(const Rot3& m);

bool rot_commutes(const Rot3& a, const Rot3& b);

Rot3 power(const Rot3& m, std::int64_t exponent);

std::string to_string(OrderKind kind);
std::string to_string(const OrderResult& r);
/// "[[a,b,c],[d,e,f],[g,h,i]]" in scalar text form.
std::string to_string(const Rot3& m);
std::string to_string(const Axis& a);

}  // namespace rotgroup
