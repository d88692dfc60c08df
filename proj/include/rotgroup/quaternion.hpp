#pragma once

#include <array>
#include <string>

#include "rotgroup/scalar.hpp"

namespace rotgroup {

/// x0 + x1 i + x2 j + x3 k over Q(sqrt d).
struct Quaternion {
  QuadScalar x0, x1, x2, x3;

  static Quaternion zero(Ambient d = 0);
  static Quaternion real(const QuadScalar& r);
  /// Integer-coefficient convenience constructor.
  static Quaternion of(long a, long b, long c, long e, Ambient d = 0);

  Ambient ambient() const noexcept { return x0.ambient(); }
  bool is_zero() const;
  /// True iff the vector part vanishes (the quaternion is central).
  bool is_real() const;

  Quaternion operator-() const;
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x, const Quaternion& y);
Quaternion operator*(const QuadScalar& s, const Quaternion& x);

/// Hamilton product (i² = j² = k² = -1, ij = -ji = k).
Quaternion qmul(const Quaternion& x, const Quaternion& y);
inline Quaternion operator*(const Quaternion& x, const Quaternion& y) { return qmul(x, y); }

QuadScalar qnorm_sq(const Quaternion& x);

/// Vector parts orthogonal: x1 y1 + x2 y2 + x3 y3 = 0.
bool perp(const Quaternion& x, const Quaternion& y);

/// The three 2x2 minors (x2y3 - x3y2, x3y1 - x1y3, x1y2 - x2y1) of the vector parts.
std::array<QuadScalar, 3> vector_minors(const Quaternion& x, const Quaternion& y);

/// xy = -yx by direct multiplication. Throws ZeroQuaternion.
bool anticommutes(const Quaternion& x, const Quaternion& y);

/// x0 = y0 = 0 and x ⊥ y. Throws ZeroQuaternion.
bool anticommutes_by_criterion(const Quaternion& x, const Quaternion& y);

/// xy = yx by direct multiplication.
bool commutes(const Quaternion& x, const Quaternion& y);

/// Vector parts linearly dependent (all minors vanish).
bool commutes_by_minors(const Quaternion& x, const Quaternion& y);

enum class Commutation { Commute, Anticommute, Neither };

/// Commute if xy = yx, else Anticommute if xy = -yx, else Neither. Throws ZeroQuaternion.
Commutation commutation_trichotomy(const Quaternion& x, const Quaternion& y);

std::string to_string(Commutation c);
std::string to_string(const Quaternion& x);

}  // namespace rotgroup
