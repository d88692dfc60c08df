#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in Q(sqrt d).
 *
 * A QuadScalar is a + b*sqrt(d) with a, b reduced rationals (GMP). Every
 * scalar carries its ambient d; d = 0 means plain Q and forces b = 0.
 * Combining scalars with different d is an error, never an implicit join.
 *
 * Text form: "p/q", "p/q+r/s√d", "r/s√d" (integers print without "/1",
 * a unit surd coefficient prints as "√d" / "-√d"). The parser also accepts
 * the ASCII spelling "sqrt" in place of "√".
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rotgroup {

using Ambient = std::int64_t;

/// True for d = 0 and squarefree d >= 2.
bool is_valid_ambient(Ambient d);

/// Throws InvalidAmbient unless is_valid_ambient(d).
void require_valid_ambient(Ambient d);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

class QuadScalar {
 public:
  /// Zero in Q.
  QuadScalar() = default;

  /// rat + surd*sqrt(d). Validates d; a nonzero surd with d = 0 is rejected.
  QuadScalar(mpq_class rat, mpq_class surd, Ambient d);

  static QuadScalar rational(mpq_class q, Ambient d = 0);
  static QuadScalar integer(long n, Ambient d = 0) { return rational(mpq_class(n), d); }
  static QuadScalar zero(Ambient d = 0) { return rational(mpq_class(0), d); }
  static QuadScalar one(Ambient d = 0) { return rational(mpq_class(1), d); }

  const mpq_class& rat() const noexcept { return rat_; }
  const mpq_class& surd() const noexcept { return surd_; }
  Ambient ambient() const noexcept { return d_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_one() const { return rat_ == 1 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& other);
  QuadScalar& operator-=(const QuadScalar& other);
  QuadScalar& operator*=(const QuadScalar& other);
  QuadScalar& operator/=(const QuadScalar& other);

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

  /// Component-wise equality on canonical form (ambient included).
  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.d_ == b.d_ && a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }

  /// Multiplicative inverse. Throws DivisionByZero.
  QuadScalar inverse() const;

  std::size_t hash() const noexcept;

 private:
  struct Unchecked {};
  QuadScalar(mpq_class rat, mpq_class surd, Ambient d, Unchecked)
      : rat_(std::move(rat)), surd_(std::move(surd)), d_(d) {}

  void require_same_ambient(const QuadScalar& other) const;

  mpq_class rat_{0};
  mpq_class surd_{0};
  Ambient d_ = 0;
};

enum class ScalarOp { Add, Sub, Mul, Div, Neg };

/// Dispatching form of the field operations; Neg ignores b.
QuadScalar scalar_arith(ScalarOp op, const QuadScalar& a, const QuadScalar& b);

/// Exact sign of the real number rat + surd*sqrt(d).
Sign scalar_sign(const QuadScalar& a);

/// Galois conjugate rat - surd*sqrt(d).
QuadScalar surd_conjugate(const QuadScalar& a);

/// Real-order comparison (exact).
std::strong_ordering compare_value(const QuadScalar& a, const QuadScalar& b);

/// Structural order: rat first, then surd. Used for deterministic sorting only.
std::strong_ordering lex_compare(const QuadScalar& a, const QuadScalar& b);

/// True iff a is an algebraic integer: 2*rat and rat^2 - d*surd^2 are integers.
bool is_algebraic_integer(const QuadScalar& a);

std::string to_string(const QuadScalar& a);

/// Parses the text form in ambient d. Throws ParseError.
QuadScalar parse_scalar(std::string_view text, Ambient d);

/// Floating approximation; diagnostics and oracle cross-checks only.
double approximate(const QuadScalar& a);

}  // namespace rotgroup
