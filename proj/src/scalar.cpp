#include "rotgroup/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "rotgroup/error.hpp"

namespace rotgroup {

namespace {

constexpr std::string_view kRadical = "\xE2\x88\x9A";  // U+221A
constexpr std::string_view kRadicalAscii = "sqrt";

std::size_t hash_mpz(const mpz_class& z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    const auto limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_mpq(const mpq_class& q) noexcept {
  std::size_t h = hash_mpz(q.get_num());
  return h ^ (hash_mpz(q.get_den()) * 0x100000001b3ULL + (h << 6) + (h >> 2));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad scalar \"" + std::string(whole) + "\": " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) throw fail("expected digits in \"" + std::string(text) + "\"");
  if (slash != std::string_view::npos && !all_digits(den)) throw fail("expected denominator digits");
  mpz_class n(std::string(num), 10);
  mpz_class q = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q == 0) throw fail("zero denominator");
  mpq_class r(negative ? mpz_class(-n) : n, q);
  r.canonicalize();
  return r;
}

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

bool is_valid_ambient(Ambient d) {
  if (d == 0) return true;
  if (d < 2) return false;
  for (Ambient p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

void require_valid_ambient(Ambient d) {
  if (!is_valid_ambient(d)) throw InvalidAmbient(d);
}

QuadScalar::QuadScalar(mpq_class rat, mpq_class surd, Ambient d)
    : rat_(std::move(rat)), surd_(std::move(surd)), d_(d) {
  require_valid_ambient(d_);
  rat_.canonicalize();
  surd_.canonicalize();
  if (d_ == 0 && sgn(surd_) != 0) throw InvalidAmbient(d_);
}

QuadScalar QuadScalar::rational(mpq_class q, Ambient d) {
  require_valid_ambient(d);
  q.canonicalize();
  return QuadScalar(std::move(q), mpq_class(0), d, Unchecked{});
}

void QuadScalar::require_same_ambient(const QuadScalar& other) const {
  if (d_ != other.d_) throw AmbientMismatch(d_, other.d_);
}

QuadScalar QuadScalar::operator-() const {
  return QuadScalar(-rat_, -surd_, d_, Unchecked{});
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& other) {
  require_same_ambient(other);
  rat_ += other.rat_;
  surd_ += other.surd_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& other) {
  require_same_ambient(other);
  rat_ -= other.rat_;
  surd_ -= other.surd_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& other) {
  require_same_ambient(other);
  if (d_ == 0) {
    rat_ *= other.rat_;
    return *this;
  }
  // (a + b√d)(a' + b'√d) = (aa' + d bb') + (ab' + ba')√d
  mpq_class r = rat_ * other.rat_ + mpq_class(d_) * surd_ * other.surd_;
  mpq_class s = rat_ * other.surd_ + surd_ * other.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // 1/(a + b√d) = (a - b√d) / (a² - d b²); the norm is nonzero since √d is irrational.
  mpq_class norm = rat_ * rat_ - mpq_class(d_) * surd_ * surd_;
  return QuadScalar(rat_ / norm, -surd_ / norm, d_, Unchecked{});
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& other) {
  require_same_ambient(other);
  return *this *= other.inverse();
}

std::size_t QuadScalar::hash() const noexcept {
  std::size_t h = hash_mpq(rat_);
  h ^= hash_mpq(surd_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ std::hash<Ambient>{}(d_);
}

QuadScalar scalar_arith(ScalarOp op, const QuadScalar& a, const QuadScalar& b) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: return a / b;
    case ScalarOp::Neg: return -a;
  }
  return a;
}

Sign scalar_sign(const QuadScalar& a) {
  const int sr = sgn(a.rat());
  const int ss = sgn(a.surd());
  auto to_sign = [](int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); };
  if (ss == 0) return to_sign(sr);
  if (sr == 0 || sr == ss) return to_sign(ss);
  // Opposite signs: the larger of rat² and surd²·d wins. Equality would make √d rational.
  const mpq_class lhs = a.rat() * a.rat();
  const mpq_class rhs = a.surd() * a.surd() * mpq_class(a.ambient());
  return cmp(lhs, rhs) > 0 ? to_sign(sr) : to_sign(ss);
}

QuadScalar surd_conjugate(const QuadScalar& a) {
  if (a.is_rational()) return a;
  return QuadScalar(a.rat(), -a.surd(), a.ambient());
}

std::strong_ordering compare_value(const QuadScalar& a, const QuadScalar& b) {
  switch (scalar_sign(a - b)) {
    case Sign::Negative: return std::strong_ordering::less;
    case Sign::Positive: return std::strong_ordering::greater;
    case Sign::Zero: break;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const QuadScalar& a, const QuadScalar& b) {
  if (a.ambient() != b.ambient()) return a.ambient() <=> b.ambient();
  if (const int c = cmp(a.rat(), b.rat()); c != 0) return c <=> 0;
  return cmp(a.surd(), b.surd()) <=> 0;
}

bool is_algebraic_integer(const QuadScalar& a) {
  // Root of x² - 2a·x + (a² - d b²); monic with integer coefficients iff integral.
  const mpq_class trace = 2 * a.rat();
  const mpq_class norm = a.rat() * a.rat() - mpq_class(a.ambient()) * a.surd() * a.surd();
  return trace.get_den() == 1 && norm.get_den() == 1;
}

std::string to_string(const QuadScalar& a) {
  if (a.is_rational()) return rational_text(a.rat());
  std::string out;
  if (sgn(a.rat()) != 0) out = rational_text(a.rat());
  const mpq_class& s = a.surd();
  if (sgn(s) < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const mpq_class mag = abs(s);
  if (mag != 1) out += rational_text(mag);
  out += kRadical;
  out += std::to_string(a.ambient());
  return out;
}

QuadScalar parse_scalar(std::string_view text, Ambient d) {
  require_valid_ambient(d);
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty scalar");

  std::size_t marker = text.find(kRadical);
  std::size_t marker_len = kRadical.size();
  if (marker == std::string_view::npos) {
    marker = text.find(kRadicalAscii);
    marker_len = kRadicalAscii.size();
  }
  if (marker == std::string_view::npos) return QuadScalar::rational(parse_rational(text, whole), d);

  const std::string_view radicand = text.substr(marker + marker_len);
  if (!all_digits(radicand)) throw ParseError("bad scalar \"" + std::string(whole) + "\": expected radicand digits");
  if (std::stoll(std::string(radicand)) != d || d == 0) {
    throw ParseError("bad scalar \"" + std::string(whole) + "\": radicand does not match ambient d = " +
                     std::to_string(d));
  }

  const std::string_view head = text.substr(0, marker);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string_view rat_part = split == std::string_view::npos ? std::string_view{} : head.substr(0, split);
  std::string_view coef_part = split == std::string_view::npos ? head : head.substr(split);

  mpq_class rat = rat_part.empty() ? mpq_class(0) : parse_rational(rat_part, whole);
  mpq_class coef;
  if (coef_part.empty() || coef_part == "+") {
    coef = 1;
  } else if (coef_part == "-") {
    coef = -1;
  } else {
    coef = parse_rational(coef_part, whole);
  }
  return QuadScalar(std::move(rat), std::move(coef), d);
}

double approximate(const QuadScalar& a) {
  return a.rat().get_d() + a.surd().get_d() * std::sqrt(static_cast<double>(a.ambient()));
}

}  // namespace rotgroup
