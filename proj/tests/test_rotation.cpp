#include <doctest.h>

#include "helpers.hpp"
#include "rotgroup/error.hpp"
#include "rotgroup/fuzz.hpp"

using namespace rotgroup;
using testing_helpers::M;
using testing_helpers::Q;
using testing_helpers::S;

namespace {

// Rotation by conjugation v -> x v x̄ / |x|², built from qmul only.
Rot3 conjugation_oracle(const Quaternion& x) {
  const Ambient d = x.ambient();
  const Quaternion bar{x.x0, -x.x1, -x.x2, -x.x3};
  const QuadScalar inv = qnorm_sq(x).inverse();
  Rot3::Entries e;
  for (std::size_t c = 0; c < 3; ++c) {
    Quaternion basis = Quaternion::zero(d);
    (c == 0 ? basis.x1 : c == 1 ? basis.x2 : basis.x3) = QuadScalar::one(d);
    const Quaternion img = qmul(qmul(x, basis), bar);
    e[c] = img.x1 * inv;
    e[3 + c] = img.x2 * inv;
    e[6 + c] = img.x3 * inv;
  }
  return Rot3(e);
}

Vec3 vector_part(const Quaternion& x) { return {x.x1, x.x2, x.x3}; }

bool parallel(const Vec3& a, const Vec3& b) {
  return (a[1] * b[2] - a[2] * b[1]).is_zero() && (a[2] * b[0] - a[0] * b[2]).is_zero() &&
         (a[0] * b[1] - a[1] * b[0]).is_zero();
}

}  // namespace

TEST_SUITE("rotation") {

TEST_CASE("construction validates orthogonality and determinant") {
  CHECK_NOTHROW(M("1,0,0;0,-3/5,-4/5;0,4/5,-3/5"));
  CHECK_THROWS_AS(M("1,0,0;0,1,0;0,0,-1"), InvalidRotation);
  CHECK_THROWS_AS(M("1,0,0;0,1,1;0,0,1"), InvalidRotation);
  CHECK_THROWS_AS(M("2,0,0;0,1,0;0,0,1/2"), InvalidRotation);
  Rot3::Entries mixed = Rot3::identity(3).entries();
  mixed[0] = QuadScalar::one(0);
  CHECK_THROWS_AS(Rot3{mixed}, AmbientMismatch);
}

TEST_CASE("theta golden values") {
  CHECK(theta(Q("1,0,0,0")) == Rot3::identity());
  CHECK(theta(Q("0,1,0,0")) == Rot3::diagonal(1, -1, -1));
  CHECK(theta(Q("0,0,1,0")) == Rot3::diagonal(-1, 1, -1));
  CHECK(theta(Q("1,2,0,0")) == M("1,0,0;0,-3/5,-4/5;0,4/5,-3/5"));
  CHECK(theta(Q("1,0,2,0")) == M("-3/5,0,4/5;0,1,0;-4/5,0,-3/5"));
  CHECK(theta(Q("1,4,0,0")) == M("1,0,0;0,-15/17,-8/17;0,8/17,-15/17"));
  CHECK(theta(Q("1,1,0,0")) == M("1,0,0;0,0,-1;0,1,0"));
  CHECK(theta(Q("√3,1,0,0", 3)) == M("1,0,0;0,1/2,-1/2√3;0,1/2√3,1/2", 3));
  CHECK_THROWS_AS(theta(Quaternion::zero()), ZeroQuaternion);
}

TEST_CASE("theta matches conjugation, is a homomorphism and kills reals") {
  for (Ambient d : {0, 3}) {
    QuaternionFuzzer fuzz(555 + d, d);
    for (int n = 0; n < 1000; ++n) {
      const Quaternion x = fuzz.nonzero_quaternion(), y = fuzz.nonzero_quaternion();
      REQUIRE(theta(x) == conjugation_oracle(x));
      CHECK(theta(qmul(x, y)) == theta(x) * theta(y));
      const QuadScalar lambda = fuzz.nonzero_rational();
      CHECK(theta(lambda * x) == theta(x));
      CHECK(theta(Quaternion::real(fuzz.nonzero_scalar())) == Rot3::identity(d));
    }
  }
}

TEST_CASE("axis examples") {
  CHECK(axis_of(Rot3::diagonal(1, -1, -1)).direction() == Vec3{S("1"), S("0"), S("0")});
  CHECK(axis_of(theta(Q("1,2,0,0"))).direction() == Vec3{S("1"), S("0"), S("0")});
  const Rot3 m = theta(Q("0,0,1,1"));
  const Vec3 v{S("0"), S("1"), S("1")};
  CHECK(axis_of(m).direction() == v);
  CHECK(m.apply(v) == v);
  CHECK(axis_of(theta(Q("0,0,-2,-2"))).direction() == v);
  CHECK_THROWS_AS(axis_of(Rot3::identity()), IdentityHasNoAxis);
}

TEST_CASE("axis is fixed and parallel to the vector part") {
  for (Ambient d : {0, 3}) {
    QuaternionFuzzer fuzz(999 + d, d);
    for (int n = 0; n < 1000; ++n) {
      const Quaternion x = fuzz.nonreal_quaternion();
      const Rot3 m = theta(x);
      const Axis a = axis_of(m);
      CHECK(m.apply(a.direction()) == a.direction());
      CHECK(parallel(a.direction(), vector_part(x)));
      CHECK(a == Axis::from_direction(vector_part(x)));
    }
  }
}

TEST_CASE("element order examples") {
  const OrderResult half = element_order(Rot3::diagonal(1, -1, -1), 10);
  CHECK(half.kind == OrderKind::Finite);
  CHECK(half.order == 2);
  CHECK(to_string(half) == "Finite(2)");

  const OrderResult inf = element_order(theta(Q("1,2,0,0")), 100);
  CHECK(inf.kind == OrderKind::InfiniteCertified);
  CHECK(inf.certificate.find("-6/5") != std::string::npos);

  const OrderResult six = element_order(M("1,0,0;0,1/2,-1/2√3;0,1/2√3,1/2", 3), 10);
  CHECK(six.kind == OrderKind::Finite);
  CHECK(six.order == 6);

  CHECK(element_order(Rot3::identity()).order == 1);
  CHECK(element_order(theta(Q("1,1,0,0"))).order == 4);
  CHECK(element_order(theta(Q("1,1,1,1"))).order == 3);
  CHECK(element_order(theta(Q("1,0,0,1"))).order == 4);
  CHECK(element_order(M("1,0,0;0,1/2,-1/2√3;0,1/2√3,1/2", 3), 5).kind == OrderKind::UnknownWithinCap);
}

TEST_CASE("order certificate agrees with power iteration on the corpus") {
  for (const auto& entry : build_corpus(standard_corpus())) {
    for (const Rot3& m : entry.group.elements()) {
      CHECK(passes_finite_order_certificate(m));
      const OrderResult r = element_order(m, 100);
      REQUIRE(r.kind == OrderKind::Finite);
      CHECK(r.order <= 12);
      CHECK(power(m, static_cast<std::int64_t>(r.order)).is_identity());
    }
  }
}

TEST_CASE("the Pythagorean rotation never returns to the identity") {
  // e^{iφ} = (-3+4i)/5, so 5ⁿ cos(nφ) = Re((-3+4i)ⁿ). A return to E would make
  // that real part 5ⁿ, which is 0 mod 5; it never is.
  const Rot3 b = theta(Q("1,2,0,0"));
  mpz_class re = 1, im = 0, five_n = 1;
  for (std::int64_t n = 1; n <= 120; ++n) {
    const mpz_class next_re = -3 * re - 4 * im;
    im = 4 * re - 3 * im;
    re = next_re;
    five_n *= 5;
    REQUIRE(mpz_class(re % 5) != 0);
    mpq_class cos_term(mpz_class(2 * re), five_n);
    cos_term.canonicalize();
    const QuadScalar expected_trace = QuadScalar::one() + QuadScalar::rational(cos_term);
    CHECK(power(b, n).trace() == expected_trace);
    CHECK_FALSE(power(b, n).is_identity());
  }
}

TEST_CASE("powers and inverses") {
  const Rot3 b = theta(Q("1,2,0,0"));
  CHECK(power(b, 0) == Rot3::identity());
  CHECK(power(b, -1) == b.inverse());
  CHECK(power(b, 3) * power(b, -3) == Rot3::identity());
  CHECK(b * b.inverse() == Rot3::identity());
}

TEST_CASE("commutation examples") {
  const Rot3 a = Rot3::diagonal(1, -1, -1);
  CHECK(rot_commutes(a, theta(Q("1,2,0,0"))));
  CHECK_FALSE(rot_commutes(theta(Q("1,1,0,0")), theta(Q("0,0,1,0"))));
  CHECK(rot_commutes(theta(Q("3,1,4,1")), Rot3::identity()));
}

TEST_CASE("rotations commuting with a half-turn keep its axis or are perpendicular half-turns") {
  const Rot3 a = Rot3::diagonal(1, -1, -1);
  QuaternionFuzzer fuzz(1515, 0);
  int commuting = 0, flips = 0;
  for (int n = 0; n < 1000; ++n) {
    Quaternion x;
    switch (fuzz.pick(3)) {
      case 0: x = Quaternion{fuzz.scalar(), fuzz.scalar(), S("0"), S("0")}; break;
      case 1: x = Quaternion{S("0"), S("0"), fuzz.scalar(), fuzz.scalar()}; break;
      default: x = fuzz.quaternion(); break;
    }
    if (x.is_zero()) continue;
    const Rot3 m = theta(x);
    if (!rot_commutes(m, a)) continue;
    ++commuting;
    const bool first_row = m(0, 1).is_zero() && m(0, 2).is_zero();
    const bool first_col = m(1, 0).is_zero() && m(2, 0).is_zero();
    REQUIRE(first_row);
    REQUIRE(first_col);
    const QuadScalar& m00 = m(0, 0);
    REQUIRE((m00.is_one() || m00 == S("-1")));
    if (m00 == S("-1")) {
      ++flips;
      CHECK(element_order(m).order == 2);
      CHECK(axis_of(m).direction()[0].is_zero());
    }
  }
  CHECK(commuting > 300);
  CHECK(flips > 100);
}

TEST_CASE("two half-turns about yz-plane axes commute iff the axes agree or are perpendicular") {
  QuaternionFuzzer fuzz(1717, 0);
  int same = 0, perpendicular_count = 0, other = 0;
  for (int n = 0; n < 600; ++n) {
    const Quaternion x{S("0"), S("0"), fuzz.nonzero_scalar(), fuzz.scalar()};
    Quaternion y;
    switch (fuzz.pick(3)) {
      case 0: {
        const QuadScalar t = fuzz.nonzero_rational();
        y = Quaternion{S("0"), S("0"), t * x.x2, t * x.x3};
        break;
      }
      case 1: {
        const QuadScalar t = fuzz.nonzero_rational();
        y = Quaternion{S("0"), S("0"), t * x.x3, -(t * x.x2)};
        break;
      }
      default: y = Quaternion{S("0"), S("0"), fuzz.scalar(), fuzz.nonzero_scalar()}; break;
    }
    const Rot3 mx = theta(x), my = theta(y);
    REQUIRE(element_order(mx).order == 2);
    REQUIRE(element_order(my).order == 2);
    const Axis ax = axis_of(mx), ay = axis_of(my);
    const bool geometric = ax == ay || dot(ax.direction(), ay.direction()).is_zero();
    CHECK(rot_commutes(mx, my) == geometric);
    if (ax == ay) ++same;
    else if (geometric) ++perpendicular_count;
    else ++other;
  }
  CHECK(same > 20);
  CHECK(perpendicular_count > 20);
  CHECK(other > 20);
}

}  // TEST_SUITE
