#include <doctest.h>

#include <cmath>
#include <numbers>

#include "u2quot/error.hpp"
#include "u2quot/quaternion.hpp"

using namespace u2quot;
using std::numbers::pi;

namespace {

// Hamilton product written out component by component.
Quaternion hamilton(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

Quaternion unit(double a, double b, double c, double d) {
  double n = std::sqrt(a * a + b * b + c * c + d * d);
  return {a / n, b / n, c / n, d / n};
}

const Quaternion kSamples[] = {unit(1, 2, -1, 0.5), unit(0.3, -0.7, 0.2, 0.9), unit(-1, 0, 0, 1),
                               unit(0.5, 0.5, 0.5, 0.5), unit(0, 0, 1, 0)};

}  // namespace

TEST_CASE("quaternion product matches the Hamilton table") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1}, one{1, 0, 0, 0};
  CHECK((i * j).near(k));
  CHECK((j * k).near(i));
  CHECK((k * i).near(j));
  CHECK((i * i).near(-one));
  CHECK((i * j * k).near(-one));
  for (const auto& a : kSamples)
    for (const auto& b : kSamples) CHECK((a * b).near(hamilton(a, b)));
}

TEST_CASE("norm is multiplicative and conjugation inverts units") {
  for (const auto& a : kSamples) {
    CHECK(a.norm() == doctest::Approx(1.0));
    CHECK((a * a.conj()).near({1, 0, 0, 0}));
    for (const auto& b : kSamples) CHECK((a * b).norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("complex halves round trip") {
  Quaternion q = Quaternion::from_complex({0.1, 0.2}, {0.3, 0.4});
  CHECK(q.h1() == Complex(0.1, 0.2));
  CHECK(q.h2() == Complex(0.3, 0.4));
}

TEST_CASE("group element construction rejects non-unit components") {
  CHECK_THROWS_AS(GroupElement(Quaternion{2, 0, 0, 0}, Quaternion{1, 0, 0, 0}), Error);
  try {
    GroupElement(Quaternion{1, 0, 0, 0}, Quaternion{0, 0, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameters);
  }
}

TEST_CASE("elements are equal modulo the global sign") {
  GroupElement g(kSamples[0], kSamples[1]);
  GroupElement neg(-kSamples[0], -kSamples[1]);
  CHECK(g == neg);
  CHECK(g.key() == neg.key());
  CHECK(g.canonical().key() == g.key());
  CHECK_FALSE(g == GroupElement(kSamples[0], -kSamples[1]));
}

TEST_CASE("key variants cover coordinates on a rounding boundary") {
  // 0.5 * kHashGrid sits on a cell boundary for round-half-away rounding
  double edge = 0.5 * kHashGrid;
  double c = std::sqrt(1 - edge * edge);
  GroupElement g(Quaternion{c, edge, 0, 0}, Quaternion{1, 0, 0, 0});
  auto keys = g.key_variants();
  CHECK(keys.front() == g.key());
  CHECK(keys.size() >= 2);
}

TEST_CASE("composition, inverse and powers") {
  GroupElement a(kSamples[0], kSamples[1]), b(kSamples[2], kSamples[3]);
  GroupElement ab = compose(a, b);
  CHECK(ab.left().near(hamilton(a.left(), b.left())));
  CHECK(ab.right().near(hamilton(b.right(), a.right())));
  CHECK(compose(a, inverse(a)) == GroupElement::identity());
  CHECK(power(a, 3) == compose(a, compose(a, a)));
  CHECK(power(a, 0) == GroupElement::identity());
  CHECK(power(a, -1) == inverse(a));
}

TEST_CASE("matrix is right multiplication scaled by the fibre phase") {
  for (double theta : {0.0, 0.4, pi / 3, 2.5}) {
    for (const auto& beta : kSamples) {
      GroupElement g(Quaternion::unit_circle(theta), beta);
      U2Matrix m = to_matrix(g);
      CHECK(m.is_unitary());
      for (Complex z1 : {Complex(1, 0), Complex(0.3, -0.2)}) {
        for (Complex z2 : {Complex(0, 1), Complex(-0.5, 0.1)}) {
          Quaternion z = Quaternion::from_complex(z1, z2);
          Quaternion img = hamilton(Quaternion::unit_circle(theta), hamilton(z, beta));
          auto w = m.apply(z1, z2);
          CHECK(std::abs(w[0] - img.h1()) < 1e-12);
          CHECK(std::abs(w[1] - img.h2()) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("matrix representation is a homomorphism") {
  GroupElement a(Quaternion::unit_circle(0.7), kSamples[0]);
  GroupElement b(Quaternion::unit_circle(-1.1), kSamples[1]);
  CHECK(to_matrix(compose(a, b)).near(to_matrix(a) * to_matrix(b)));
}

TEST_CASE("matrix requires a circle left factor") {
  GroupElement g(unit(1, 0, 1, 0), kSamples[0]);
  try {
    to_matrix(g);
    FAIL("expected NonCircleLeftFactor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCircleLeftFactor);
  }
}

TEST_CASE("eigen angles of a diagonal element") {
  // [e^{i a}, e^{i b}] acts as diag(e^{i(a+b)}, e^{i(a-b)})
  GroupElement g(Quaternion::unit_circle(0.3), Quaternion::unit_circle(0.5));
  auto [x, y] = eigen_angles(g);
  CHECK(x == doctest::Approx(0.8));
  CHECK(y == doctest::Approx(2 * pi - 0.2));
  CHECK(x <= y);
}

TEST_CASE("Hopf projection intertwines the Mobius map") {
  for (const auto& beta : kSamples) {
    GroupElement g(Quaternion::unit_circle(1.3), beta);
    U2Matrix m = to_matrix(g);
    MobiusMap f = mobius_of(g);
    for (Complex z1 : {Complex(1, 0.5), Complex(-0.2, 0.1), Complex(0, 0)}) {
      Complex z2(0.4, -0.3);
      auto w = m.apply(z1, z2);
      CHECK(hopf_project(w[0], w[1]).near(f(hopf_project(z1, z2)), 1e-9));
    }
  }
  CHECK(hopf_project(1, 0).is_infinity());
  CHECK_THROWS_AS(hopf_project(0, 0), Error);
}

TEST_CASE("fixed points are fixed") {
  for (const auto& beta : kSamples) {
    MobiusMap f = mobius_of(GroupElement(Quaternion{1, 0, 0, 0}, beta));
    if (f.is_identity()) continue;
    auto pts = f.fixed_points();
    CHECK(pts.size() == 2);
    for (const auto& p : pts) CHECK(f(p).near(p, 1e-9));
  }
  MobiusMap rot{Complex(0, 1), 0, 0, Complex(0, -1)};
  auto pts = rot.fixed_points();
  REQUIRE(pts.size() == 2);
  CHECK((pts[0].is_infinity() || pts[1].is_infinity()));
  CHECK(MobiusMap{}.fixed_points().empty());
}

TEST_CASE("fibre phase does not move the Hopf base") {
  GroupElement g(Quaternion::unit_circle(0.9), kSamples[1]);
  CHECK(project_su2(g).left().near({1, 0, 0, 0}));
  CHECK(mobius_of(GroupElement(Quaternion::unit_circle(0.9), Quaternion{1, 0, 0, 0})).is_identity());
}

TEST_CASE("chordal distance") {
  RiemannPoint zero(0), inf = RiemannPoint::infinity();
  CHECK(zero.distance(inf) == doctest::Approx(2.0));
  CHECK(inf.distance(inf) == doctest::Approx(0.0));
  CHECK(RiemannPoint(1e9).near(inf, 1e-6));
}
