#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace u2quot {

using Complex = std::complex<double>;

// Tolerance for element equality and deduplication.
inline constexpr double kElementTolerance = 1e-9;
// Grid used to hash canonical element coordinates.
inline constexpr double kHashGrid = 1e-6;

/// Real quaternion x0 + x1 i + x2 j + x3 k.
///
/// The pair (z1, z2) of C^2 is identified with z1 + z2 j, so a quaternion is
/// also addressed through its complex halves h1 = x0 + x1 i and h2 = x2 + x3 i.
struct Quaternion {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  static Quaternion from_complex(Complex h1, Complex h2) {
    return {h1.real(), h1.imag(), h2.real(), h2.imag()};
  }
  // e^{i theta}
  static Quaternion unit_circle(double theta);

  Complex h1() const { return {x0, x1}; }
  Complex h2() const { return {x2, x3}; }

  double norm() const;
  Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
  }

  bool near(const Quaternion& other, double tol = kElementTolerance) const;
  std::string to_string() const;
};

/// 2x2 complex matrix, row major.
struct U2Matrix {
  std::array<Complex, 4> a{};

  Complex operator()(int r, int c) const { return a[2 * r + c]; }
  Complex& operator()(int r, int c) { return a[2 * r + c]; }

  static U2Matrix identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static U2Matrix diagonal(Complex d0, Complex d1) { return {{d0, 0.0, 0.0, d1}}; }

  Complex det() const { return a[0] * a[3] - a[1] * a[2]; }
  Complex trace() const { return a[0] + a[3]; }
  bool is_unitary(double tol = kElementTolerance) const;
  bool near(const U2Matrix& other, double tol = kElementTolerance) const;

  friend U2Matrix operator*(const U2Matrix& x, const U2Matrix& y);
  std::array<Complex, 2> apply(Complex z1, Complex z2) const {
    return {a[0] * z1 + a[1] * z2, a[2] * z1 + a[3] * z2};
  }
};

/// Element [alpha, beta] of S^3 x S^3 acting on H by h -> alpha * h * conj(beta).
///
/// Equality is taken modulo the kernel {(1,1), (-1,-1)}.
class GroupElement {
public:
  GroupElement() = default;
  // Throws Error(InvalidParameters) unless both components are unit
  // quaternions within kElementTolerance.
  GroupElement(const Quaternion& left, const Quaternion& right);

  static GroupElement identity() { return {}; }

  const Quaternion& left() const { return left_; }
  const Quaternion& right() const { return right_; }

  // Representative with the first nonzero coefficient of the left component
  // positive.
  GroupElement canonical() const;

  // Rounded canonical coordinates; equal keys mean equal elements.
  using Key = std::array<std::int64_t, 8>;
  Key key() const;
  // key() plus the keys obtained by rounding coordinates that sit within
  // kElementTolerance of a grid cell boundary the other way. Lookups must try
  // all of them; key() is always first.
  std::vector<Key> key_variants() const;

  bool operator==(const GroupElement& other) const;

  std::string to_string() const;

private:
  Quaternion left_{1, 0, 0, 0};
  Quaternion right_{1, 0, 0, 0};
};

struct KeyHash {
  std::size_t operator()(const GroupElement::Key& k) const noexcept;
};

/// [a2, b2] o [a1, b1] = [a2 * a1, b1 * b2]
GroupElement compose(const GroupElement& g2, const GroupElement& g1);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, std::int64_t k);

/// Left component must be e^{i theta}; throws Error(NonCircleLeftFactor)
/// otherwise.
U2Matrix to_matrix(const GroupElement& g);

/// Eigenvalue arguments of to_matrix(g) in [0, 2 pi), ascending.
std::pair<double, double> eigen_angles(const GroupElement& g);

/// Point of the Hopf base C u {inf}.
class RiemannPoint {
public:
  RiemannPoint() = default;
  explicit RiemannPoint(Complex w) : w_(w) {}
  static RiemannPoint infinity() {
    RiemannPoint p;
    p.inf_ = true;
    return p;
  }

  bool is_infinity() const { return inf_; }
  // Only meaningful when !is_infinity().
  Complex value() const { return w_; }

  // Chordal distance on the unit sphere.
  double distance(const RiemannPoint& other) const;
  bool near(const RiemannPoint& other, double tol = 1e-7) const { return distance(other) < tol; }
  std::string to_string() const;

private:
  Complex w_{0.0, 0.0};
  bool inf_ = false;
};

/// w -> (a w + b) / (c w + d)
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  RiemannPoint operator()(const RiemannPoint& p) const;
  // Solutions of c w^2 + (d - a) w - b = 0; 0 and inf when c == 0.
  // Empty for the identity map.
  std::vector<RiemannPoint> fixed_points() const;
  bool is_identity(double tol = kElementTolerance) const;
};

/// H(z1, z2) = z1 / z2; throws Error(BothZero) at the origin.
RiemannPoint hopf_project(Complex z1, Complex z2);

/// Möbius transformation induced on the Hopf base. Only the right factor
/// contributes.
MobiusMap mobius_of(const GroupElement& g);

/// [e^{i theta}, h] -> [1, h]
GroupElement project_su2(const GroupElement& g);

}  // namespace u2quot
