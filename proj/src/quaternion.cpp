#include "u2quot/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "u2quot/error.hpp"

namespace u2quot {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  // values a hair below 2 pi belong to 0
  if (kTwoPi - a < 1e-12) a = 0;
  return a;
}

bool on_circle(const Quaternion& q) {
  return std::abs(q.x2) < kElementTolerance && std::abs(q.x3) < kElementTolerance;
}

}  // namespace

Quaternion Quaternion::unit_circle(double theta) { return {std::cos(theta), std::sin(theta), 0, 0}; }

double Quaternion::norm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3); }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

bool Quaternion::near(const Quaternion& o, double tol) const {
  return std::abs(x0 - o.x0) < tol && std::abs(x1 - o.x1) < tol && std::abs(x2 - o.x2) < tol &&
         std::abs(x3 - o.x3) < tol;
}

std::string Quaternion::to_string() const {
  std::ostringstream os;
  os.precision(6);
  os << "(" << x0 << " + " << x1 << "i + " << x2 << "j + " << x3 << "k)";
  return os.str();
}

bool U2Matrix::is_unitary(double tol) const {
  // columns orthonormal
  const U2Matrix& m = *this;
  double n0 = std::norm(m(0, 0)) + std::norm(m(1, 0));
  double n1 = std::norm(m(0, 1)) + std::norm(m(1, 1));
  Complex ip = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
  return std::abs(n0 - 1) < tol && std::abs(n1 - 1) < tol && std::abs(ip) < tol;
}

bool U2Matrix::near(const U2Matrix& o, double tol) const {
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - o.a[i]) >= tol) return false;
  return true;
}

U2Matrix operator*(const U2Matrix& x, const U2Matrix& y) {
  U2Matrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

GroupElement::GroupElement(const Quaternion& left, const Quaternion& right) : left_(left), right_(right) {
  if (std::abs(left.norm() - 1) > kElementTolerance || std::abs(right.norm() - 1) > kElementTolerance)
    throw Error(ErrorCode::InvalidParameters, "quaternion_core",
                "group element components must be unit quaternions: " + left.to_string() + ", " +
                    right.to_string());
}

GroupElement GroupElement::canonical() const {
  const double c[4] = {left_.x0, left_.x1, left_.x2, left_.x3};
  for (double x : c) {
    if (std::abs(x) > kElementTolerance) {
      if (x > 0) return *this;
      GroupElement r;
      r.left_ = -left_;
      r.right_ = -right_;
      return r;
    }
  }
  return *this;  // unreachable for unit quaternions
}

GroupElement::Key GroupElement::key() const {
  GroupElement c = canonical();
  const double v[8] = {c.left_.x0,  c.left_.x1,  c.left_.x2,  c.left_.x3,
                       c.right_.x0, c.right_.x1, c.right_.x2, c.right_.x3};
  Key k;
  for (int i = 0; i < 8; ++i) k[i] = std::llround(v[i] / kHashGrid);
  return k;
}

std::vector<GroupElement::Key> GroupElement::key_variants() const {
  GroupElement c = canonical();
  const double v[8] = {c.left_.x0,  c.left_.x1,  c.left_.x2,  c.left_.x3,
                       c.right_.x0, c.right_.x1, c.right_.x2, c.right_.x3};
  std::vector<Key> out{key()};
  const double margin = kElementTolerance / kHashGrid;
  for (int i = 0; i < 8; ++i) {
    double s = v[i] / kHashGrid;
    double frac = s - std::floor(s);
    if (std::abs(frac - 0.5) > margin) continue;
    std::int64_t alt = frac < 0.5 ? static_cast<std::int64_t>(std::floor(s)) + 1
                                  : static_cast<std::int64_t>(std::floor(s));
    std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) {
      Key k = out[j];
      k[i] = alt;
      out.push_back(k);
    }
  }
  return out;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return (left_.near(o.left_) && right_.near(o.right_)) || (left_.near(-o.left_) && right_.near(-o.right_));
}

std::string GroupElement::to_string() const { return "[" + left_.to_string() + ", " + right_.to_string() + "]"; }

std::size_t KeyHash::operator()(const GroupElement::Key& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {
// Renormalize to keep long products on the unit sphere.
Quaternion unitize(const Quaternion& q) {
  double n = q.norm();
  return {q.x0 / n, q.x1 / n, q.x2 / n, q.x3 / n};
}
}  // namespace

GroupElement compose(const GroupElement& g2, const GroupElement& g1) {
  return GroupElement(unitize(g2.left() * g1.left()), unitize(g1.right() * g2.right()));
}

GroupElement inverse(const GroupElement& g) { return GroupElement(g.left().conj(), g.right().conj()); }

GroupElement power(const GroupElement& g, std::int64_t k) {
  GroupElement base = k < 0 ? inverse(g) : g;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  GroupElement acc;
  while (e) {
    if (e & 1) acc = compose(base, acc);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

U2Matrix to_matrix(const GroupElement& g) {
  if (!on_circle(g.left()))
    throw Error(ErrorCode::NonCircleLeftFactor, "quaternion_core",
                "left component is not of the form e^{i theta}: " + g.left().to_string());
  Complex s = g.left().h1();
  Complex h1 = g.right().h1(), h2 = g.right().h2();
  return {{s * h1, -s * std::conj(h2), s * h2, s * std::conj(h1)}};
}

std::pair<double, double> eigen_angles(const GroupElement& g) {
  U2Matrix m = to_matrix(g);
  Complex tr = m.trace(), det = m.det();
  Complex disc = std::sqrt(tr * tr - 4.0 * det);
  Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
  double a = wrap_angle(std::arg(l1)), b = wrap_angle(std::arg(l2));
  if (a > b) std::swap(a, b);
  return {a, b};
}

double RiemannPoint::distance(const RiemannPoint& o) const {
  // chordal metric on the Riemann sphere
  if (inf_ && o.inf_) return 0;
  if (inf_) return 2 / std::sqrt(1 + std::norm(o.w_));
  if (o.inf_) return 2 / std::sqrt(1 + std::norm(w_));
  return 2 * std::abs(w_ - o.w_) / (std::sqrt(1 + std::norm(w_)) * std::sqrt(1 + std::norm(o.w_)));
}

std::string RiemannPoint::to_string() const {
  if (inf_) return "inf";
  std::ostringstream os;
  os.precision(6);
  os << w_.real() << (w_.imag() < 0 ? "-" : "+") << std::abs(w_.imag()) << "i";
  return os.str();
}

RiemannPoint MobiusMap::operator()(const RiemannPoint& p) const {
  if (p.is_infinity()) {
    if (std::abs(c) < kElementTolerance) return RiemannPoint::infinity();
    return RiemannPoint(a / c);
  }
  Complex w = p.value();
  Complex den = c * w + d;
  Complex num = a * w + b;
  if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(num))) return RiemannPoint::infinity();
  return RiemannPoint(num / den);
}

bool MobiusMap::is_identity(double tol) const {
  // projective identity: b = c = 0, a = d
  return std::abs(b) < tol && std::abs(c) < tol && std::abs(a - d) < tol;
}

std::vector<RiemannPoint> MobiusMap::fixed_points() const {
  if (is_identity()) return {};
  if (std::abs(c) < kElementTolerance) {
    // w = (a w + b) / d fixes inf and w = b / (d - a)
    if (std::abs(d - a) < kElementTolerance) return {RiemannPoint::infinity()};
    return {RiemannPoint(b / (d - a)), RiemannPoint::infinity()};
  }
  Complex B = d - a;
  Complex disc = std::sqrt(B * B + 4.0 * c * b);
  // numerically stable roots of c w^2 + B w - b = 0
  Complex q = -0.5 * (B + (std::real(std::conj(B) * disc) >= 0 ? disc : -disc));
  std::vector<RiemannPoint> out;
  if (std::abs(q) < 1e-14) {
    out.emplace_back(Complex(0.0));
    return out;
  }
  Complex r1 = q / c;
  Complex r2 = -b / q;
  out.emplace_back(r1);
  if (std::abs(disc) > kElementTolerance) out.emplace_back(r2);
  return out;
}

RiemannPoint hopf_project(Complex z1, Complex z2) {
  if (z1 == 0.0 && z2 == 0.0) throw Error(ErrorCode::BothZero, "quaternion_core", "Hopf map undefined at (0, 0)");
  if (z2 == 0.0) return RiemannPoint::infinity();
  return RiemannPoint(z1 / z2);
}

MobiusMap mobius_of(const GroupElement& g) {
  Complex h1 = g.right().h1(), h2 = g.right().h2();
  return {h1, -std::conj(h2), h2, std::conj(h1)};
}

GroupElement project_su2(const GroupElement& g) {
  if (!on_circle(g.left()))
    throw Error(ErrorCode::NonCircleLeftFactor, "quaternion_core",
                "left component is not of the form e^{i theta}: " + g.left().to_string());
  return GroupElement(Quaternion{1, 0, 0, 0}, g.right());
}

}  // namespace u2quot
