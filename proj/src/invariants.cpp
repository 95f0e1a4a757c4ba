#include "u2quot/invariants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "u2quot/error.hpp"

namespace u2quot {

namespace {

const char* kModule = "invariants";
constexpr double kPi = std::numbers::pi;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a % b != 0)
    throw Error(ErrorCode::CrossCheckFailure, kModule,
                std::to_string(a) + "/" + std::to_string(b) + " is not an integer in a case formula");
  return a / b;
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return 0;
  return x - Rational(floor_of(x)) - make_rational(1, 2);
}

Complex char_rho(Complex z1, Complex z2, std::int64_t m) {
  // geometric sum (z1^{2m-1} - z2^{2m-1}) / (z1 - z2)
  const double top = static_cast<double>(2 * m - 1);
  Complex sum;
  if (std::abs(z1 - z2) < 1e-9)
    sum = top * std::pow(z1, top - 1);
  else
    sum = (std::pow(z1, top) - std::pow(z2, top)) / (z1 - z2);
  return z1 * z2 * sum;
}

double eisenstein_check(std::int64_t n, std::int64_t k) {
  double lhs = 0;
  for (std::int64_t j = 1; j < n; ++j)
    lhs += std::sin(2 * kPi * static_cast<double>(k * j) / static_cast<double>(n)) /
           std::tan(kPi * static_cast<double>(j) / static_cast<double>(n));
  Rational rhs = -2 * n * sawtooth(make_rational(k, n));
  return std::abs(lhs - rhs.convert_to<double>());
}

double character_identity_residual(std::int64_t k, double theta) {
  Complex sum = 0;
  for (std::int64_t p = 0; p <= 2 * k; ++p) sum += std::polar(1.0, theta * static_cast<double>(2 * k - 2 * p));
  return std::abs(sum - std::sin(static_cast<double>(2 * k + 1) * theta) / std::sin(theta));
}

double index_identity_residual(std::int64_t m, double t1, double t2) {
  Complex lhs = char_rho(std::polar(1.0, t1 + t2), std::polar(1.0, t1 - t2), m);
  double a = 2.0 * static_cast<double>(m - 1) * t2;
  Complex rhs = std::polar(1.0, 2.0 * static_cast<double>(m) * t1) * (std::sin(a) / std::tan(t2) + std::cos(a));
  return std::abs(lhs - rhs);
}

bool greatest_integer_identity(std::int64_t x, std::int64_t y, std::int64_t z) {
  return floor_div(x - y, z) * z == x - x % z;
}

std::int64_t closed_form_dim(const GroupSpec& spec) {
  spec.validate();
  const std::int64_t m = spec.m;
  auto fl = [&](std::int64_t d) { return floor_div(m - 1, d); };
  switch (spec.family) {
    case Family::ProdDihedral:
    case Family::Index2Diagonal: {
      const std::int64_t n = spec.n;
      if ((m - 1) % n == 0) return 2 * (m - 1) / n + 2;
      return 2 * fl(n) + 2;
    }
    case Family::ProdTetrahedral:
      if (m % 6 == 5) return 4 * fl(3) - m + 3;
      if (m % 6 == 1) return exact_div(m - 1, 3) + 2;
      break;
    case Family::ProdOctahedral:
      switch (m % 12) {
        case 11: return 2 * fl(3) + 2 * fl(4) - m + 3;
        case 7: return 2 * fl(4) + exact_div(1 - m, 3) + 2;
        case 5: return 2 * fl(3) + exact_div(1 - m, 2) + 2;
        case 1: return exact_div(m - 1, 6) + 2;
      }
      break;
    case Family::ProdIcosahedral:
      switch (m % 30) {
        case 17:
        case 23:
        case 29: return 2 * fl(3) + 2 * fl(5) - m + 3;
        case 7:
        case 13:
        case 19: return 2 * fl(5) + exact_div(1 - m, 3) + 2;
        case 11: return 2 * fl(3) + exact_div(3 * (1 - m), 5) + 2;
        case 1: return exact_div(m - 1, 15) + 2;
      }
      break;
    case Family::Index3Diagonal: return exact_div(m, 3) + 1;
    case Family::Cyclic: break;
  }
  throw Error(ErrorCode::InvalidParameters, kModule, "no closed form for " + spec.to_string());
}

DeformationReport dim_sfk(const GroupSpec& spec, std::int64_t b, double tolerance) {
  spec.validate();
  if (spec.is_cyclic_equivalent())
    throw Error(ErrorCode::InvalidParameters, kModule, "deformation count needs a non-cyclic group");
  DeformationReport r;
  r.closed = closed_form_dim(spec);
  r.two_b_minus_2 = 2 * b - 2;
  r.applicable = spec.m > 1;

  auto gens = generators_of(spec);
  gens.erase(gens.begin());  // drop the fibre rotation
  auto elements = closure(gens, 2 * static_cast<std::size_t>(spec.expected_order()));
  r.subgroup_order = static_cast<std::int64_t>(elements.size());

  if (!r.applicable) {
    r.brute = 0;
    r.agreement = true;
    return r;
  }
  Complex sum = 0;
  for (const auto& g : elements) {
    auto [a, c] = eigen_angles(g);
    sum += char_rho(std::polar(1.0, a), std::polar(1.0, c), spec.m);
  }
  Complex value = 2.0 * sum / static_cast<double>(elements.size());
  double rounded = std::round(value.real());
  r.residual = std::max(std::abs(value.real() - rounded), std::abs(value.imag()));
  if (!(r.residual < tolerance)) {
    std::ostringstream os;
    os.precision(12);
    os << spec.to_string() << ": character sum " << value.real() << " + " << value.imag() << "i is not within "
       << tolerance << " of an integer (residual " << r.residual << ")";
    throw Error(ErrorCode::SnapFailure, kModule, os.str());
  }
  r.brute = static_cast<std::int64_t>(rounded);
  r.agreement = r.brute == r.closed && r.closed == r.two_b_minus_2;
  return r;
}

std::int64_t dim_h1_theta(const PlumbingGraph& g) {
  std::int64_t s = 0;
  for (auto w : g.weights()) s += std::abs(w) - 1;
  return s;
}

TopologyReport topology_report(std::int64_t order, std::int64_t k_gamma, std::optional<Rational> eta) {
  TopologyReport t;
  t.k_gamma = k_gamma;
  t.tau_top = -k_gamma;
  t.chi_top = 1 + k_gamma;
  t.b2_minus = k_gamma;
  t.chi_orb = Rational(t.chi_top) - make_rational(1, order);
  const Rational base = 2 - make_rational(2, order);
  t.implied_eta = (base - k_gamma) / 3;
  if (eta) {
    t.eta = eta;
    t.sfasd_bound = base - 3 * *eta;
    t.bound_holds = Rational(t.b2_minus) >= *t.sfasd_bound;
    t.bound_equality = Rational(t.b2_minus) == *t.sfasd_bound;
  }
  return t;
}

}  // namespace u2quot
