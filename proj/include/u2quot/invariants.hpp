#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "u2quot/group_catalog.hpp"
#include "u2quot/rational.hpp"
#include "u2quot/resolution.hpp"

namespace u2quot {

/// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// (z1 z2) * sum_{p=0}^{2m-2} z1^{2m-2-p} z2^p
Complex char_rho(Complex z1, Complex z2, std::int64_t m);

/// |sum_{j=1}^{n-1} sin(2 pi k j/n) cot(pi j/n) + 2n((k/n))|
double eisenstein_check(std::int64_t n, std::int64_t k);

/// |sum_{p=0}^{2k} e^{i theta (2k-2p)} - sin((2k+1) theta)/sin(theta)|
double character_identity_residual(std::int64_t k, double theta);

/// |chi(e^{i(t1+t2)}, e^{i(t1-t2)}) - e^{2imt1}[sin(2(m-1)t2)cot(t2) + cos(2(m-1)t2)]|
double index_identity_residual(std::int64_t m, double theta1, double theta2);

/// floor((x-y)/z) == (x - x mod z)/z for positive integers with y < x mod z.
bool greatest_integer_identity(std::int64_t x, std::int64_t y, std::int64_t z);

struct DeformationReport {
  std::int64_t brute = 0;
  std::int64_t closed = 0;
  std::int64_t two_b_minus_2 = 0;
  bool applicable = true;  // false for m = 1
  bool agreement = false;
  double residual = 0;  // distance of the raw character sum from the snapped integer
  std::int64_t subgroup_order = 0;
  bool operator==(const DeformationReport&) const = default;
};

/// Case formula of the deformation dimension for a non-cyclic family.
/// Throws Error(InvalidParameters) when no case covers m.
std::int64_t closed_form_dim(const GroupSpec& spec);

/// (2/|G'|) Re sum_{g in G'} chi(eigenvalues(g)), G' generated without the
/// fibre rotation. Throws Error(SnapFailure) when the sum is more than
/// `tolerance` away from an integer or has an imaginary part that large.
DeformationReport dim_sfk(const GroupSpec& spec, std::int64_t b, double tolerance = 1e-6);

/// sum over vertices of (|w| - 1)
std::int64_t dim_h1_theta(const PlumbingGraph& g);

/// 2(b - 1) + k
inline std::int64_t moduli_dim(std::int64_t b, std::int64_t k_gamma) { return 2 * (b - 1) + k_gamma; }

struct TopologyReport {
  std::int64_t k_gamma = 0;
  std::int64_t tau_top = 0;
  std::int64_t chi_top = 0;
  std::int64_t b2_minus = 0;
  Rational chi_orb;
  Rational implied_eta;
  std::optional<Rational> eta;
  std::optional<Rational> sfasd_bound;
  std::optional<bool> bound_holds;
  std::optional<bool> bound_equality;
  bool operator==(const TopologyReport&) const = default;
};

/// Topological side of the signature and Gauss-Bonnet formulas, with the
/// b2- lower bound evaluated when eta is known.
TopologyReport topology_report(std::int64_t order, std::int64_t k_gamma, std::optional<Rational> eta);

}  // namespace u2quot
