#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u2quot/group_catalog.hpp"
#include "u2quot/hirzebruch_jung.hpp"
#include "u2quot/lattice.hpp"
#include "u2quot/rational.hpp"

namespace u2quot {

/// Star-shaped weighted tree. Arms list signed self-intersection weights with
/// arms[i][0] adjacent to the center. A chain has no center and one arm.
struct PlumbingGraph {
  std::optional<std::int64_t> center;
  std::vector<std::vector<std::int64_t>> arms;

  static PlumbingGraph chain(std::vector<std::int64_t> weights) { return {std::nullopt, {std::move(weights)}}; }

  std::size_t vertex_count() const;
  // Vertex weights in matrix order: center first, then arms in order.
  std::vector<std::int64_t> weights() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  IntMatrix matrix() const;
  std::string to_dot(const std::string& name) const;
  bool operator==(const PlumbingGraph&) const = default;
};

/// Arbitrary configuration of curves given by weights and incidences.
struct CurveConfiguration {
  std::vector<std::int64_t> weights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  IntMatrix matrix() const;
  std::string to_dot(const std::string& name) const;
  bool operator==(const CurveConfiguration&) const = default;
};

/// Rational Seifert invariant e = w_center - sum_i 1/[w_i1, w_i2, ...] with
/// signed weights and [a, ...] = a - 1/[...]. A chain is read with its first
/// vertex as the center. Throws Error(MalformedGraph) on empty graphs, empty
/// arms or a vanishing partial continued fraction.
Rational seifert_euler(const PlumbingGraph& g);

struct SingularityTriple {
  std::array<CyclicType, 3> table;     // sorted, normalized
  std::array<CyclicType, 3> computed;  // sorted, normalized
  bool from_table = true;
  bool from_computation = true;
  std::string match_mode;  // "plain" or "conjugate"
};

/// Table of singular points of the model quotient, normalized and sorted.
/// Throws Error(InvalidParameters) for cyclic-equivalent specs.
std::array<CyclicType, 3> table_singularities(const GroupSpec& spec);

/// Singular points found from fixed points of the induced action on the
/// Hopf base. Throws Error(OrbitCountMismatch) unless there are exactly three
/// singular orbits, Error(SnapFailure) if rotation angles are not rational.
std::array<CyclicType, 3> computed_singularities(const FiniteGroup& group);

/// Both routes with agreement asserted; Error(TableDisagreement) otherwise.
SingularityTriple singularity_triple(const FiniteGroup& group);
SingularityTriple singularity_triple(const GroupSpec& spec);

/// 2 + (4m/|G|)(m - m mod |G|/4m).
std::int64_t b_gamma_integer(const GroupSpec& spec);
/// sum alpha_i/beta_i + 2m/h.
Rational b_gamma_rational(const GroupSpec& spec, const std::array<CyclicType, 3>& types);

struct BGamma {
  std::int64_t value = 0;
  Rational rational;
};
/// Throws Error(CrossCheckFailure) if the routes differ or b < 2.
BGamma b_gamma(const GroupSpec& spec, const std::array<CyclicType, 3>& types);

struct Resolution {
  PlumbingGraph graph;
  std::vector<CyclicType> types;  // one per arm (a single entry for chains)
  std::vector<HJString> strings;
  std::int64_t k_gamma = 0;
  int signature = 0;
  bool negative_definite = false;
};

/// Star graph with center -b and arms -hj_string(type_i).
Resolution resolution_graph(const std::array<CyclicType, 3>& types, std::int64_t b);
/// Hirzebruch-Jung chain of a cyclic quotient.
Resolution resolution_chain(const CyclicType& type);

struct BPrimeDiagnostics {
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  std::vector<std::int64_t> linked;   // fibre-linked configuration has inertia (1, kappa, 3)
  std::vector<std::int64_t> stars;    // disjoint stars: inertia (1, kappa, 0), |det| a square
  std::vector<std::int64_t> seifert;  // compactification Seifert invariant = 2m/h
  std::vector<std::int64_t> all;      // values meeting every criterion
  bool operator==(const BPrimeDiagnostics&) const = default;
};

struct Compactification {
  PlumbingGraph star;  // center +b', arms of the dual strings
  std::vector<CyclicType> dual_types;
  std::vector<HJString> dual_strings;
  std::vector<std::int64_t> ell;
  std::int64_t kappa = 0;
  std::int64_t b_prime = 0;
  BPrimeDiagnostics diagnostics;
  CurveConfiguration curves;  // compactification star followed by the resolution star
  CurveConfiguration linked;  // curves plus three -1 fibres joining matching arm tips
  Inertia curves_inertia;
  Inertia linked_inertia;
  Rational star_euler;  // seifert_euler(star)
};

/// Compactification star, curve bookkeeping and the b' oracle. Throws
/// Error(NoCandidate) or Error(AmbiguousCandidate) unless exactly one b' in
/// [-10b, 10b] meets every criterion.
Compactification compactification(const GroupSpec& spec, const Resolution& res, std::int64_t b);

/// Runs the b' search alone.
BPrimeDiagnostics solve_b_prime(const GroupSpec& spec, const Resolution& res, std::int64_t b);

}  // namespace u2quot
