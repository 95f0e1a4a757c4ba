#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "u2quot/group_catalog.hpp"
#include "u2quot/invariants.hpp"
#include "u2quot/resolution.hpp"

namespace u2quot {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  bool operator==(const Check&) const = default;
};

struct SingularitySection {
  std::array<CyclicType, 3> types;
  std::array<CyclicType, 3> computed;
  std::vector<std::vector<std::int64_t>> strings;
  std::vector<std::int64_t> k;
  std::string match_mode;
  bool operator==(const SingularitySection&) const = default;
};

struct CompactificationSection {
  std::int64_t b_prime = 0;
  std::int64_t kappa = 0;
  std::vector<CyclicType> dual_types;
  std::vector<std::vector<std::int64_t>> dual_strings;
  std::vector<std::int64_t> ell;
  PlumbingGraph graph;
  CurveConfiguration curves;
  Inertia curves_inertia;
  Inertia linked_inertia;
  Rational star_euler;
  BPrimeDiagnostics diagnostics;
  bool operator==(const CompactificationSection&) const = default;
};

/// Everything computed for one spec. Sections that do not apply are empty:
/// cyclic-equivalent specs carry a cyclic type and a chain instead of the
/// singular triple, compactification and deformation data.
struct InvariantReport {
  GroupSpec spec;
  bool cyclic_equivalent = false;
  std::int64_t order = 0;
  std::optional<CyclicType> cyclic_type;
  std::optional<SingularitySection> singularities;
  std::optional<std::int64_t> b_gamma;
  std::optional<Rational> b_gamma_rational;
  std::int64_t k_gamma = 0;
  std::int64_t signature = 0;
  PlumbingGraph resolution;
  std::optional<CompactificationSection> compactification;
  std::optional<DeformationReport> deformations;
  std::optional<std::int64_t> moduli_dim;
  std::int64_t h1_theta = 0;
  TopologyReport topology;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* find_check(const std::string& name) const;
  bool operator==(const InvariantReport&) const = default;
};

struct DescribeOptions {
  double tolerance = 1e-6;
  std::optional<Rational> eta;
};

/// Runs every applicable computation for a spec. Cross-check outcomes land in
/// `checks`; hard failures propagate as Error with the originating module.
InvariantReport describe(const GroupSpec& spec, const DescribeOptions& options = {});

std::string to_json(const InvariantReport& r, int indent = 2);
/// Throws Error(ConfigError) on malformed input.
InvariantReport report_from_json(const std::string& text);
std::string to_text(const InvariantReport& r);

enum class GraphKind { Resolution, Compactification };
/// Throws Error(InvalidParameters) if the report has no such graph.
std::string to_dot(const InvariantReport& r, GraphKind kind);
/// Throws Error(IoError) when the file cannot be written.
void export_dot(const InvariantReport& r, GraphKind kind, const std::string& path);

}  // namespace u2quot
