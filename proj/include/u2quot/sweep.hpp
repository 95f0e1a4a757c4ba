#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "u2quot/group_catalog.hpp"
#include "u2quot/rational.hpp"

namespace u2quot {

/// Sweep bounds and options. Text form is flat `key = value` lines with `#`
/// comments; later lines override earlier ones.
///
/// keys: families (comma list), m_max, n_max, p_max, hj_max, tolerance, out,
/// eta.<spec id> (rational, e.g. eta.dihedral:m=1:n=2 = -3/4)
struct SweepConfig {
  std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
  std::int64_t m_max = 120;
  std::int64_t n_max = 24;
  std::int64_t p_max = 200;
  std::int64_t hj_max = 500;
  double tolerance = 1e-6;
  std::map<std::string, Rational> eta;
  std::optional<std::string> out;

  // Throws Error(ConfigError).
  void set(const std::string& key, const std::string& value);
  void apply_text(const std::string& text);
  void validate() const;
  static SweepConfig parse(const std::string& text);
};

/// Every valid spec within the bounds, in family order.
std::vector<GroupSpec> sweep_specs(const SweepConfig& config);

struct CategoryCount {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct SweepSummary {
  std::int64_t spec_count = 0;
  std::map<std::string, CategoryCount> categories;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  double seconds = 0;

  bool all_pass() const { return failures.empty(); }
  int exit_code() const { return all_pass() ? 0 : 1; }
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs describe on every swept spec, then the global identities. Writes one
/// report per spec when `out` is set. `progress` receives each spec id.
SweepSummary verify(const SweepConfig& config,
                    const std::function<void(const std::string&)>& progress = nullptr);

/// Identity categories that do not depend on a spec.
void run_global_checks(const SweepConfig& config, SweepSummary& summary);

}  // namespace u2quot
