#include "u2quot/sweep.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "u2quot/error.hpp"
#include "u2quot/hirzebruch_jung.hpp"
#include "u2quot/invariants.hpp"
#include "u2quot/report.hpp"

namespace u2quot {

namespace {

const char* kModule = "cli_report";
constexpr double kPi = std::numbers::pi;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, kModule, msg); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_bound(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_error(key + " must be an integer, got '" + value + "'");
  }
}

// Element counts per unordered eigenvalue pair, angles in turns.
using Table = std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>;  // a/d, b/d, count

EigenHistogram histogram_of(const Table& t) {
  EigenHistogram h;
  for (auto [a, b, d, c] : t) h[{make_rational(a, d), make_rational(b, d)}] = c;
  return h;
}

// Eigenvalue statistics of the binary polyhedral groups.
const Table kBinaryTetrahedral = {{0, 0, 1, 1}, {1, 1, 2, 1}, {1, 3, 4, 6}, {1, 5, 6, 8}, {1, 2, 3, 8}};
const Table kBinaryOctahedral = {{0, 0, 1, 1}, {1, 1, 2, 1}, {1, 3, 4, 18}, {1, 5, 6, 8},
                                 {1, 2, 3, 8}, {1, 7, 8, 6},  {3, 5, 8, 6}};
const Table kBinaryIcosahedral = {{0, 0, 1, 1},   {1, 1, 2, 1},   {1, 3, 4, 30},  {1, 5, 6, 20}, {1, 2, 3, 20},
                                  {1, 9, 10, 12}, {3, 7, 10, 12}, {1, 4, 5, 12}, {2, 3, 5, 12}};

}  // namespace

void SweepConfig::set(const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key), value = trim(raw_value);
  if (key == "families") {
    families.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      if (item == "all") {
        families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
        continue;
      }
      auto f = parse_family(item);
      if (!f) config_error("unknown family '" + item + "'");
      families.push_back(*f);
    }
  } else if (key == "m_max") {
    m_max = parse_bound(key, value);
  } else if (key == "n_max") {
    n_max = parse_bound(key, value);
  } else if (key == "p_max") {
    p_max = parse_bound(key, value);
  } else if (key == "hj_max") {
    hj_max = parse_bound(key, value);
  } else if (key == "tolerance") {
    try {
      std::size_t used = 0;
      tolerance = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      config_error("tolerance must be a number, got '" + value + "'");
    }
  } else if (key == "out") {
    if (value.empty())
      out.reset();
    else
      out = value;
  } else if (key.rfind("eta.", 0) == 0) {
    std::string id = key.substr(4);
    GroupSpec spec = parse_spec_id(id);
    try {
      eta[spec.id()] = parse_rational(value);
    } catch (const std::invalid_argument&) {
      config_error("eta value for " + id + " is not a rational: '" + value + "'");
    }
  } else {
    config_error("unknown config key '" + key + "'");
  }
}

void SweepConfig::apply_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) config_error("line " + std::to_string(number) + ": expected key = value");
    // spec ids contain '=' themselves; the separator is the last one
    if (line.rfind("eta.", 0) == 0) eq = line.rfind('=');
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void SweepConfig::validate() const {
  if (m_max < 1 || n_max < 1 || p_max < 1 || hj_max < 1) config_error("bounds must be positive");
  if (!(tolerance > 0 && tolerance <= 1e-3)) config_error("tolerance must lie in (0, 1e-3]");
}

SweepConfig SweepConfig::parse(const std::string& text) {
  SweepConfig c;
  c.apply_text(text);
  c.validate();
  return c;
}

std::vector<GroupSpec> sweep_specs(const SweepConfig& config) {
  std::vector<GroupSpec> specs;
  auto push = [&](const GroupSpec& s) {
    if (s.is_valid()) specs.push_back(s);
  };
  for (Family f : config.families) {
    switch (f) {
      case Family::Cyclic:
        for (std::int64_t p = 2; p <= config.p_max; ++p)
          for (std::int64_t q = 1; q < p; ++q) push(GroupSpec::cyclic(q, p));
        break;
      case Family::ProdDihedral:
      case Family::Index2Diagonal:
        for (std::int64_t m = 1; m <= config.m_max; ++m)
          for (std::int64_t n = 1; n <= config.n_max; ++n) push(GroupSpec::make(f, m, n, 0, 0));
        break;
      default:
        for (std::int64_t m = 1; m <= config.m_max; ++m) push(GroupSpec::make(f, m, 0, 0, 0));
        break;
    }
  }
  return specs;
}

std::string SweepSummary::to_json() const {
  nlohmann::ordered_json j;
  j["spec_count"] = spec_count;
  j["seconds"] = seconds;
  j["exit_code"] = exit_code();
  nlohmann::ordered_json cats = nlohmann::ordered_json::object();
  for (const auto& [name, c] : categories) cats[name] = {{"passed", c.passed}, {"failed", c.failed}};
  j["categories"] = cats;
  j["failures"] = failures;
  j["warnings"] = warnings;
  return j.dump(2);
}

std::string SweepSummary::to_text() const {
  std::ostringstream os;
  os << "specs: " << spec_count << "\n";
  for (const auto& [name, c] : categories)
    os << "  " << (c.failed ? "FAIL " : "ok   ") << name << ": " << c.passed << " passed, " << c.failed
       << " failed\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  const std::size_t shown = std::min<std::size_t>(failures.size(), 50);
  for (std::size_t i = 0; i < shown; ++i) os << "failure: " << failures[i] << "\n";
  if (failures.size() > shown) os << "... " << failures.size() - shown << " more failures\n";
  os << (all_pass() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

void run_global_checks(const SweepConfig& config, SweepSummary& summary) {
  auto record = [&](const std::string& cat, bool pass, const std::string& what) {
    auto& c = summary.categories[cat];
    if (pass) {
      ++c.passed;
    } else {
      ++c.failed;
      summary.failures.push_back(cat + ": " + what);
    }
  };

  for (std::int64_t n = 2; n <= 200; ++n)
    for (std::int64_t k = 0; k <= 2 * n; ++k) {
      double r = eisenstein_check(n, k);
      record("eisenstein", r < config.tolerance,
             "n=" + std::to_string(n) + " k=" + std::to_string(k) + " residual " + std::to_string(r));
    }

  for (std::int64_t p = 2; p <= config.hj_max; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const std::string id = "L(" + std::to_string(q) + "," + std::to_string(p) + ")";
      HJString s = hj_string(q, p);
      bool entries_ok = true;
      for (auto e : s.entries) entries_ok = entries_ok && e >= 2;
      record("hj_roundtrip", entries_ok && cf_value(s) == make_rational(q, p), id);
      auto rem = hj_remainders(s.source);
      bool decreasing = !rem.empty() && rem.back() == 0 && rem.front() < q;
      for (std::size_t i = 1; i < rem.size(); ++i) decreasing = decreasing && rem[i] < rem[i - 1];
      record("hj_remainders", decreasing, id);
      HJString r = hj_string(swapped_type(s.source));
      std::vector<std::int64_t> rev(s.entries.rbegin(), s.entries.rend());
      record("hj_reversal", r.entries == rev, id);
    }

  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  std::uniform_int_distribution<std::int64_t> small(0, 60);
  for (int i = 0; i < 500; ++i) {
    std::int64_t k = small(rng);
    double theta = angle(rng);
    // keep sin(theta) away from zero
    if (std::abs(std::sin(theta)) < 1e-3) theta += 0.01;
    double r = character_identity_residual(k, theta);
    record("character_identity", r < 1e-8, "k=" + std::to_string(k) + " residual " + std::to_string(r));
  }
  for (int i = 0; i < 500; ++i) {
    std::int64_t m = 1 + small(rng);
    double t1 = angle(rng), t2 = angle(rng);
    if (std::abs(std::sin(t2)) < 1e-3) t2 += 0.01;
    double r = index_identity_residual(m, t1, t2);
    record("index_identity", r < 1e-8, "m=" + std::to_string(m) + " residual " + std::to_string(r));
  }
  std::uniform_int_distribution<std::int64_t> big(1, 100000);
  for (int done = 0; done < 1000;) {
    std::int64_t x = big(rng), z = 1 + big(rng) % 1000;
    if (x % z < 2) continue;
    std::int64_t y = 1 + big(rng) % (x % z - 1);
    record("greatest_integer", greatest_integer_identity(x, y, z),
           std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
    ++done;
  }

  for (Family f : config.families) {
    const Table* t = nullptr;
    if (f == Family::ProdTetrahedral) t = &kBinaryTetrahedral;
    if (f == Family::ProdOctahedral) t = &kBinaryOctahedral;
    if (f == Family::ProdIcosahedral) t = &kBinaryIcosahedral;
    if (!t) continue;
    GroupSpec spec = GroupSpec::make(f, 1, 0, 0, 0);
    record("eigenvalue_tables", eigenvalue_histogram(enumerate(spec)) == histogram_of(*t), spec.to_string());
  }
}

SweepSummary verify(const SweepConfig& config, const std::function<void(const std::string&)>& progress) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  std::vector<GroupSpec> specs = sweep_specs(config);
  summary.spec_count = static_cast<std::int64_t>(specs.size());

  if (config.out) {
    std::error_code ec;
    std::filesystem::create_directories(*config.out, ec);
    if (ec) summary.failures.push_back("io: cannot create " + *config.out + ": " + ec.message());
  }

  std::map<std::string, bool> eta_used;
  for (const auto& [id, v] : config.eta) eta_used[id] = false;

  for (const auto& spec : specs) {
    const std::string id = spec.id();
    if (progress) progress(id);
    DescribeOptions opt;
    opt.tolerance = config.tolerance;
    if (auto it = config.eta.find(id); it != config.eta.end()) {
      opt.eta = it->second;
      eta_used[id] = true;
    }
    try {
      InvariantReport r = describe(spec, opt);
      for (const auto& c : r.checks) {
        auto& cat = summary.categories[c.name];
        if (c.pass) {
          ++cat.passed;
        } else {
          ++cat.failed;
          summary.failures.push_back(id + ": " + c.name + ": " + c.detail);
        }
      }
      if (config.out) {
        auto path = std::filesystem::path(*config.out) / (spec.file_stem() + ".json");
        std::ofstream f(path);
        f << to_json(r) << "\n";
        if (!f) summary.failures.push_back("io: cannot write " + path.string());
      }
    } catch (const Error& e) {
      ++summary.categories["describe"].failed;
      summary.failures.push_back(id + ": " + e.describe());
    }
  }

  for (const auto& [id, used] : eta_used)
    if (!used) summary.warnings.push_back("eta given for " + id + ", which is not in the sweep");

  if (specs.empty())
    summary.warnings.push_back("no spec matches the configured families and bounds; nothing was checked");
  else
    run_global_checks(config, summary);

  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace u2quot
