#include "u2quot/group_catalog.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <regex>
#include <unordered_map>

#include "u2quot/error.hpp"

namespace u2quot {

namespace {

constexpr double kPi = std::numbers::pi;
const char* kModule = "group_catalog";

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidParameters, kModule, msg); }

GroupElement pair(const Quaternion& a, const Quaternion& b) { return GroupElement(a, b); }
const Quaternion kOne{1, 0, 0, 0};

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::ProdDihedral: return "dihedral";
    case Family::ProdTetrahedral: return "tetrahedral";
    case Family::ProdOctahedral: return "octahedral";
    case Family::ProdIcosahedral: return "icosahedral";
    case Family::Index2Diagonal: return "index2";
    case Family::Index3Diagonal: return "index3";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

GroupSpec GroupSpec::make(Family f, std::int64_t m, std::int64_t n, std::int64_t q, std::int64_t p) {
  switch (f) {
    case Family::Cyclic: return cyclic(q, p);
    case Family::ProdDihedral: return dihedral(m, n);
    case Family::Index2Diagonal: return index2(m, n);
    default: return {f, m, 0, 0, 0};
  }
}

void GroupSpec::validate() const {
  auto positive = [](std::int64_t v, const char* name) {
    if (v < 1) invalid(std::string(name) + " must be a positive integer, got " + std::to_string(v));
  };
  switch (family) {
    case Family::Cyclic:
      positive(q, "q");
      positive(p, "p");
      if (p < 2) invalid("cyclic groups need p >= 2");
      if (std::gcd(q, p) != 1) invalid("cyclic(q=" + std::to_string(q) + ", p=" + std::to_string(p) + ") needs gcd(q,p)=1");
      return;
    case Family::ProdDihedral:
      positive(m, "m");
      positive(n, "n");
      if (std::gcd(m, 2 * n) != 1)
        invalid("dihedral(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ") needs gcd(m,2n)=1");
      return;
    case Family::ProdTetrahedral:
    case Family::ProdOctahedral:
      positive(m, "m");
      if (std::gcd(m, std::int64_t{6}) != 1)
        invalid(std::string(family_name(family)) + "(m=" + std::to_string(m) + ") needs gcd(m,6)=1");
      return;
    case Family::ProdIcosahedral:
      positive(m, "m");
      if (std::gcd(m, std::int64_t{30}) != 1) invalid("icosahedral(m=" + std::to_string(m) + ") needs gcd(m,30)=1");
      return;
    case Family::Index2Diagonal:
      positive(m, "m");
      positive(n, "n");
      if (m % 2 != 0 || std::gcd(m, n) != 1)
        invalid("index2(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ") needs m even and gcd(m,n)=1");
      return;
    case Family::Index3Diagonal:
      positive(m, "m");
      if (std::gcd(m, std::int64_t{6}) != 3) invalid("index3(m=" + std::to_string(m) + ") needs gcd(m,6)=3");
      return;
  }
}

bool GroupSpec::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::int64_t GroupSpec::expected_order() const {
  switch (family) {
    case Family::Cyclic: return p;
    case Family::ProdDihedral:
    case Family::Index2Diagonal: return 4 * m * n;
    case Family::ProdTetrahedral:
    case Family::Index3Diagonal: return 24 * m;
    case Family::ProdOctahedral: return 48 * m;
    case Family::ProdIcosahedral: return 120 * m;
  }
  return 0;
}

bool GroupSpec::is_degenerate() const {
  return (family == Family::ProdDihedral || family == Family::Index2Diagonal) && n == 1;
}

std::int64_t GroupSpec::polyhedral_order() const {
  switch (family) {
    case Family::ProdDihedral:
    case Family::Index2Diagonal: return 2 * n;
    case Family::ProdTetrahedral:
    case Family::Index3Diagonal: return 12;
    case Family::ProdOctahedral: return 24;
    case Family::ProdIcosahedral: return 60;
    case Family::Cyclic: break;
  }
  invalid("cyclic groups have no polyhedral image");
}

std::int64_t GroupSpec::period() const { return expected_order() / (4 * m); }

std::string GroupSpec::id() const {
  std::string s(family_name(family));
  switch (family) {
    case Family::Cyclic: return s + ":q=" + std::to_string(q) + ":p=" + std::to_string(p);
    case Family::ProdDihedral:
    case Family::Index2Diagonal: return s + ":m=" + std::to_string(m) + ":n=" + std::to_string(n);
    default: return s + ":m=" + std::to_string(m);
  }
}

std::string GroupSpec::file_stem() const {
  std::string s(family_name(family));
  switch (family) {
    case Family::Cyclic: return s + "_q" + std::to_string(q) + "_p" + std::to_string(p);
    case Family::ProdDihedral:
    case Family::Index2Diagonal: return s + "_m" + std::to_string(m) + "_n" + std::to_string(n);
    default: return s + "_m" + std::to_string(m);
  }
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::Cyclic: return "Cyclic(" + std::to_string(q) + "," + std::to_string(p) + ")";
    case Family::ProdDihedral: return "ProdDihedral(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::ProdTetrahedral: return "ProdTetrahedral(" + std::to_string(m) + ")";
    case Family::ProdOctahedral: return "ProdOctahedral(" + std::to_string(m) + ")";
    case Family::ProdIcosahedral: return "ProdIcosahedral(" + std::to_string(m) + ")";
    case Family::Index2Diagonal: return "Index2Diagonal(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::Index3Diagonal: return "Index3Diagonal(" + std::to_string(m) + ")";
  }
  return "?";
}

GroupSpec parse_spec_id(std::string_view id) {
  static const std::regex re(R"(([a-z0-9]+)((?::[a-z]=\d+)*))");
  std::string s(id);
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw Error(ErrorCode::ConfigError, kModule, "malformed spec id '" + s + "'");
  auto fam = parse_family(mt[1].str());
  if (!fam) throw Error(ErrorCode::ConfigError, kModule, "unknown family in spec id '" + s + "'");
  std::int64_t v[4] = {0, 0, 0, 0};  // m n q p
  static const std::regex kv(R"(:([a-z])=(\d+))");
  std::string rest = mt[2].str();
  for (auto it = std::sregex_iterator(rest.begin(), rest.end(), kv); it != std::sregex_iterator(); ++it) {
    char key = (*it)[1].str()[0];
    std::int64_t val = std::stoll((*it)[2].str());
    switch (key) {
      case 'm': v[0] = val; break;
      case 'n': v[1] = val; break;
      case 'q': v[2] = val; break;
      case 'p': v[3] = val; break;
      default: throw Error(ErrorCode::ConfigError, kModule, "unknown parameter in spec id '" + s + "'");
    }
  }
  return GroupSpec::make(*fam, v[0], v[1], v[2], v[3]);
}

std::string CyclicType::to_string() const {
  return "L(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

CyclicType canonical_cyclic(std::int64_t a, std::int64_t beta) {
  if (beta < 1) invalid("cyclic type needs beta >= 1, got " + std::to_string(beta));
  if (beta == 1) return {0, 1};
  if (std::gcd(a, beta) != 1)
    throw Error(ErrorCode::NotCoprime, kModule,
                "gcd(" + std::to_string(a) + ", " + std::to_string(beta) + ") != 1");
  return {mod_floor(a, beta), beta};
}

CyclicType swapped_type(const CyclicType& t) {
  if (t.trivial()) return t;
  return {inverse_mod(t.alpha, t.beta), t.beta};
}

CyclicType conjugate_canonical(const CyclicType& t) {
  CyclicType s = swapped_type(t);
  return s.alpha < t.alpha ? s : t;
}

bool conjugate_equivalent(const CyclicType& a, const CyclicType& b) {
  return conjugate_canonical(a) == conjugate_canonical(b);
}

std::vector<GroupElement> generators_of(const GroupSpec& spec) {
  spec.validate();
  const std::int64_t m = spec.m, n = spec.n;
  const Quaternion j{0, 0, 1, 0};
  auto circle = [](double theta) { return Quaternion::unit_circle(theta); };
  std::vector<GroupElement> gens;
  if (spec.family != Family::Cyclic) gens.push_back(pair(circle(kPi / m), kOne));
  switch (spec.family) {
    case Family::Cyclic: {
      const std::int64_t p = spec.p;
      // 2k = q + 1 mod p
      std::int64_t k;
      if (p % 2 == 1)
        k = mod_floor((spec.q + 1) * inverse_mod(2, p), p);
      else
        k = mod_floor((spec.q + 1) / 2, p);
      gens.push_back(pair(circle(2 * kPi * k / p), circle(2 * kPi * (1 - k) / p)));
      break;
    }
    case Family::ProdDihedral:
      gens.push_back(pair(kOne, circle(kPi / n)));
      gens.push_back(pair(kOne, j));
      break;
    case Family::ProdTetrahedral:
      gens.push_back(pair(kOne, {0.5, 0.5, 0.5, -0.5}));
      gens.push_back(pair(kOne, {0.5, 0.5, 0.5, 0.5}));
      break;
    case Family::ProdOctahedral:
      gens.push_back(pair(kOne, circle(kPi / 4)));
      gens.push_back(pair(kOne, {0.5, 0.5, 0.5, 0.5}));
      break;
    case Family::ProdIcosahedral: {
      const double tau = (1 + std::sqrt(5.0)) / 2;
      gens.push_back(pair(kOne, {0.5, tau / 2, 0, -0.5 / tau}));
      gens.push_back(pair(kOne, {tau / 2, 0.5, 0.5 / tau, 0}));
      break;
    }
    case Family::Index2Diagonal:
      gens.push_back(pair(kOne, circle(kPi / n)));
      gens.push_back(pair(circle(kPi / (2.0 * m)), j));
      break;
    case Family::Index3Diagonal:
      gens.push_back(pair(kOne, {0, 1, 0, 0}));
      gens.push_back(pair(kOne, j));
      gens.push_back(pair(circle(kPi / (3.0 * m)), {-0.5, -0.5, -0.5, 0.5}));
      break;
  }
  return gens;
}

std::vector<GroupElement> closure(const std::vector<GroupElement>& generators, std::size_t limit) {
  std::unordered_map<GroupElement::Key, std::size_t, KeyHash> seen;
  std::vector<GroupElement> elements;
  auto known = [&](const GroupElement& g) {
    for (const auto& k : g.key_variants())
      if (seen.count(k)) return true;
    return false;
  };
  auto add = [&](const GroupElement& g) {
    seen.emplace(g.key(), elements.size());
    elements.push_back(g.canonical());
    if (elements.size() > limit)
      throw Error(ErrorCode::ClosureOverflow, kModule,
                  "closure exceeded " + std::to_string(limit) + " elements (numeric drift?)");
  };
  add(GroupElement::identity());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const GroupElement x = elements[head];
    for (const auto& s : generators) {
      GroupElement y = compose(s, x);
      if (!known(y)) add(y);
    }
  }
  return elements;
}

FiniteGroup enumerate(const GroupSpec& spec) {
  FiniteGroup g;
  g.spec = spec;
  g.generators = generators_of(spec);
  const auto expected = static_cast<std::size_t>(spec.expected_order());
  g.elements = closure(g.generators, 2 * expected);
  if (g.elements.size() != expected)
    throw Error(ErrorCode::ClosureOverflow, kModule,
                spec.to_string() + " closed to " + std::to_string(g.elements.size()) + " elements, expected " +
                    std::to_string(expected));
  return g;
}

bool has_eigenvalue_one(const GroupElement& g, double tol) {
  U2Matrix m = to_matrix(g);
  // det(M - I) = det M - tr M + 1
  return std::abs(m.det() - m.trace() + 1.0) < tol;
}

bool is_fixed_point_free(const std::vector<GroupElement>& elements) {
  const auto id = GroupElement::identity();
  for (const auto& g : elements) {
    if (g == id) continue;
    if (has_eigenvalue_one(g)) return false;
  }
  return true;
}

std::pair<Rational, Rational> eigen_turns(const GroupElement& g, std::int64_t denominator) {
  auto [a, b] = eigen_angles(g);
  auto snap = [&](double angle) {
    double x = angle / (2 * kPi) * static_cast<double>(denominator);
    double r = std::round(x);
    if (std::abs(x - r) > 1e-6)
      throw Error(ErrorCode::SnapFailure, kModule,
                  "eigen-angle is not a multiple of 2pi/" + std::to_string(denominator) + " for " + g.to_string());
    return make_rational(mod_floor(static_cast<std::int64_t>(r), denominator), denominator);
  };
  Rational x = snap(a), y = snap(b);
  if (y < x) std::swap(x, y);
  return {x, y};
}

EigenHistogram eigenvalue_histogram(const FiniteGroup& g) {
  EigenHistogram h;
  const auto n = static_cast<std::int64_t>(g.order());
  for (const auto& e : g.elements) ++h[eigen_turns(e, n)];
  return h;
}

std::int64_t element_order(const GroupElement& g, std::int64_t bound) {
  auto [x, y] = eigen_turns(g, bound);
  std::int64_t a = to_int64(numerator_of(x * bound));
  std::int64_t b = to_int64(numerator_of(y * bound));
  return bound / std::gcd(std::gcd(a, b), bound);
}

std::optional<CyclicType> cyclic_type_of(const FiniteGroup& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (n == 1) return CyclicType{0, 1};
  for (const auto& e : g.elements) {
    auto [x, y] = eigen_turns(e, n);
    std::int64_t a = to_int64(numerator_of(x * n));
    std::int64_t b = to_int64(numerator_of(y * n));
    if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) continue;
    return conjugate_canonical(canonical_cyclic(b * inverse_mod(a, n), n));
  }
  return std::nullopt;
}

}  // namespace u2quot
