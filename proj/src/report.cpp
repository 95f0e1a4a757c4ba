#include "u2quot/report.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "u2quot/error.hpp"

namespace u2quot {

using json = nlohmann::ordered_json;

namespace {

const char* kModule = "cli_report";

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}


class CheckList {
public:
  explicit CheckList(std::vector<Check>& out) : out_(out) {}
  void add(std::string name, bool pass, std::string detail) {
    out_.push_back({std::move(name), pass, std::move(detail)});
  }

private:
  std::vector<Check>& out_;
};

void describe_cyclic(InvariantReport& r, const FiniteGroup& group, CheckList& checks) {
  const GroupSpec& spec = r.spec;
  auto found = cyclic_type_of(group);
  checks.add("cyclic_generator", found.has_value(),
             found ? "generated by one element, type " + found->to_string() : "no element of full order");
  CyclicType type;
  if (spec.family == Family::Cyclic) {
    type = canonical_cyclic(spec.q, spec.p);
    bool same = found && conjugate_equivalent(*found, type);
    checks.add("cyclic_type", same,
               "L(q,p) = " + type.to_string() + (found ? ", from eigenvalues " + found->to_string() : ""));
  } else {
    if (!found)
      throw Error(ErrorCode::CrossCheckFailure, kModule, spec.to_string() + " is flagged cyclic but has no generator");
    type = *found;
  }
  r.cyclic_type = type;
  Resolution res = resolution_chain(type);
  r.resolution = res.graph;
  r.k_gamma = res.k_gamma;
  r.signature = res.signature;
  checks.add("negative_definite", res.negative_definite, "chain " + join(res.graph.weights()));
  checks.add("signature", res.signature == -res.k_gamma,
             "tau = " + std::to_string(res.signature) + ", k = " + std::to_string(res.k_gamma));
  bool round_trip = cf_value(res.strings.front()) == make_rational(type.alpha, type.beta);
  checks.add("hj_roundtrip", round_trip, res.strings.front().to_string());
  r.h1_theta = dim_h1_theta(res.graph);
  r.topology = topology_report(r.order, r.k_gamma, std::nullopt);
}

}  // namespace

bool InvariantReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* InvariantReport::find_check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

InvariantReport describe(const GroupSpec& spec, const DescribeOptions& options) {
  spec.validate();
  InvariantReport r;
  r.spec = spec;
  r.cyclic_equivalent = spec.is_cyclic_equivalent();
  CheckList checks(r.checks);

  FiniteGroup group = enumerate(spec);
  r.order = static_cast<std::int64_t>(group.order());
  checks.add("order", r.order == spec.expected_order(),
             std::to_string(r.order) + " elements, expected " + std::to_string(spec.expected_order()));
  checks.add("fixed_point_free", is_fixed_point_free(group), "no non-identity element has eigenvalue 1");

  if (r.cyclic_equivalent) {
    describe_cyclic(r, group, checks);
    return r;
  }

  const std::int64_t m = spec.m;
  const std::int64_t h = spec.polyhedral_order();
  {
    auto fibre = closure({group.generators.front()}, 4 * static_cast<std::size_t>(m) + 2);
    bool trivial = true;
    for (const auto& g : fibre) trivial = trivial && mobius_of(g).is_identity();
    checks.add("fibre_rotation", static_cast<std::int64_t>(fibre.size()) == 2 * m && trivial,
               "order " + std::to_string(fibre.size()) + (trivial ? ", trivial" : ", nontrivial") +
                   " action on the Hopf base");
  }

  SingularityTriple triple = singularity_triple(group);
  SingularitySection sing;
  sing.types = triple.table;
  sing.computed = triple.computed;
  sing.match_mode = triple.match_mode;
  for (const auto& t : triple.table) {
    HJString s = hj_string(t);
    sing.strings.push_back(s.entries);
    sing.k.push_back(static_cast<std::int64_t>(s.length()));
  }
  std::string types;
  for (const auto& t : triple.table) types += t.to_string() + " ";
  checks.add("singularity_table", true, types + "(" + triple.match_mode + " match)");
  r.singularities = sing;

  const std::int64_t b = b_gamma_integer(spec);
  const Rational b_rat = b_gamma_rational(spec, triple.table);
  r.b_gamma = b;
  r.b_gamma_rational = b_rat;
  checks.add("b_gamma_routes", b_rat == Rational(b) && b >= 2,
             "integer " + std::to_string(b) + ", rational " + to_string(b_rat));

  Resolution res = resolution_graph(triple.table, b);
  r.resolution = res.graph;
  r.k_gamma = res.k_gamma;
  r.signature = res.signature;
  checks.add("negative_definite", res.negative_definite, "center " + std::to_string(-b));
  checks.add("signature", res.signature == -res.k_gamma,
             "tau = " + std::to_string(res.signature) + ", k = " + std::to_string(res.k_gamma));
  const Rational e_res = seifert_euler(res.graph);
  const Rational e_want = make_rational(-2 * m, h);
  checks.add("seifert_calibration", e_res == e_want, "e = " + to_string(e_res) + ", -2m/h = " + to_string(e_want));

  try {
    Compactification c = compactification(spec, res, b);
    CompactificationSection cs;
    cs.b_prime = c.b_prime;
    cs.kappa = c.kappa;
    cs.dual_types = c.dual_types;
    for (const auto& s : c.dual_strings) cs.dual_strings.push_back(s.entries);
    cs.ell = c.ell;
    cs.graph = c.star;
    cs.curves = c.curves;
    cs.curves_inertia = c.curves_inertia;
    cs.linked_inertia = c.linked_inertia;
    cs.star_euler = c.star_euler;
    cs.diagnostics = c.diagnostics;
    r.compactification = cs;

    const int k = static_cast<int>(c.kappa);
    std::int64_t sum = 1;
    for (const auto& s : sing.k) sum += s;
    for (auto l : c.ell) sum += l;
    checks.add("b_prime_unique", true, "b' = " + std::to_string(c.b_prime));
    checks.add("kappa_formula",
               sum == c.kappa && static_cast<std::int64_t>(c.curves.weights.size()) == c.kappa + 1,
               "kappa = " + std::to_string(c.kappa) + ", curves = " + std::to_string(c.curves.weights.size()));
    checks.add("compactification_lattice",
               c.curves_inertia == Inertia{1, k, 0} && c.linked_inertia == Inertia{1, k, 3},
               "curves " + c.curves_inertia.to_string() + ", linked " + c.linked_inertia.to_string());
    checks.add("compactification_seifert", c.star_euler == -e_want, "e = " + to_string(c.star_euler));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCandidate && e.code() != ErrorCode::AmbiguousCandidate) throw;
    checks.add("b_prime_unique", false, e.describe());
  }

  try {
    DeformationReport d = dim_sfk(spec, b, options.tolerance);
    r.deformations = d;
    std::string detail = "brute " + std::to_string(d.brute) + ", closed " + std::to_string(d.closed) +
                         ", 2b-2 " + std::to_string(d.two_b_minus_2);
    if (!d.applicable) detail = "m = 1: closed forms not applicable, brute force 0";
    checks.add("deformation_identity", d.agreement, detail);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SnapFailure) throw;
    checks.add("deformation_identity", false, e.describe());
  }

  r.moduli_dim = moduli_dim(b, r.k_gamma);
  r.h1_theta = dim_h1_theta(res.graph);
  r.topology = topology_report(r.order, r.k_gamma, options.eta);
  if (options.eta) {
    const auto& t = r.topology;
    bool ok = m == 1 ? *t.bound_equality : (*t.bound_holds && !*t.bound_equality);
    checks.add("sfasd_bound", ok,
               "b2- = " + std::to_string(t.b2_minus) + ", bound = " + to_string(*t.sfasd_bound) +
                   (m == 1 ? " (equality expected)" : " (strict inequality expected)"));
  }
  return r;
}

// ---------------------------------------------------------------- JSON

namespace {

json rational_json(const Rational& q) {
  return {{"num", to_int64(numerator_of(q))}, {"den", to_int64(denominator_of(q))}};
}

Rational rational_from(const json& j) {
  return make_rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json type_json(const CyclicType& t) { return {{"alpha", t.alpha}, {"beta", t.beta}}; }
CyclicType type_from(const json& j) { return {j.at("alpha").get<std::int64_t>(), j.at("beta").get<std::int64_t>()}; }

json graph_json(const PlumbingGraph& g) {
  json j;
  j["center"] = g.center ? json(*g.center) : json(nullptr);
  j["arms"] = g.arms;
  j["matrix"] = g.matrix();
  return j;
}

PlumbingGraph graph_from(const json& j) {
  PlumbingGraph g;
  if (!j.at("center").is_null()) g.center = j.at("center").get<std::int64_t>();
  g.arms = j.at("arms").get<std::vector<std::vector<std::int64_t>>>();
  if (g.matrix() != j.at("matrix").get<IntMatrix>())
    throw Error(ErrorCode::ConfigError, kModule, "graph matrix does not match its arms");
  return g;
}

json inertia_json(const Inertia& i) { return {{"positive", i.positive}, {"negative", i.negative}, {"zero", i.zero}}; }
Inertia inertia_from(const json& j) {
  return {j.at("positive").get<int>(), j.at("negative").get<int>(), j.at("zero").get<int>()};
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_rational(const std::optional<Rational>& v) { return v ? rational_json(*v) : json(nullptr); }

}  // namespace

std::string to_json(const InvariantReport& r, int indent) {
  json j;
  j["spec"] = {{"id", r.spec.id()},
               {"family", std::string(family_name(r.spec.family))},
               {"m", r.spec.m},
               {"n", r.spec.n},
               {"q", r.spec.q},
               {"p", r.spec.p},
               {"cyclic_equivalent", r.cyclic_equivalent}};
  j["order"] = r.order;
  j["cyclic_type"] = r.cyclic_type ? type_json(*r.cyclic_type) : json(nullptr);
  if (r.singularities) {
    const auto& s = *r.singularities;
    json types = json::array(), computed = json::array();
    for (const auto& t : s.types) types.push_back(type_json(t));
    for (const auto& t : s.computed) computed.push_back(type_json(t));
    j["singularities"] = {{"types", types},
                          {"computed", computed},
                          {"strings", s.strings},
                          {"k", s.k},
                          {"match_mode", s.match_mode}};
  } else {
    j["singularities"] = nullptr;
  }
  j["b_gamma"] = opt_json(r.b_gamma);
  j["b_gamma_rational"] = opt_rational(r.b_gamma_rational);
  j["k_gamma"] = r.k_gamma;
  j["signature"] = r.signature;
  j["resolution"] = graph_json(r.resolution);
  if (r.compactification) {
    const auto& c = *r.compactification;
    json dual = json::array();
    for (const auto& t : c.dual_types) dual.push_back(type_json(t));
    json edges = json::array();
    for (auto [a, b] : c.curves.edges) edges.push_back({a, b});
    j["compactification"] = {
        {"b_prime", c.b_prime},
        {"kappa", c.kappa},
        {"dual_types", dual},
        {"dual_strings", c.dual_strings},
        {"ell", c.ell},
        {"graph", graph_json(c.graph)},
        {"curves", {{"weights", c.curves.weights}, {"edges", edges}}},
        {"curves_inertia", inertia_json(c.curves_inertia)},
        {"linked_inertia", inertia_json(c.linked_inertia)},
        {"star_euler", rational_json(c.star_euler)},
        {"b_prime_diagnostics",
         {{"window", {c.diagnostics.window_lo, c.diagnostics.window_hi}},
          {"linked", c.diagnostics.linked},
          {"stars", c.diagnostics.stars},
          {"seifert", c.diagnostics.seifert},
          {"all", c.diagnostics.all}}}};
  } else {
    j["compactification"] = nullptr;
  }
  if (r.deformations) {
    const auto& d = *r.deformations;
    j["deformations"] = {{"brute", d.brute},
                         {"closed", d.closed},
                         {"two_b_minus_2", d.two_b_minus_2},
                         {"applicable", d.applicable},
                         {"agreement", d.agreement},
                         {"residual", d.residual},
                         {"subgroup_order", d.subgroup_order}};
  } else {
    j["deformations"] = nullptr;
  }
  j["moduli_dim"] = opt_json(r.moduli_dim);
  j["h1_theta"] = r.h1_theta;
  const auto& t = r.topology;
  j["topology"] = {{"k_gamma", t.k_gamma},
                   {"tau_top", t.tau_top},
                   {"chi_top", t.chi_top},
                   {"b2_minus", t.b2_minus},
                   {"chi_orb", rational_json(t.chi_orb)},
                   {"implied_eta", rational_json(t.implied_eta)},
                   {"eta", opt_rational(t.eta)},
                   {"sfasd_bound", opt_rational(t.sfasd_bound)},
                   {"bound_holds", opt_json(t.bound_holds)},
                   {"bound_equality", opt_json(t.bound_equality)}};
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  return j.dump(indent);
}

InvariantReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    InvariantReport r;
    const auto& s = j.at("spec");
    auto fam = parse_family(s.at("family").get<std::string>());
    if (!fam) throw Error(ErrorCode::ConfigError, kModule, "unknown family in report");
    r.spec = {*fam, s.at("m").get<std::int64_t>(), s.at("n").get<std::int64_t>(), s.at("q").get<std::int64_t>(),
              s.at("p").get<std::int64_t>()};
    r.cyclic_equivalent = s.at("cyclic_equivalent").get<bool>();
    r.order = j.at("order").get<std::int64_t>();
    if (!j.at("cyclic_type").is_null()) r.cyclic_type = type_from(j.at("cyclic_type"));
    if (!j.at("singularities").is_null()) {
      const auto& js = j.at("singularities");
      SingularitySection sec;
      for (std::size_t i = 0; i < 3; ++i) {
        sec.types[i] = type_from(js.at("types").at(i));
        sec.computed[i] = type_from(js.at("computed").at(i));
      }
      sec.strings = js.at("strings").get<std::vector<std::vector<std::int64_t>>>();
      sec.k = js.at("k").get<std::vector<std::int64_t>>();
      sec.match_mode = js.at("match_mode").get<std::string>();
      r.singularities = sec;
    }
    if (!j.at("b_gamma").is_null()) r.b_gamma = j.at("b_gamma").get<std::int64_t>();
    if (!j.at("b_gamma_rational").is_null()) r.b_gamma_rational = rational_from(j.at("b_gamma_rational"));
    r.k_gamma = j.at("k_gamma").get<std::int64_t>();
    r.signature = j.at("signature").get<std::int64_t>();
    r.resolution = graph_from(j.at("resolution"));
    if (!j.at("compactification").is_null()) {
      const auto& jc = j.at("compactification");
      CompactificationSection c;
      c.b_prime = jc.at("b_prime").get<std::int64_t>();
      c.kappa = jc.at("kappa").get<std::int64_t>();
      for (const auto& t : jc.at("dual_types")) c.dual_types.push_back(type_from(t));
      c.dual_strings = jc.at("dual_strings").get<std::vector<std::vector<std::int64_t>>>();
      c.ell = jc.at("ell").get<std::vector<std::int64_t>>();
      c.graph = graph_from(jc.at("graph"));
      c.curves.weights = jc.at("curves").at("weights").get<std::vector<std::int64_t>>();
      for (const auto& e : jc.at("curves").at("edges"))
        c.curves.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      c.curves_inertia = inertia_from(jc.at("curves_inertia"));
      c.linked_inertia = inertia_from(jc.at("linked_inertia"));
      c.star_euler = rational_from(jc.at("star_euler"));
      const auto& jd = jc.at("b_prime_diagnostics");
      c.diagnostics.window_lo = jd.at("window").at(0).get<std::int64_t>();
      c.diagnostics.window_hi = jd.at("window").at(1).get<std::int64_t>();
      c.diagnostics.linked = jd.at("linked").get<std::vector<std::int64_t>>();
      c.diagnostics.stars = jd.at("stars").get<std::vector<std::int64_t>>();
      c.diagnostics.seifert = jd.at("seifert").get<std::vector<std::int64_t>>();
      c.diagnostics.all = jd.at("all").get<std::vector<std::int64_t>>();
      r.compactification = c;
    }
    if (!j.at("deformations").is_null()) {
      const auto& jd = j.at("deformations");
      DeformationReport d;
      d.brute = jd.at("brute").get<std::int64_t>();
      d.closed = jd.at("closed").get<std::int64_t>();
      d.two_b_minus_2 = jd.at("two_b_minus_2").get<std::int64_t>();
      d.applicable = jd.at("applicable").get<bool>();
      d.agreement = jd.at("agreement").get<bool>();
      d.residual = jd.at("residual").get<double>();
      d.subgroup_order = jd.at("subgroup_order").get<std::int64_t>();
      r.deformations = d;
    }
    if (!j.at("moduli_dim").is_null()) r.moduli_dim = j.at("moduli_dim").get<std::int64_t>();
    r.h1_theta = j.at("h1_theta").get<std::int64_t>();
    const auto& jt = j.at("topology");
    auto& t = r.topology;
    t.k_gamma = jt.at("k_gamma").get<std::int64_t>();
    t.tau_top = jt.at("tau_top").get<std::int64_t>();
    t.chi_top = jt.at("chi_top").get<std::int64_t>();
    t.b2_minus = jt.at("b2_minus").get<std::int64_t>();
    t.chi_orb = rational_from(jt.at("chi_orb"));
    t.implied_eta = rational_from(jt.at("implied_eta"));
    if (!jt.at("eta").is_null()) t.eta = rational_from(jt.at("eta"));
    if (!jt.at("sfasd_bound").is_null()) t.sfasd_bound = rational_from(jt.at("sfasd_bound"));
    if (!jt.at("bound_holds").is_null()) t.bound_holds = jt.at("bound_holds").get<bool>();
    if (!jt.at("bound_equality").is_null()) t.bound_equality = jt.at("bound_equality").get<bool>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, kModule, std::string("malformed report JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- text

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << r.spec.to_string() << "\n";
  os << "  order            " << r.order << (r.cyclic_equivalent ? " (cyclic)" : "") << "\n";
  if (r.cyclic_type) os << "  cyclic type      " << r.cyclic_type->to_string() << "\n";
  if (r.singularities) {
    os << "  singularities    ";
    for (std::size_t i = 0; i < 3; ++i)
      os << r.singularities->types[i].to_string() << " [" << join(r.singularities->strings[i]) << "] ";
    os << "(" << r.singularities->match_mode << ")\n";
  }
  if (r.b_gamma) os << "  b_gamma          " << *r.b_gamma << "\n";
  os << "  k_gamma          " << r.k_gamma << "\n";
  os << "  signature        " << r.signature << "\n";
  os << "  resolution       ";
  if (r.resolution.center) os << *r.resolution.center << "; ";
  for (std::size_t i = 0; i < r.resolution.arms.size(); ++i)
    os << (i ? " | " : "") << join(r.resolution.arms[i]);
  os << "\n";
  if (r.compactification) {
    const auto& c = *r.compactification;
    os << "  b'               " << c.b_prime << "\n";
    os << "  kappa            " << c.kappa << "\n";
    os << "  dual strings     ";
    for (std::size_t i = 0; i < c.dual_strings.size(); ++i)
      os << c.dual_types[i].to_string() << " [" << join(c.dual_strings[i]) << "] ";
    os << "\n";
  }
  if (r.deformations) {
    const auto& d = *r.deformations;
    os << "  deformations     brute " << d.brute << ", closed " << d.closed << ", 2b-2 " << d.two_b_minus_2
       << (d.applicable ? "" : " (m = 1)") << "\n";
  }
  if (r.moduli_dim) os << "  moduli dim       " << *r.moduli_dim << "\n";
  os << "  h1(theta)        " << r.h1_theta << "\n";
  os << "  chi_top          " << r.topology.chi_top << ", chi_orb " << to_string(r.topology.chi_orb) << "\n";
  os << "  implied eta      " << to_string(r.topology.implied_eta) << "\n";
  if (r.topology.sfasd_bound)
    os << "  b2- bound        " << to_string(*r.topology.sfasd_bound) << " with eta " << to_string(*r.topology.eta)
       << "\n";
  os << "  checks\n";
  for (const auto& c : r.checks) os << "    " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return os.str();
}

// ---------------------------------------------------------------- DOT

std::string to_dot(const InvariantReport& r, GraphKind kind) {
  if (kind == GraphKind::Resolution) return r.resolution.to_dot("resolution");
  if (!r.compactification)
    throw Error(ErrorCode::InvalidParameters, kModule, r.spec.to_string() + " has no compactification graph");
  return r.compactification->curves.to_dot("compactification");
}

void export_dot(const InvariantReport& r, GraphKind kind, const std::string& path) {
  std::string text = to_dot(r, kind);
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::IoError, kModule, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorCode::IoError, kModule, "write to " + path + " failed");
}

}  // namespace u2quot
