#include "u2quot/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "u2quot/error.hpp"

namespace u2quot {

namespace {

const char* kModule = "resolution_geometry";
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kPointTolerance = 1e-7;
constexpr double kSnapTolerance = 1e-6;

std::string dot_lines(const std::string& name, const std::vector<std::int64_t>& w,
                      const std::vector<std::pair<std::size_t, std::size_t>>& e) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < w.size(); ++i) os << "  v" << i << " [label=\"" << w[i] << "\"];\n";
  for (auto [a, b] : e) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

IntMatrix matrix_of(const std::vector<std::int64_t>& w, const std::vector<std::pair<std::size_t, std::size_t>>& e) {
  IntMatrix m(w.size(), std::vector<std::int64_t>(w.size(), 0));
  for (std::size_t i = 0; i < w.size(); ++i) m[i][i] = w[i];
  for (auto [a, b] : e) {
    m[a][b] += 1;
    m[b][a] += 1;
  }
  return m;
}

std::int64_t snap(double x, const std::string& what) {
  double r = std::round(x);
  if (std::abs(x - r) > kSnapTolerance)
    throw Error(ErrorCode::SnapFailure, kModule, what + " is not an integer (" + std::to_string(x) + ")");
  return static_cast<std::int64_t>(r);
}

// Keys of a right factor up to sign: [q, q] is canonicalized by negating both.
std::vector<GroupElement::Key> sign_free_keys(const Quaternion& q) { return GroupElement(q, q).key_variants(); }

std::array<CyclicType, 3> sorted3(std::vector<CyclicType> v) {
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

Rational arm_fraction(const std::vector<std::int64_t>& arm) {
  // [a_1, ..., a_k] evaluated from the far end
  if (arm.empty()) throw Error(ErrorCode::MalformedGraph, kModule, "empty arm");
  Rational x = arm.back();
  for (std::size_t i = arm.size() - 1; i-- > 0;) {
    if (x == 0) throw Error(ErrorCode::MalformedGraph, kModule, "vanishing partial continued fraction");
    x = Rational(arm[i]) - 1 / x;
  }
  if (x == 0) throw Error(ErrorCode::MalformedGraph, kModule, "vanishing partial continued fraction");
  return x;
}

}  // namespace

std::size_t PlumbingGraph::vertex_count() const {
  std::size_t n = center ? 1 : 0;
  for (const auto& a : arms) n += a.size();
  return n;
}

std::vector<std::int64_t> PlumbingGraph::weights() const {
  std::vector<std::int64_t> w;
  if (center) w.push_back(*center);
  for (const auto& a : arms) w.insert(w.end(), a.begin(), a.end());
  return w;
}

std::vector<std::pair<std::size_t, std::size_t>> PlumbingGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t next = center ? 1 : 0;
  for (const auto& a : arms) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::size_t v = next + i;
      if (i > 0)
        e.emplace_back(v - 1, v);
      else if (center)
        e.emplace_back(0, v);
    }
    next += a.size();
  }
  return e;
}

IntMatrix PlumbingGraph::matrix() const { return matrix_of(weights(), edges()); }

std::string PlumbingGraph::to_dot(const std::string& name) const { return dot_lines(name, weights(), edges()); }

IntMatrix CurveConfiguration::matrix() const { return matrix_of(weights, edges); }

std::string CurveConfiguration::to_dot(const std::string& name) const { return dot_lines(name, weights, edges); }

Rational seifert_euler(const PlumbingGraph& g) {
  if (g.center) {
    Rational e = *g.center;
    for (const auto& arm : g.arms) e -= 1 / arm_fraction(arm);
    return e;
  }
  if (g.arms.size() != 1 || g.arms[0].empty())
    throw Error(ErrorCode::MalformedGraph, kModule, "graph without a center must be a single nonempty chain");
  const auto& c = g.arms[0];
  Rational e = c[0];
  if (c.size() > 1) e -= 1 / arm_fraction({c.begin() + 1, c.end()});
  return e;
}

std::array<CyclicType, 3> table_singularities(const GroupSpec& spec) {
  spec.validate();
  if (spec.is_cyclic_equivalent())
    throw Error(ErrorCode::InvalidParameters, kModule, spec.to_string() + " is cyclic; no singular triple");
  const std::int64_t m = spec.m;
  switch (spec.family) {
    case Family::ProdDihedral:
    case Family::Index2Diagonal:
      return sorted3({canonical_cyclic(1, 2), canonical_cyclic(1, 2), canonical_cyclic(-m, spec.n)});
    case Family::ProdTetrahedral:
      return sorted3({canonical_cyclic(1, 2), canonical_cyclic(-m, 3), canonical_cyclic(-m, 3)});
    case Family::ProdOctahedral:
      return sorted3({canonical_cyclic(1, 2), canonical_cyclic(-m, 3), canonical_cyclic(-m, 4)});
    case Family::ProdIcosahedral:
      return sorted3({canonical_cyclic(1, 2), canonical_cyclic(-m, 3), canonical_cyclic(-m, 5)});
    case Family::Index3Diagonal:
      return sorted3({canonical_cyclic(1, 2), canonical_cyclic(1, 3), canonical_cyclic(2, 3)});
    case Family::Cyclic: break;
  }
  throw Error(ErrorCode::InvalidParameters, kModule, "no table entry");
}

std::array<CyclicType, 3> computed_singularities(const FiniteGroup& group) {
  const GroupSpec& spec = group.spec;
  const std::int64_t m = spec.m;
  const std::int64_t h = spec.polyhedral_order();

  // Effective group: one representative per induced Mobius map.
  std::unordered_map<GroupElement::Key, std::size_t, KeyHash> seen;
  std::vector<GroupElement> reps;
  for (const auto& g : group.elements) {
    auto keys = sign_free_keys(g.right());
    bool known = false;
    for (const auto& k : keys) known = known || seen.count(k);
    if (known) continue;
    seen.emplace(keys.front(), reps.size());
    reps.push_back(g);
  }
  if (static_cast<std::int64_t>(reps.size()) != h)
    throw Error(ErrorCode::CrossCheckFailure, kModule,
                spec.to_string() + ": image in PGL(2,C) has " + std::to_string(reps.size()) + " elements, expected " +
                    std::to_string(h));
  std::vector<MobiusMap> maps;
  for (const auto& g : reps) maps.push_back(mobius_of(g));

  std::vector<RiemannPoint> points;
  auto find_point = [&](const RiemannPoint& p) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].near(p, kPointTolerance)) return i;
    return std::nullopt;
  };
  for (const auto& mp : maps)
    for (const auto& p : mp.fixed_points())
      if (!find_point(p)) points.push_back(p);

  std::vector<int> orbit_of(points.size(), -1);
  std::vector<std::size_t> orbit_reps;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    int id = static_cast<int>(orbit_reps.size());
    orbit_reps.push_back(i);
    for (const auto& mp : maps) {
      auto j = find_point(mp(points[i]));
      if (!j)
        throw Error(ErrorCode::OrbitCountMismatch, kModule,
                    spec.to_string() + ": fixed-point set is not invariant under the group");
      orbit_of[*j] = id;
    }
  }
  if (orbit_reps.size() != 3)
    throw Error(ErrorCode::OrbitCountMismatch, kModule,
                spec.to_string() + ": found " + std::to_string(orbit_reps.size()) + " singular orbits, expected 3");

  std::vector<CyclicType> types;
  for (std::size_t rep : orbit_reps) {
    const RiemannPoint& pt = points[rep];
    std::vector<std::size_t> stab;
    for (std::size_t c = 0; c < maps.size(); ++c)
      if (maps[c](pt).near(pt, kPointTolerance)) stab.push_back(c);
    const auto order = static_cast<std::int64_t>(stab.size());

    // eigenline of the fixed point
    Complex v1, v2;
    if (pt.is_infinity()) {
      v1 = 1.0;
      v2 = 0.0;
    } else if (std::abs(pt.value()) > 1) {
      v1 = 1.0;
      v2 = 1.0 / pt.value();
    } else {
      v1 = pt.value();
      v2 = 1.0;
    }
    double vn = std::norm(v1) + std::norm(v2);

    std::optional<CyclicType> found;
    for (std::size_t c : stab) {
      U2Matrix mat = to_matrix(reps[c]);
      auto img = mat.apply(v1, v2);
      Complex mu2 = (img[0] * std::conj(v1) + img[1] * std::conj(v2)) / vn;
      Complex mu1 = mat.det() / mu2;
      std::int64_t t =
          mod_floor(snap(std::arg(mu1 / mu2) / kTwoPi * static_cast<double>(order), "tangent rotation"), order);
      if (std::gcd(t, order) != 1) continue;
      std::int64_t u = mod_floor(
          snap(std::arg(mu2) * static_cast<double>(2 * m) / kTwoPi * static_cast<double>(order), "normal rotation"),
          order);
      found = canonical_cyclic(u * inverse_mod(t, order), order);
      break;
    }
    if (!found)
      throw Error(ErrorCode::CrossCheckFailure, kModule,
                  spec.to_string() + ": stabilizer of " + pt.to_string() + " has no generator");
    types.push_back(*found);
  }
  return sorted3(types);
}

SingularityTriple singularity_triple(const FiniteGroup& group) {
  SingularityTriple s;
  s.table = table_singularities(group.spec);
  s.computed = computed_singularities(group);
  if (s.table == s.computed) {
    s.match_mode = "plain";
    return s;
  }
  std::vector<CyclicType> a, b;
  for (const auto& t : s.table) a.push_back(conjugate_canonical(t));
  for (const auto& t : s.computed) b.push_back(conjugate_canonical(t));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    std::string msg = group.spec.to_string() + ": table {";
    for (const auto& t : s.table) msg += t.to_string() + " ";
    msg += "} vs computed {";
    for (const auto& t : s.computed) msg += t.to_string() + " ";
    throw Error(ErrorCode::TableDisagreement, kModule, msg + "}");
  }
  s.match_mode = "conjugate";
  return s;
}

SingularityTriple singularity_triple(const GroupSpec& spec) { return singularity_triple(enumerate(spec)); }

std::int64_t b_gamma_integer(const GroupSpec& spec) {
  const std::int64_t m = spec.m;
  const std::int64_t order = spec.expected_order();
  const std::int64_t period = order / (4 * m);
  // (4m/|G|) * (m - m mod period), exact since period divides the bracket
  return 2 + (4 * m * (m - m % period)) / order;
}

Rational b_gamma_rational(const GroupSpec& spec, const std::array<CyclicType, 3>& types) {
  Rational s = make_rational(2 * spec.m, spec.polyhedral_order());
  for (const auto& t : types) s += make_rational(t.alpha, t.beta);
  return s;
}

BGamma b_gamma(const GroupSpec& spec, const std::array<CyclicType, 3>& types) {
  BGamma b{b_gamma_integer(spec), b_gamma_rational(spec, types)};
  if (b.rational != Rational(b.value))
    throw Error(ErrorCode::CrossCheckFailure, kModule,
                spec.to_string() + ": integer route gives " + std::to_string(b.value) + ", rational route " +
                    to_string(b.rational));
  if (b.value < 2) throw Error(ErrorCode::CrossCheckFailure, kModule, spec.to_string() + ": b < 2");
  return b;
}

namespace {

void finish_resolution(Resolution& r) {
  r.k_gamma = static_cast<std::int64_t>(r.graph.vertex_count());
  IntMatrix mat = r.graph.matrix();
  r.signature = inertia(mat).signature();
  r.negative_definite = is_negative_definite(mat);
}

std::vector<std::int64_t> negated(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out;
  for (auto x : v) out.push_back(-x);
  return out;
}

}  // namespace

Resolution resolution_graph(const std::array<CyclicType, 3>& types, std::int64_t b) {
  Resolution r;
  r.graph.center = -b;
  for (const auto& t : types) {
    HJString s = hj_string(t);
    r.types.push_back(s.source);
    r.graph.arms.push_back(negated(s.entries));
    r.strings.push_back(std::move(s));
  }
  finish_resolution(r);
  return r;
}

Resolution resolution_chain(const CyclicType& type) {
  Resolution r;
  HJString s = hj_string(type);
  r.types.push_back(s.source);
  r.graph = PlumbingGraph::chain(negated(s.entries));
  r.strings.push_back(std::move(s));
  finish_resolution(r);
  return r;
}

namespace {

struct Configurations {
  CurveConfiguration curves;
  CurveConfiguration linked;
};

// Compactification star (center at index 0) followed by the resolution star;
// the linked variant adds one -1 curve per arm joining the two arm tips.
Configurations build_configurations(const PlumbingGraph& comp, const PlumbingGraph& res) {
  Configurations c;
  auto append = [&](const PlumbingGraph& g) {
    std::size_t base = c.curves.weights.size();
    for (auto w : g.weights()) c.curves.weights.push_back(w);
    for (auto [a, b] : g.edges()) c.curves.edges.emplace_back(base + a, base + b);
    std::vector<std::size_t> tips;
    std::size_t next = base + (g.center ? 1 : 0);
    for (const auto& arm : g.arms) {
      next += arm.size();
      tips.push_back(next - 1);
    }
    return tips;
  };
  auto comp_tips = append(comp);
  auto res_tips = append(res);
  c.linked = c.curves;
  for (std::size_t i = 0; i < comp_tips.size() && i < res_tips.size(); ++i) {
    std::size_t f = c.linked.weights.size();
    c.linked.weights.push_back(-1);
    c.linked.edges.emplace_back(res_tips[i], f);
    c.linked.edges.emplace_back(f, comp_tips[i]);
  }
  return c;
}

struct DualData {
  std::vector<CyclicType> types;
  std::vector<HJString> strings;
  std::vector<std::int64_t> ell;
  PlumbingGraph star;  // center 0
};

DualData dual_data(const Resolution& res) {
  if (!res.graph.center || res.types.size() != 3)
    throw Error(ErrorCode::MalformedGraph, kModule, "compactification needs a three-armed resolution star");
  DualData d;
  d.star.center = 0;
  for (const auto& t : res.types) {
    CyclicType dt = dual_type(t);
    HJString s = hj_string(dt);
    d.types.push_back(dt);
    d.ell.push_back(static_cast<std::int64_t>(s.length()));
    d.star.arms.push_back(negated(s.entries));
    d.strings.push_back(std::move(s));
  }
  return d;
}

}  // namespace

BPrimeDiagnostics solve_b_prime(const GroupSpec& spec, const Resolution& res, std::int64_t b) {
  DualData d = dual_data(res);
  std::int64_t kappa = res.k_gamma + std::accumulate(d.ell.begin(), d.ell.end(), std::int64_t{0});
  Configurations conf = build_configurations(d.star, res.graph);
  ParametricForm linked(conf.linked.matrix(), 0);
  ParametricForm curves(conf.curves.matrix(), 0);
  const Rational euler_offset = seifert_euler(d.star);
  const Rational target = make_rational(2 * spec.m, spec.polyhedral_order());
  const int k = static_cast<int>(kappa);
  const Inertia want_linked{1, k, 3};
  const Inertia want_curves{1, k, 0};

  BPrimeDiagnostics diag;
  diag.window_lo = -10 * b;
  diag.window_hi = 10 * b;
  for (std::int64_t x = diag.window_lo; x <= diag.window_hi; ++x) {
    bool l = linked.inertia_at(x) == want_linked;
    bool s = false;
    if (curves.inertia_at(x) == want_curves) {
      Rational det = curves.determinant_at(x);
      s = is_integer(det) && is_perfect_square(boost::multiprecision::abs(numerator_of(det)));
    }
    bool e = euler_offset + x == target;
    if (l) diag.linked.push_back(x);
    if (s) diag.stars.push_back(x);
    if (e) diag.seifert.push_back(x);
    if (l && s && e) diag.all.push_back(x);
  }
  return diag;
}

Compactification compactification(const GroupSpec& spec, const Resolution& res, std::int64_t b) {
  Compactification c;
  DualData d = dual_data(res);
  c.dual_types = d.types;
  c.dual_strings = d.strings;
  c.ell = d.ell;
  c.kappa = res.k_gamma + std::accumulate(c.ell.begin(), c.ell.end(), std::int64_t{0});
  c.diagnostics = solve_b_prime(spec, res, b);

  auto list = [](const std::vector<std::int64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  const auto& dg = c.diagnostics;
  std::string detail = spec.to_string() + ": linked " + list(dg.linked) + ", stars " + list(dg.stars) +
                       ", seifert " + list(dg.seifert);
  if (dg.all.empty()) throw Error(ErrorCode::NoCandidate, kModule, detail);
  if (dg.all.size() > 1) throw Error(ErrorCode::AmbiguousCandidate, kModule, detail);

  c.b_prime = dg.all.front();
  c.star = d.star;
  c.star.center = c.b_prime;
  Configurations conf = build_configurations(c.star, res.graph);
  c.curves = conf.curves;
  c.linked = conf.linked;
  c.curves_inertia = inertia(c.curves.matrix());
  c.linked_inertia = inertia(c.linked.matrix());
  c.star_euler = seifert_euler(c.star);
  return c;
}

}  // namespace u2quot
