#include <doctest.h>

#include <algorithm>
#include <optional>

#include "oracles.hpp"
#include "u2quot/error.hpp"
#include "u2quot/resolution.hpp"

using namespace u2quot;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t b) { return ((a % b) + b) % b; }

// Singular triple as listed for each family, alpha reduced into [1, beta).
std::vector<std::pair<std::int64_t, std::int64_t>> listed_triple(const GroupSpec& s) {
  const std::int64_t m = s.m;
  std::vector<std::pair<std::int64_t, std::int64_t>> t;
  switch (s.family) {
    case Family::ProdDihedral:
    case Family::Index2Diagonal: t = {{1, 2}, {1, 2}, {mod(-m, s.n), s.n}}; break;
    case Family::ProdTetrahedral: t = {{1, 2}, {mod(-m, 3), 3}, {mod(-m, 3), 3}}; break;
    case Family::ProdOctahedral: t = {{1, 2}, {mod(-m, 3), 3}, {mod(-m, 4), 4}}; break;
    case Family::ProdIcosahedral: t = {{1, 2}, {mod(-m, 3), 3}, {mod(-m, 5), 5}}; break;
    case Family::Index3Diagonal: t = {{1, 2}, {1, 3}, {2, 3}}; break;
    case Family::Cyclic: break;
  }
  std::sort(t.begin(), t.end());
  return t;
}

std::int64_t h_of(const GroupSpec& s) {
  switch (s.family) {
    case Family::ProdDihedral:
    case Family::Index2Diagonal: return 2 * s.n;
    case Family::ProdTetrahedral:
    case Family::Index3Diagonal: return 12;
    case Family::ProdOctahedral: return 24;
    case Family::ProdIcosahedral: return 60;
    default: return 0;
  }
}

std::vector<GroupSpec> sample_specs() {
  std::vector<GroupSpec> v;
  for (std::int64_t m = 1; m <= 25; ++m) {
    for (std::int64_t n = 2; n <= 7; ++n)
      for (auto s : {GroupSpec::dihedral(m, n), GroupSpec::index2(m, n)})
        if (s.is_valid()) v.push_back(s);
    for (auto s : {GroupSpec::tetrahedral(m), GroupSpec::octahedral(m), GroupSpec::icosahedral(m),
                   GroupSpec::index3(m)})
      if (s.is_valid()) v.push_back(s);
  }
  return v;
}

std::vector<std::int64_t> twos(std::size_t k) { return std::vector<std::int64_t>(k, -2); }

}  // namespace

TEST_CASE("plumbing graph bookkeeping") {
  PlumbingGraph d4{-2, {{-2}, {-2}, {-2}}};
  CHECK(d4.vertex_count() == 4);
  CHECK(d4.weights() == std::vector<std::int64_t>{-2, -2, -2, -2});
  CHECK(d4.edges().size() == 3);
  IntMatrix m = d4.matrix();
  CHECK(m[0][1] == 1);
  CHECK(m[1][2] == 0);
  CHECK(is_symmetric(m));
  PlumbingGraph c = PlumbingGraph::chain({-2, -3});
  CHECK(c.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  std::string dot = c.to_dot("g");
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("label=\"-3\"") != std::string::npos);
}

TEST_CASE("Seifert invariant of small graphs") {
  CHECK(seifert_euler(PlumbingGraph{-2, {{-2}, {-2}, {-2}}}) == make_rational(-1, 2));
  // -b + sum 1/[e...] with the arms of E8
  CHECK(seifert_euler(PlumbingGraph{-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}}}) ==
        make_rational(-2) + make_rational(1, 2) + make_rational(2, 3) + make_rational(4, 5));
  CHECK(seifert_euler(PlumbingGraph::chain({-3})) == -3);
  CHECK_THROWS_AS(seifert_euler(PlumbingGraph{-2, {{}}}), Error);
  CHECK_THROWS_AS(seifert_euler(PlumbingGraph{-2, {{1, 1}}}), Error);
}

TEST_CASE("singularity table matches the listed orbifold groups") {
  for (const auto& s : sample_specs()) {
    if (s.is_cyclic_equivalent()) continue;
    auto table = table_singularities(s);
    auto want = listed_triple(s);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(table[i].alpha == want[i].first);
      CHECK(table[i].beta == want[i].second);
    }
  }
  CHECK_THROWS_AS(table_singularities(GroupSpec::cyclic(1, 5)), Error);
}

TEST_CASE("computed singularities agree with the table") {
  for (const auto& s : sample_specs()) {
    if (s.is_cyclic_equivalent()) continue;
    SingularityTriple t = singularity_triple(s);
    for (std::size_t i = 0; i < 3; ++i) {
      bool found = false;
      for (const auto& c : t.computed) found = found || conjugate_equivalent(c, t.table[i]);
      CHECK(found);
    }
    CHECK((t.match_mode == "plain" || t.match_mode == "conjugate"));
  }
}

TEST_CASE("b_gamma by an independent rational sum") {
  for (const auto& s : sample_specs()) {
    if (s.is_cyclic_equivalent()) continue;
    oracle::Frac sum(2 * s.m, h_of(s));
    for (auto [a, b] : listed_triple(s)) sum = sum + oracle::Frac(a, b);
    REQUIRE(sum.den == 1);
    CHECK(b_gamma_integer(s) == sum.num);
    CHECK(b_gamma_rational(s, table_singularities(s)) == Rational(sum.num));
    CHECK(sum.num >= 2);
  }
}

TEST_CASE("SU(2) quotients resolve to ADE graphs") {
  struct Row {
    GroupSpec s;
    PlumbingGraph g;
  };
  std::vector<Row> rows = {
      {GroupSpec::dihedral(1, 2), {-2, {{-2}, {-2}, {-2}}}},
      {GroupSpec::dihedral(1, 5), {-2, {{-2}, {-2}, twos(4)}}},
      {GroupSpec::tetrahedral(1), {-2, {{-2}, twos(2), twos(2)}}},
      {GroupSpec::octahedral(1), {-2, {{-2}, twos(2), twos(3)}}},
      {GroupSpec::icosahedral(1), {-2, {{-2}, twos(2), twos(4)}}},
  };
  for (const auto& [s, want] : rows) {
    auto t = table_singularities(s);
    Resolution r = resolution_graph(t, b_gamma_integer(s));
    CHECK(r.graph == want);
    CHECK(r.k_gamma == static_cast<std::int64_t>(want.vertex_count()));
    CHECK(r.negative_definite);
    CHECK(r.signature == -r.k_gamma);
  }
}

TEST_CASE("resolution stars are negative definite and Seifert calibrated") {
  for (const auto& s : sample_specs()) {
    if (s.is_cyclic_equivalent()) continue;
    std::int64_t b = b_gamma_integer(s);
    Resolution r = resolution_graph(table_singularities(s), b);
    CHECK(r.graph.center == -b);
    CHECK(r.negative_definite);
    CHECK(oracle::negatives_by_minors(r.graph.matrix()) == static_cast<int>(r.k_gamma));
    CHECK(seifert_euler(r.graph) == make_rational(-2 * s.m, h_of(s)));
  }
}

TEST_CASE("cyclic chains") {
  Resolution r = resolution_chain(canonical_cyclic(2, 5));
  CHECK(r.graph == PlumbingGraph::chain({-3, -2}));
  CHECK(r.k_gamma == 2);
  CHECK(r.negative_definite);
  // the chain closes up to -p/q
  CHECK(seifert_euler(r.graph) == make_rational(-5, 2));
}

TEST_CASE("compactification spot values") {
  struct Row {
    GroupSpec s;
    std::int64_t kappa;
  };
  for (auto [s, kappa] :
       {Row{GroupSpec::dihedral(1, 2), 7}, Row{GroupSpec::dihedral(1, 3), 8}, Row{GroupSpec::index2(2, 3), 8}}) {
    std::int64_t b = b_gamma_integer(s);
    Resolution res = resolution_graph(table_singularities(s), b);
    Compactification c = compactification(s, res, b);
    CHECK(c.kappa == kappa);
    CHECK(c.curves.weights.size() == static_cast<std::size_t>(kappa + 1));
    CHECK(c.curves_inertia == Inertia{1, static_cast<int>(kappa), 0});
    CHECK(c.linked_inertia == Inertia{1, static_cast<int>(kappa), 3});
    CHECK(c.diagnostics.all == std::vector<std::int64_t>{c.b_prime});
  }
}

TEST_CASE("b' is unique and the compactification is coherent") {
  for (const auto& s : sample_specs()) {
    if (s.is_cyclic_equivalent()) continue;
    std::int64_t b = b_gamma_integer(s);
    Resolution res = resolution_graph(table_singularities(s), b);
    Compactification c = compactification(s, res, b);
    CHECK(c.diagnostics.all.size() == 1);
    CHECK(c.diagnostics.window_lo == -10 * b);
    CHECK(c.diagnostics.window_hi == 10 * b);
    // dual arms are chains of the complementary types
    std::int64_t ell = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(c.dual_types[i] == canonical_cyclic(res.types[i].beta - res.types[i].alpha, res.types[i].beta));
      ell += c.ell[i];
    }
    std::int64_t arms = 0;
    for (const auto& s : res.strings) arms += static_cast<std::int64_t>(s.length());
    CHECK(c.kappa == arms + ell + 1);
    CHECK(res.k_gamma == arms + 1);
    CHECK(c.curves_inertia.rank() == c.kappa + 1);
    CHECK(c.curves_inertia.signature() == 1 - c.kappa);
    CHECK(c.star_euler == make_rational(2 * s.m, h_of(s)));
    IntMatrix lm = c.linked.matrix();
    CHECK(is_symmetric(lm));
    CHECK(c.linked.weights.size() == c.curves.weights.size() + 3);
  }
}
