#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <optional>

#include "oracles.hpp"
#include "u2quot/error.hpp"
#include "u2quot/group_catalog.hpp"

using namespace u2quot;

namespace {

template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Classification conditions, written from the table.
bool valid_by_table(const GroupSpec& s) {
  using oracle::gcd;
  switch (s.family) {
    case Family::Cyclic: return s.p >= 1 && s.q >= 1 && s.q < s.p && gcd(s.q, s.p) == 1;
    case Family::ProdDihedral: return s.m >= 1 && s.n >= 2 && gcd(s.m, 2 * s.n) == 1;
    case Family::ProdTetrahedral:
    case Family::ProdOctahedral: return s.m >= 1 && gcd(s.m, 6) == 1;
    case Family::ProdIcosahedral: return s.m >= 1 && gcd(s.m, 30) == 1;
    case Family::Index2Diagonal: return s.m >= 1 && gcd(s.m, 2) == 2 && gcd(s.m, s.n) == 1 && s.n >= 2;
    case Family::Index3Diagonal: return s.m >= 1 && gcd(s.m, 6) == 3;
  }
  return false;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("klein").has_value());
}

TEST_CASE("spec ids round trip") {
  for (auto s : {GroupSpec::dihedral(1, 2), GroupSpec::cyclic(3, 5), GroupSpec::icosahedral(7),
                 GroupSpec::index2(2, 3), GroupSpec::index3(3)}) {
    CHECK(parse_spec_id(s.id()) == s);
  }
  CHECK(GroupSpec::dihedral(1, 2).id() == "dihedral:m=1:n=2");
  CHECK(GroupSpec::dihedral(1, 2).file_stem() == "dihedral_m1_n2");
  CHECK(code_of([] { parse_spec_id("dihedral:m=x"); }) == ErrorCode::ConfigError);
}

TEST_CASE("validity matches the classification conditions") {
  for (std::int64_t m = 1; m <= 30; ++m) {
    for (std::int64_t n = 2; n <= 8; ++n) {
      for (auto s : {GroupSpec::dihedral(m, n), GroupSpec::index2(m, n)}) CHECK(s.is_valid() == valid_by_table(s));
    }
    for (auto s : {GroupSpec::tetrahedral(m), GroupSpec::octahedral(m), GroupSpec::icosahedral(m),
                   GroupSpec::index3(m)})
      CHECK(s.is_valid() == valid_by_table(s));
  }
  CHECK(code_of([] { GroupSpec::dihedral(2, 2).validate(); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { GroupSpec::cyclic(2, 4).validate(); }).has_value());
}

TEST_CASE("small group orders match the classification table") {
  struct Row {
    GroupSpec s;
    int family;
  };
  for (auto [s, f] : {Row{GroupSpec::dihedral(1, 2), 1}, Row{GroupSpec::dihedral(3, 2), 1},
                      Row{GroupSpec::dihedral(1, 5), 1}, Row{GroupSpec::tetrahedral(5), 2},
                      Row{GroupSpec::octahedral(1), 3}, Row{GroupSpec::icosahedral(1), 4},
                      Row{GroupSpec::index2(2, 3), 5}, Row{GroupSpec::index2(4, 5), 5}, Row{GroupSpec::index3(3), 6},
                      Row{GroupSpec::index3(9), 6}, Row{GroupSpec::cyclic(3, 7), 0}}) {
    FiniteGroup g = enumerate(s);
    CHECK(static_cast<std::int64_t>(g.order()) == oracle::group_order(f, s.m, s.n, s.p));
    CHECK(g.elements[0] == GroupElement::identity());
    CHECK(is_fixed_point_free(g));
  }
}

TEST_CASE("closure is a group") {
  FiniteGroup g = enumerate(GroupSpec::index2(2, 3));
  for (const auto& a : g.elements) {
    bool has_inverse = false;
    for (const auto& b : g.elements) has_inverse = has_inverse || compose(a, b) == GroupElement::identity();
    CHECK(has_inverse);
  }
  // products stay inside
  for (std::size_t i = 0; i < g.order(); i += 3)
    for (std::size_t j = 0; j < g.order(); j += 5) {
      GroupElement c = compose(g.elements[i], g.elements[j]);
      bool found = false;
      for (const auto& e : g.elements) found = found || e == c;
      CHECK(found);
    }
}

TEST_CASE("closure overflow is reported") {
  auto gens = generators_of(GroupSpec::icosahedral(1));
  CHECK(code_of([&] { closure(gens, 50); }) == ErrorCode::ClosureOverflow);
}

TEST_CASE("fibre rotation comes first") {
  for (auto s : {GroupSpec::dihedral(3, 4), GroupSpec::octahedral(5), GroupSpec::index3(3)}) {
    GroupElement f = generators_of(s).front();
    CHECK(f.left().near(Quaternion::unit_circle(std::numbers::pi / static_cast<double>(s.m))));
    CHECK(f.right().near({1, 0, 0, 0}));
  }
}

TEST_CASE("a complex reflection is detected") {
  // diag(1, e^{2 pi i/3}) has eigenvalue one
  GroupElement r(Quaternion::unit_circle(std::numbers::pi / 3), Quaternion::unit_circle(std::numbers::pi / 3));
  CHECK(has_eigenvalue_one(r));
  CHECK_FALSE(is_fixed_point_free(closure({r}, 10)));
}

TEST_CASE("eigenvalue histogram of the binary tetrahedral group by traces") {
  FiniteGroup g = enumerate(GroupSpec::tetrahedral(1));
  // for SU(2) elements the eigenvalues are e^{+-i theta} with cos theta = x0
  std::map<long, int> by_trace;
  for (const auto& e : g.elements) {
    double x0 = e.left().x0 * e.right().x0;
    by_trace[std::lround(2 * x0 * 1000)]++;
  }
  CHECK(by_trace[2000] == 1);
  CHECK(by_trace[-2000] == 1);
  CHECK(by_trace[0] == 6);
  CHECK(by_trace[1000] == 8);
  CHECK(by_trace[-1000] == 8);

  EigenHistogram h = eigenvalue_histogram(g);
  std::int64_t total = 0;
  for (auto& [k, v] : h) total += v;
  CHECK(total == 24);
  CHECK(h[{make_rational(1, 4), make_rational(3, 4)}] == 6);
  CHECK(h[{make_rational(1, 6), make_rational(5, 6)}] == 8);
  CHECK(h[{make_rational(1, 3), make_rational(2, 3)}] == 8);
}

TEST_CASE("eigen turns snap and refuse irrational angles") {
  GroupElement g(Quaternion::unit_circle(2 * std::numbers::pi / 5), Quaternion{1, 0, 0, 0});
  auto [a, b] = eigen_turns(g, 5);
  CHECK(a == make_rational(1, 5));
  CHECK(b == make_rational(1, 5));
  GroupElement irr(Quaternion::unit_circle(1.0), Quaternion{1, 0, 0, 0});
  CHECK(code_of([&] { eigen_turns(irr, 7); }) == ErrorCode::SnapFailure);
}

TEST_CASE("cyclic type normalization") {
  CHECK(canonical_cyclic(-1, 5) == CyclicType{4, 5});
  CHECK(canonical_cyclic(7, 5) == CyclicType{2, 5});
  CHECK(code_of([] { canonical_cyclic(2, 4); }) == ErrorCode::NotCoprime);
  CHECK(swapped_type({2, 5}) == CyclicType{3, 5});
  CHECK(conjugate_canonical({3, 5}) == CyclicType{2, 5});
  CHECK(conjugate_equivalent({2, 5}, {3, 5}));
  CHECK_FALSE(conjugate_equivalent({1, 5}, {2, 5}));
  CHECK(CyclicType{2, 5}.to_string() == "L(2,5)");
}

TEST_CASE("cyclic groups recover their lens type") {
  for (std::int64_t p = 2; p <= 24; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::gcd(q, p) != 1) continue;
      FiniteGroup g = enumerate(GroupSpec::cyclic(q, p));
      auto t = cyclic_type_of(g);
      REQUIRE(t.has_value());
      CHECK(conjugate_equivalent(*t, canonical_cyclic(q, p)));
    }
}

TEST_CASE("element orders") {
  FiniteGroup g = enumerate(GroupSpec::dihedral(1, 3));
  std::map<std::int64_t, int> orders;
  for (const auto& e : g.elements) orders[element_order(e, 12)]++;
  // D*12: 1 identity, 1 of order 2, 2 of order 3, 2 of order 6, 6 of order 4
  CHECK(orders[1] == 1);
  CHECK(orders[2] == 1);
  CHECK(orders[3] == 2);
  CHECK(orders[6] == 2);
  CHECK(orders[4] == 6);
}

TEST_CASE("polyhedral order and period") {
  CHECK(GroupSpec::dihedral(1, 5).polyhedral_order() == 10);
  CHECK(GroupSpec::tetrahedral(1).polyhedral_order() == 12);
  CHECK(GroupSpec::octahedral(1).polyhedral_order() == 24);
  CHECK(GroupSpec::icosahedral(1).polyhedral_order() == 60);
  CHECK(GroupSpec::index3(3).polyhedral_order() == 12);
  CHECK(GroupSpec::icosahedral(7).period() == 30);
  CHECK(GroupSpec::dihedral(1, 1).is_degenerate());
  CHECK(GroupSpec::dihedral(1, 1).is_cyclic_equivalent());
}
