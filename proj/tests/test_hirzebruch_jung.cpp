#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "u2quot/error.hpp"
#include "u2quot/hirzebruch_jung.hpp"

using namespace u2quot;

TEST_CASE("known strings") {
  CHECK(hj_string(1, 5).entries == std::vector<std::int64_t>{5});
  CHECK(hj_string(4, 5).entries == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(hj_string(2, 5).entries == std::vector<std::int64_t>{3, 2});
  CHECK(hj_string(3, 5).entries == std::vector<std::int64_t>{2, 3});
  CHECK(hj_string(3, 7).entries == std::vector<std::int64_t>{3, 2, 2});
  CHECK(hj_string(1, 2).entries == std::vector<std::int64_t>{2});
  CHECK(hj_string(2, 5).to_string() == "[3,2]");
}

TEST_CASE("trivial type has an empty string") {
  CHECK(hj_string(CyclicType{0, 1}).entries.empty());
  CHECK_THROWS_AS(cf_value(std::vector<std::int64_t>{}), Error);
  CHECK_THROWS_AS(cf_value(std::vector<std::int64_t>{3, 1}), Error);
}

TEST_CASE("agrees with the ceiling recursion and a naive continued fraction") {
  for (std::int64_t p = 2; p <= 120; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      auto s = hj_string(q, p).entries;
      CHECK(s == oracle::hj_by_ceiling(q, p));
      CHECK(oracle::continued(s) == oracle::Frac(p, q));
      CHECK(cf_value(s) == make_rational(q, p));
    }
}

TEST_CASE("reversal gives the inverse weight") {
  for (std::int64_t p = 2; p <= 80; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      auto s = hj_string(q, p).entries;
      std::reverse(s.begin(), s.end());
      CHECK(s == hj_string(inverse_mod(q, p), p).entries);
    }
}

TEST_CASE("dual string length") {
  // Riemenschneider: len(dual) = sum(e_i - 2) + 1
  for (std::int64_t p = 2; p <= 80; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      auto s = hj_string(q, p).entries;
      std::int64_t excess = 0;
      for (auto e : s) excess += e - 2;
      CyclicType d = dual_type(canonical_cyclic(q, p));
      CHECK(d == canonical_cyclic(p - q, p));
      CHECK(static_cast<std::int64_t>(hj_string(d).length()) == excess + 1);
    }
}

TEST_CASE("remainders decrease to zero") {
  auto r = hj_remainders(canonical_cyclic(7, 19));
  REQUIRE_FALSE(r.empty());
  CHECK(r.back() == 0);
  CHECK(std::is_sorted(r.rbegin(), r.rend()));
  CHECK(std::adjacent_find(r.begin(), r.end()) == r.end());
  CHECK(r.size() == hj_string(7, 19).length());
}
