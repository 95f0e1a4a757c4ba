#pragma once
// Independent reference computations shared by the test programs.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Orders from the classification table.
inline std::int64_t group_order(int family, std::int64_t m, std::int64_t n, std::int64_t p) {
  switch (family) {
    case 0: return p;
    case 1: return 4 * m * n;
    case 2: return 24 * m;
    case 3: return 48 * m;
    case 4: return 120 * m;
    case 5: return 4 * m * n;
    case 6: return 24 * m;
  }
  return -1;
}

// Reduced fraction num/den.
struct Frac {
  std::int64_t num = 0, den = 1;
  Frac(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    std::int64_t g = gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  Frac inv() const { return {den, num}; }
  bool operator==(const Frac&) const = default;
};

// Naive recursive continued fraction [e1, ..., ek] = e1 - 1/[e2, ...].
inline Frac continued(const std::vector<std::int64_t>& e, std::size_t from = 0) {
  if (from + 1 == e.size()) return {e[from], 1};
  return Frac(e[from]) - continued(e, from + 1).inv();
}

// Hirzebruch-Jung string by repeated ceilings of p/q.
inline std::vector<std::int64_t> hj_by_ceiling(std::int64_t q, std::int64_t p) {
  std::vector<std::int64_t> out;
  std::int64_t num = p, den = q;
  while (den != 0) {
    std::int64_t c = (num + den - 1) / den;
    out.push_back(c);
    std::int64_t r = c * den - num;
    num = den;
    den = r;
  }
  return out;
}

// Determinant by cofactor expansion, small matrices only.
inline std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    std::int64_t s = (c % 2 ? -1 : 1) * a[0][c] * cofactor_det(minor);
    d += s;
  }
  return d;
}

// Number of negative eigenvalues by sign changes in 1, D1, ..., Dn when all
// leading minors are nonzero. Returns -1 otherwise.
inline int negatives_by_minors(const std::vector<std::vector<std::int64_t>>& a) {
  std::int64_t prev = 1;
  int changes = 0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<std::vector<std::int64_t>> lead(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    std::int64_t d = cofactor_det(lead);
    if (d == 0) return -1;
    if ((d < 0) != (prev < 0)) ++changes;
    prev = d;
  }
  return changes;
}

inline double sawtooth(double x) {
  double f = x - std::floor(x);
  if (f < 1e-12 || f > 1 - 1e-12) return 0;
  return f - 0.5;
}

// Signature-operator eta of a spherical space form from the eigenvalue angles
// of its non-identity elements.
inline double eta_from_angles(const std::vector<std::pair<double, double>>& angles, std::int64_t order) {
  double s = 0;
  for (auto [a, b] : angles) s += 1 / (std::tan(a / 2) * std::tan(b / 2));
  return s / static_cast<double>(order);
}

}  // namespace oracle
