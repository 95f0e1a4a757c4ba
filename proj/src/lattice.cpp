#include "u2quot/lattice.hpp"

#include <stdexcept>

namespace u2quot {

namespace {

// Sparse symmetric matrix: rows[i][j] == rows[j][i], zeros never stored.
class SparseSym {
public:
  explicit SparseSym(const IntMatrix& a) : rows_(a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[i][j] != 0) rows_[i][j] = Rational(a[i][j]);
  }

  Rational get(std::size_t i, std::size_t j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? Rational(0) : it->second;
  }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    if (v == 0) {
      rows_[i].erase(j);
      rows_[j].erase(i);
    } else {
      rows_[i][j] = v;
      rows_[j][i] = v;
    }
  }
  const std::map<std::size_t, Rational>& row(std::size_t i) const { return rows_[i]; }

  // Congruence by P = I + e_i e_j^T (row i += row j, then column i += column j).
  void add_into(std::size_t i, std::size_t j) {
    Rational aii = get(i, i), aij = get(i, j), ajj = get(j, j);
    std::map<std::size_t, Rational> rj = rows_[j];
    for (const auto& [k, v] : rj) {
      if (k == i || k == j) continue;
      set(i, k, get(i, k) + v);
    }
    set(i, j, aij + ajj);
    set(i, i, aii + 2 * aij + ajj);
  }

  // Eliminate vertex i against its own diagonal entry; returns the pivot.
  Rational pivot(std::size_t i) {
    Rational d = get(i, i);
    std::vector<std::pair<std::size_t, Rational>> nb;
    for (const auto& [k, v] : rows_[i])
      if (k != i) nb.emplace_back(k, v);
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x; y < nb.size(); ++y) {
        auto [k, vk] = nb[x];
        auto [l, vl] = nb[y];
        set(k, l, get(k, l) - vk * vl / d);
      }
    for (const auto& [k, v] : nb) set(i, k, 0);
    rows_[i].clear();
    return d;
  }

private:
  std::vector<std::map<std::size_t, Rational>> rows_;
};

struct Elimination {
  std::vector<Rational> pivots;
  std::vector<std::size_t> remaining;
};

// Eliminates every vertex except `skip` (if any) until the rest of the active
// block vanishes. Vertices are tried in index order.
Elimination eliminate(SparseSym& s, std::size_t n, std::optional<std::size_t> skip) {
  std::vector<bool> active(n, true);
  if (skip) active[*skip] = false;
  Elimination out;
  for (;;) {
    std::optional<std::size_t> chosen;
    for (std::size_t i = 0; i < n && !chosen; ++i)
      if (active[i] && s.get(i, i) != 0) chosen = i;
    if (!chosen) {
      // zero diagonal: combine with an active neighbour
      for (std::size_t i = 0; i < n && !chosen; ++i) {
        if (!active[i]) continue;
        for (const auto& [j, v] : s.row(i)) {
          if (j != i && active[j]) {
            s.add_into(i, j);
            chosen = i;
            break;
          }
        }
      }
    }
    if (!chosen) break;
    out.pivots.push_back(s.pivot(*chosen));
    active[*chosen] = false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) out.remaining.push_back(i);
  return out;
}

void count_signs(const std::vector<Rational>& pivots, Inertia& in) {
  for (const auto& p : pivots) (p > 0 ? in.positive : in.negative)++;
}

}  // namespace

std::string Inertia::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

Inertia Diagonalization::inertia() const {
  Inertia in;
  count_signs(pivots, in);
  in.zero = null_count;
  return in;
}

Rational Diagonalization::determinant() const {
  if (null_count > 0) return 0;
  Rational d = 1;
  for (const auto& p : pivots) d *= p;
  return d;
}

bool is_symmetric(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  }
  return true;
}

Diagonalization diagonalize(const IntMatrix& a) {
  if (!is_symmetric(a)) throw std::invalid_argument("matrix is not square and symmetric");
  SparseSym s(a);
  Elimination e = eliminate(s, a.size(), std::nullopt);
  Diagonalization d;
  d.pivots = std::move(e.pivots);
  d.null_count = static_cast<int>(e.remaining.size());
  return d;
}

std::vector<BigInt> leading_minors(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (m[k][k] == 0) break;  // later minors need pivoting; callers only test definiteness
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& a) {
  if (!is_symmetric(a)) return false;
  auto minors = leading_minors(a);
  if (minors.size() != a.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    bool want_negative = (k % 2 == 0);
    if (want_negative ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

ParametricForm::ParametricForm(const IntMatrix& a, std::size_t special) {
  if (!is_symmetric(a) || special >= a.size()) throw std::invalid_argument("bad parametric matrix");
  IntMatrix b = a;
  b[special][special] = 0;
  SparseSym s(b);
  Elimination e = eliminate(s, a.size(), special);
  pivots_ = std::move(e.pivots);
  null_count_ = static_cast<int>(e.remaining.size());
  for (std::size_t j : e.remaining) {
    Rational v = s.get(special, j);
    coupling_ += v * v;
  }
  coupled_ = coupling_ != 0;
  shift_ = s.get(special, special);
}

Inertia ParametricForm::inertia_at(std::int64_t diagonal) const {
  Inertia in;
  count_signs(pivots_, in);
  if (coupled_) {
    // [[x, v^T], [v, 0]] with v != 0 has one positive and one negative direction
    in.positive++;
    in.negative++;
    in.zero = null_count_ - 1;
    return in;
  }
  Rational x = shift_ + diagonal;
  in.zero = null_count_;
  if (x > 0)
    in.positive++;
  else if (x < 0)
    in.negative++;
  else
    in.zero++;
  return in;
}

Rational ParametricForm::determinant_at(std::int64_t diagonal) const {
  Rational d;
  if (coupled_ && null_count_ == 1)
    d = -coupling_;
  else if (null_count_ > 0)
    return 0;
  else
    d = shift_ + diagonal;
  for (const auto& p : pivots_) d *= p;
  return d;
}

}  // namespace u2quot
