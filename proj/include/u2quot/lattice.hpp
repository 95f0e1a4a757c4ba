#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "u2quot/rational.hpp"

namespace u2quot {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int rank() const { return positive + negative; }
  int signature() const { return positive - negative; }
  std::string to_string() const;
  bool operator==(const Inertia&) const = default;
};

/// Result of symmetric congruence elimination over Q.
struct Diagonalization {
  std::vector<Rational> pivots;  // nonzero diagonal entries produced
  int null_count = 0;            // directions left with an all-zero block
  Inertia inertia() const;
  Rational determinant() const;  // 0 when null_count > 0
};

/// Sylvester inertia and determinant of a symmetric integer matrix, exactly.
Diagonalization diagonalize(const IntMatrix& a);
inline Inertia inertia(const IntMatrix& a) { return diagonalize(a).inertia(); }

/// Leading principal minors via fraction-free elimination.
std::vector<BigInt> leading_minors(const IntMatrix& a);
/// All leading principal minors alternate in sign, starting negative.
bool is_negative_definite(const IntMatrix& a);

/// Inertia and determinant of a symmetric matrix as a function of one diagonal
/// entry. Every other vertex is eliminated once up front; evaluation is then
/// constant time.
class ParametricForm {
public:
  // `a[special][special]` is ignored; evaluation supplies it.
  ParametricForm(const IntMatrix& a, std::size_t special);

  Inertia inertia_at(std::int64_t diagonal) const;
  Rational determinant_at(std::int64_t diagonal) const;

private:
  std::vector<Rational> pivots_;
  int null_count_ = 0;
  bool coupled_ = false;  // special vertex pairs with a null direction
  Rational shift_ = 0;    // Schur complement offset of the special vertex
  Rational coupling_ = 0;  // squared length of that pairing
};

bool is_symmetric(const IntMatrix& a);

}  // namespace u2quot
