#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "u2quot/quaternion.hpp"
#include "u2quot/rational.hpp"

namespace u2quot {

enum class Family {
  Cyclic,
  ProdDihedral,
  ProdTetrahedral,
  ProdOctahedral,
  ProdIcosahedral,
  Index2Diagonal,
  Index3Diagonal,
};

// CLI names: cyclic, dihedral, tetrahedral, octahedral, icosahedral, index2, index3.
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
inline constexpr Family kAllFamilies[] = {Family::Cyclic,          Family::ProdDihedral,
                                          Family::ProdTetrahedral, Family::ProdOctahedral,
                                          Family::ProdIcosahedral, Family::Index2Diagonal,
                                          Family::Index3Diagonal};

/// One of the seven families of finite fixed-point-free subgroups of U(2).
/// Cyclic uses (q, p); the dihedral and index-2 families use (m, n); the
/// rest use m only. Unused parameters are zero.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::int64_t m = 0, n = 0, q = 0, p = 0;

  static GroupSpec cyclic(std::int64_t q, std::int64_t p) { return {Family::Cyclic, 0, 0, q, p}; }
  static GroupSpec dihedral(std::int64_t m, std::int64_t n) { return {Family::ProdDihedral, m, n, 0, 0}; }
  static GroupSpec tetrahedral(std::int64_t m) { return {Family::ProdTetrahedral, m, 0, 0, 0}; }
  static GroupSpec octahedral(std::int64_t m) { return {Family::ProdOctahedral, m, 0, 0, 0}; }
  static GroupSpec icosahedral(std::int64_t m) { return {Family::ProdIcosahedral, m, 0, 0, 0}; }
  static GroupSpec index2(std::int64_t m, std::int64_t n) { return {Family::Index2Diagonal, m, n, 0, 0}; }
  static GroupSpec index3(std::int64_t m) { return {Family::Index3Diagonal, m, 0, 0, 0}; }

  // Builds a spec from a family and whichever parameters it uses; the others
  // are ignored.
  static GroupSpec make(Family f, std::int64_t m, std::int64_t n, std::int64_t q, std::int64_t p);

  // Throws Error(InvalidParameters) when the family's arithmetic conditions fail.
  void validate() const;
  bool is_valid() const;

  std::int64_t expected_order() const;
  // n = 1 members of the dihedral and index-2 families are cyclic groups.
  bool is_degenerate() const;
  bool is_cyclic_equivalent() const { return family == Family::Cyclic || is_degenerate(); }
  // Order h of the image in PGL(2, C); only for non-cyclic families.
  std::int64_t polyhedral_order() const;
  // |Gamma| / 4m: n, 6, 12, 30, n, 6.
  std::int64_t period() const;

  // "dihedral:m=1:n=2", "cyclic:q=3:p=5"
  std::string id() const;
  // "dihedral_m1_n2"
  std::string file_stem() const;
  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;
};

// Inverse of GroupSpec::id(). Throws Error(ConfigError).
GroupSpec parse_spec_id(std::string_view id);

/// Lens type L(alpha, beta).
struct CyclicType {
  std::int64_t alpha = 0;
  std::int64_t beta = 1;

  bool trivial() const { return beta == 1; }
  std::string to_string() const;
  bool operator==(const CyclicType&) const = default;
  auto operator<=>(const CyclicType&) const = default;
};

/// (a mod beta, beta). Throws Error(NotCoprime) unless gcd(a, beta) = 1 or
/// beta = 1; Error(InvalidParameters) for beta < 1.
CyclicType canonical_cyclic(std::int64_t a, std::int64_t beta);
/// L(q^{-1} mod p, p): the same singularity with its coordinates swapped.
CyclicType swapped_type(const CyclicType& t);
/// min(q, q^{-1}) representative used for conjugate-equivalence comparison.
CyclicType conjugate_canonical(const CyclicType& t);
bool conjugate_equivalent(const CyclicType& a, const CyclicType& b);

struct FiniteGroup {
  GroupSpec spec;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;  // elements[0] is the identity

  std::size_t order() const { return elements.size(); }
};

/// Generator list of a valid spec; the fibre rotation [e^{pi i/m}, 1] comes
/// first for every non-cyclic family.
std::vector<GroupElement> generators_of(const GroupSpec& spec);

/// Breadth-first closure of a generator set. Throws Error(ClosureOverflow) once
/// more than `limit` elements appear.
std::vector<GroupElement> closure(const std::vector<GroupElement>& generators, std::size_t limit);

/// Closure of generators_of(spec), checked against expected_order().
FiniteGroup enumerate(const GroupSpec& spec);

bool has_eigenvalue_one(const GroupElement& g, double tol = 1e-7);
bool is_fixed_point_free(const std::vector<GroupElement>& elements);
inline bool is_fixed_point_free(const FiniteGroup& g) { return is_fixed_point_free(g.elements); }

/// Eigenvalue arguments as fractions of a full turn, snapped to denominator
/// `denominator`. Throws Error(SnapFailure) when the residual exceeds 1e-6.
std::pair<Rational, Rational> eigen_turns(const GroupElement& g, std::int64_t denominator);

using EigenHistogram = std::map<std::pair<Rational, Rational>, std::int64_t>;
/// Count of elements per unordered eigenvalue pair, angles in turns.
EigenHistogram eigenvalue_histogram(const FiniteGroup& g);

/// Order of an element within a group whose matrix exponent divides `bound`.
std::int64_t element_order(const GroupElement& g, std::int64_t bound);

/// Lens type of a cyclic group, in the conjugate-canonical form. Empty when no
/// element generates the whole group.
std::optional<CyclicType> cyclic_type_of(const FiniteGroup& g);

}  // namespace u2quot
