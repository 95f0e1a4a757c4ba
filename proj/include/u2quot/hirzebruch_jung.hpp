#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "u2quot/group_catalog.hpp"
#include "u2quot/rational.hpp"

namespace u2quot {

/// Hirzebruch-Jung string of a cyclic singularity: p/q = [e_1, ..., e_k] with
/// [a, ...] = a - 1/[...].
struct HJString {
  std::vector<std::int64_t> entries;
  CyclicType source;

  std::size_t length() const { return entries.size(); }
  std::string to_string() const;
  bool operator==(const HJString&) const = default;
};

/// Modified Euclidean algorithm p = e_1 q - a_1, q = e_2 a_1 - a_2, ...
/// Normalizes the type first. The trivial type L(0,1) gives an empty string.
HJString hj_string(const CyclicType& t);
inline HJString hj_string(std::int64_t q, std::int64_t p) { return hj_string(canonical_cyclic(q, p)); }

/// Remainders a_1, a_2, ... produced alongside hj_string; strictly decreasing
/// and ending in 0.
std::vector<std::int64_t> hj_remainders(const CyclicType& t);

/// q/p = 1/(e_1 - 1/(e_2 - ...)). Throws Error(MalformedGraph) for an empty
/// string or an entry below 2.
Rational cf_value(const std::vector<std::int64_t>& entries);
inline Rational cf_value(const HJString& s) { return cf_value(s.entries); }

/// (beta - alpha, beta), normalized.
CyclicType dual_type(const CyclicType& t);

}  // namespace u2quot
