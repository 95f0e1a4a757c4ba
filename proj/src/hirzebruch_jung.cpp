#include "u2quot/hirzebruch_jung.hpp"

#include "u2quot/error.hpp"

namespace u2quot {

namespace {
const char* kModule = "hirzebruch_jung";

template <class Emit>
void run_euclid(const CyclicType& raw, Emit emit) {
  CyclicType t = canonical_cyclic(raw.alpha, raw.beta);
  if (t.trivial()) return;
  std::int64_t p = t.beta, q = t.alpha;
  while (q != 0) {
    std::int64_t e = (p + q - 1) / q;  // ceil(p/q)
    std::int64_t a = e * q - p;
    emit(e, a);
    p = q;
    q = a;
  }
}
}  // namespace

std::string HJString::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
  return s + "]";
}

HJString hj_string(const CyclicType& t) {
  HJString s;
  run_euclid(t, [&](std::int64_t e, std::int64_t) { s.entries.push_back(e); });
  s.source = canonical_cyclic(t.alpha, t.beta);
  return s;
}

std::vector<std::int64_t> hj_remainders(const CyclicType& t) {
  std::vector<std::int64_t> r;
  run_euclid(t, [&](std::int64_t, std::int64_t a) { r.push_back(a); });
  return r;
}

Rational cf_value(const std::vector<std::int64_t>& entries) {
  if (entries.empty()) throw Error(ErrorCode::MalformedGraph, kModule, "continued fraction of an empty string");
  Rational x = 0;  // tail value 1/[e_{i+1}, ...]
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (*it < 2) throw Error(ErrorCode::MalformedGraph, kModule, "string entry below 2: " + std::to_string(*it));
    x = 1 / (Rational(*it) - x);
  }
  return x;
}

CyclicType dual_type(const CyclicType& t) {
  CyclicType c = canonical_cyclic(t.alpha, t.beta);
  if (c.trivial()) return c;
  return canonical_cyclic(c.beta - c.alpha, c.beta);
}

}  // namespace u2quot
