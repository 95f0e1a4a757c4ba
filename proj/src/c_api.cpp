#include "u2quot/u2quot.h"

#include <new>
#include <string>

#include "u2quot/error.hpp"
#include "u2quot/hirzebruch_jung.hpp"
#include "u2quot/report.hpp"
#include "u2quot/sweep.hpp"

struct u2q_spec {
  u2quot::GroupSpec spec;
  std::optional<u2quot::Rational> eta;
};

struct u2q_report {
  u2quot::InvariantReport report;
  std::string json;
  std::string text;
  std::string dot[2];
};

struct u2q_summary {
  u2quot::SweepSummary summary;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

u2q_status status_of(u2quot::ErrorCode c) {
  using u2quot::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidParameters: return U2Q_INVALID_PARAMETERS;
    case ErrorCode::NonCircleLeftFactor: return U2Q_NON_CIRCLE_LEFT_FACTOR;
    case ErrorCode::BothZero: return U2Q_BOTH_ZERO;
    case ErrorCode::ClosureOverflow: return U2Q_CLOSURE_OVERFLOW;
    case ErrorCode::NotCoprime: return U2Q_NOT_COPRIME;
    case ErrorCode::TrivialType: return U2Q_TRIVIAL_TYPE;
    case ErrorCode::OrbitCountMismatch: return U2Q_ORBIT_COUNT_MISMATCH;
    case ErrorCode::TableDisagreement: return U2Q_TABLE_DISAGREEMENT;
    case ErrorCode::CrossCheckFailure: return U2Q_CROSS_CHECK_FAILURE;
    case ErrorCode::MalformedGraph: return U2Q_MALFORMED_GRAPH;
    case ErrorCode::NoCandidate: return U2Q_NO_CANDIDATE;
    case ErrorCode::AmbiguousCandidate: return U2Q_AMBIGUOUS_CANDIDATE;
    case ErrorCode::SnapFailure: return U2Q_SNAP_FAILURE;
    case ErrorCode::IoError: return U2Q_IO_ERROR;
    case ErrorCode::ConfigError: return U2Q_CONFIG_ERROR;
  }
  return U2Q_INTERNAL_ERROR;
}

u2q_status fail(u2q_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
u2q_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const u2quot::Error& e) {
    return fail(status_of(e.code()), e.describe());
  } catch (const std::bad_alloc&) {
    return fail(U2Q_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(U2Q_INTERNAL_ERROR, e.what());
  }
}

u2q_report* wrap(u2quot::InvariantReport r) {
  auto* out = new u2q_report{std::move(r), {}, {}, {}};
  out->json = u2quot::to_json(out->report);
  out->text = u2quot::to_text(out->report);
  return out;
}

}  // namespace

extern "C" {

const char* u2q_status_name(u2q_status s) {
  switch (s) {
    case U2Q_OK: return "Ok";
    case U2Q_NULL_ARGUMENT: return "NullArgument";
    case U2Q_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case U2Q_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (s > U2Q_OK && s <= U2Q_CONFIG_ERROR)
    return u2quot::error_code_name(static_cast<u2quot::ErrorCode>(s - 1)).data();
  return "Unknown";
}

const char* u2q_last_error(void) { return last_error.c_str(); }

u2q_status u2q_parse_family(const char* name, u2q_family* out) {
  if (!name || !out) return fail(U2Q_NULL_ARGUMENT, "null argument");
  auto f = u2quot::parse_family(name);
  if (!f) return fail(U2Q_INVALID_PARAMETERS, std::string("unknown family '") + name + "'");
  *out = static_cast<u2q_family>(*f);
  return U2Q_OK;
}

u2q_status u2q_spec_new(u2q_family family, int64_t m, int64_t n, int64_t q, int64_t p, u2q_spec** out) {
  if (!out) return fail(U2Q_NULL_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (family < U2Q_CYCLIC || family > U2Q_INDEX3) return fail(U2Q_INVALID_PARAMETERS, "unknown family");
  return guarded([&] {
    auto spec = u2quot::GroupSpec::make(static_cast<u2quot::Family>(family), m, n, q, p);
    spec.validate();
    *out = new u2q_spec{spec, std::nullopt};
    return U2Q_OK;
  });
}

u2q_status u2q_spec_set_eta(u2q_spec* spec, int64_t num, int64_t den) {
  if (!spec) return fail(U2Q_NULL_ARGUMENT, "null spec");
  if (den == 0) return fail(U2Q_INVALID_PARAMETERS, "zero denominator");
  spec->eta = u2quot::make_rational(num, den);
  return U2Q_OK;
}

void u2q_spec_free(u2q_spec* spec) { delete spec; }

u2q_status u2q_describe(const u2q_spec* spec, double tolerance, u2q_report** out) {
  if (!spec || !out) return fail(U2Q_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  if (!(tolerance > 0 && tolerance <= 1e-3)) return fail(U2Q_CONFIG_ERROR, "tolerance must lie in (0, 1e-3]");
  return guarded([&] {
    u2quot::DescribeOptions opt;
    opt.tolerance = tolerance;
    opt.eta = spec->eta;
    *out = wrap(u2quot::describe(spec->spec, opt));
    return U2Q_OK;
  });
}

const char* u2q_report_json(const u2q_report* r) { return r ? r->json.c_str() : ""; }
const char* u2q_report_text(const u2q_report* r) { return r ? r->text.c_str() : ""; }

u2q_status u2q_report_dot(const u2q_report* r, u2q_graph_kind kind, const char** out) {
  if (!r || !out) return fail(U2Q_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto k = kind == U2Q_GRAPH_RESOLUTION ? u2quot::GraphKind::Resolution : u2quot::GraphKind::Compactification;
    auto& slot = const_cast<u2q_report*>(r)->dot[kind == U2Q_GRAPH_RESOLUTION ? 0 : 1];
    slot = u2quot::to_dot(r->report, k);
    *out = slot.c_str();
    return U2Q_OK;
  });
}

u2q_status u2q_report_write_dot(const u2q_report* r, u2q_graph_kind kind, const char* path) {
  if (!r || !path) return fail(U2Q_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto k = kind == U2Q_GRAPH_RESOLUTION ? u2quot::GraphKind::Resolution : u2quot::GraphKind::Compactification;
    u2quot::export_dot(r->report, k, path);
    return U2Q_OK;
  });
}

int u2q_report_all_pass(const u2q_report* r) { return r && r->report.all_pass() ? 1 : 0; }

u2q_status u2q_report_parse_json(const char* json, u2q_report** out) {
  if (!json || !out) return fail(U2Q_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = wrap(u2quot::report_from_json(json));
    return U2Q_OK;
  });
}

void u2q_report_free(u2q_report* r) { delete r; }

u2q_status u2q_hj_string(int64_t q, int64_t p, int64_t* entries, size_t cap, size_t* len) {
  if (!len || (!entries && cap > 0)) return fail(U2Q_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto s = u2quot::hj_string(q, p);
    *len = s.length();
    if (s.length() == 0) return fail(U2Q_TRIVIAL_TYPE, "L(" + std::to_string(q) + ",1) is trivial; empty string");
    if (cap < s.length()) return fail(U2Q_BUFFER_TOO_SMALL, "buffer holds fewer entries than the string");
    for (size_t i = 0; i < s.length(); ++i) entries[i] = s.entries[i];
    return U2Q_OK;
  });
}

u2q_status u2q_verify(const char* config_text, u2q_summary** out) {
  if (!config_text || !out) return fail(U2Q_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto config = u2quot::SweepConfig::parse(config_text);
    auto* s = new u2q_summary{u2quot::verify(config), {}, {}};
    s->json = s->summary.to_json();
    s->text = s->summary.to_text();
    *out = s;
    return U2Q_OK;
  });
}

const char* u2q_summary_json(const u2q_summary* s) { return s ? s->json.c_str() : ""; }
const char* u2q_summary_text(const u2q_summary* s) { return s ? s->text.c_str() : ""; }
int u2q_summary_exit_code(const u2q_summary* s) { return s ? s->summary.exit_code() : 1; }
void u2q_summary_free(u2q_summary* s) { delete s; }

}  // extern "C"
