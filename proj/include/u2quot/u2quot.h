#ifndef U2QUOT_H
#define U2QUOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct u2q_spec u2q_spec;
typedef struct u2q_report u2q_report;
typedef struct u2q_summary u2q_summary;

typedef enum u2q_status {
  U2Q_OK = 0,
  U2Q_INVALID_PARAMETERS,
  U2Q_NON_CIRCLE_LEFT_FACTOR,
  U2Q_BOTH_ZERO,
  U2Q_CLOSURE_OVERFLOW,
  U2Q_NOT_COPRIME,
  U2Q_TRIVIAL_TYPE,
  U2Q_ORBIT_COUNT_MISMATCH,
  U2Q_TABLE_DISAGREEMENT,
  U2Q_CROSS_CHECK_FAILURE,
  U2Q_MALFORMED_GRAPH,
  U2Q_NO_CANDIDATE,
  U2Q_AMBIGUOUS_CANDIDATE,
  U2Q_SNAP_FAILURE,
  U2Q_IO_ERROR,
  U2Q_CONFIG_ERROR,
  U2Q_NULL_ARGUMENT,
  U2Q_BUFFER_TOO_SMALL,
  U2Q_INTERNAL_ERROR
} u2q_status;

typedef enum u2q_family {
  U2Q_CYCLIC = 0,
  U2Q_DIHEDRAL,
  U2Q_TETRAHEDRAL,
  U2Q_OCTAHEDRAL,
  U2Q_ICOSAHEDRAL,
  U2Q_INDEX2,
  U2Q_INDEX3
} u2q_family;

typedef enum u2q_graph_kind { U2Q_GRAPH_RESOLUTION = 0, U2Q_GRAPH_COMPACTIFICATION } u2q_graph_kind;

/* Name of a status code, e.g. "InvalidParameters". Static storage. */
const char* u2q_status_name(u2q_status status);
/* Message of the last failure on this thread, "" if none. Valid until the
   next call into the library from the same thread. */
const char* u2q_last_error(void);

/* "cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral",
   "index2", "index3" */
u2q_status u2q_parse_family(const char* name, u2q_family* out);

/* Parameters not used by the family are ignored. Validates the family's
   arithmetic conditions. */
u2q_status u2q_spec_new(u2q_family family, int64_t m, int64_t n, int64_t q, int64_t p, u2q_spec** out);
/* Supplies eta(S^3/G) = num/den for the b2- bound. */
u2q_status u2q_spec_set_eta(u2q_spec* spec, int64_t num, int64_t den);
void u2q_spec_free(u2q_spec* spec);

u2q_status u2q_describe(const u2q_spec* spec, double tolerance, u2q_report** out);
/* Strings are owned by the report. */
const char* u2q_report_json(const u2q_report* report);
const char* u2q_report_text(const u2q_report* report);
u2q_status u2q_report_dot(const u2q_report* report, u2q_graph_kind kind, const char** out);
u2q_status u2q_report_write_dot(const u2q_report* report, u2q_graph_kind kind, const char* path);
/* 1 if every check passed, 0 otherwise (or for NULL). */
int u2q_report_all_pass(const u2q_report* report);
u2q_status u2q_report_parse_json(const char* json, u2q_report** out);
void u2q_report_free(u2q_report* report);

/* Hirzebruch-Jung string of L(q,p). Writes up to `cap` entries and the full
   length to *len. L(q,1) yields length 0 with U2Q_TRIVIAL_TYPE.
   U2Q_BUFFER_TOO_SMALL when cap < *len. */
u2q_status u2q_hj_string(int64_t q, int64_t p, int64_t* entries, size_t cap, size_t* len);

/* Runs the sweep described by flat key = value text. */
u2q_status u2q_verify(const char* config_text, u2q_summary** out);
const char* u2q_summary_json(const u2q_summary* summary);
const char* u2q_summary_text(const u2q_summary* summary);
/* 0 when every identity holds, 1 otherwise. */
int u2q_summary_exit_code(const u2q_summary* summary);
void u2q_summary_free(u2q_summary* summary);

#ifdef __cplusplus
}
#endif

#endif
