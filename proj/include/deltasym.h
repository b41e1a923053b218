/* C interface to the deltasym core: expression parsing/printing and the
 * command runner. All functions are thread-safe; values, reports, and strings
 * returned through out-parameters are owned by the caller and released with
 * the matching *_free function. On failure the out-parameter is left null and
 * dsym_last_error() describes the problem for the calling thread. */
#ifndef DELTASYM_H
#define DELTASYM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dsym_value dsym_value;   /* parsed expression value */
typedef struct dsym_report dsym_report; /* finished command report */

typedef enum dsym_status {
    DSYM_OK = 0,
    DSYM_ERR_PARSE = 1,        /* malformed text, bad flags, mixed spaces */
    DSYM_ERR_DOMAIN = 2,       /* semantic precondition violated */
    DSYM_ERR_CHECK_FAILED = 3, /* command ran but some check failed */
    DSYM_ERR_INVALID_ARG = 4,  /* null pointer or out-of-range argument */
    DSYM_ERR_INTERNAL = 5      /* internal consistency check failed */
} dsym_status;

/* Library version string, e.g. "1.0.0". Never fails; statically allocated. */
const char* dsym_version(void);

/* Message of the last failing call on this thread; empty string if none. The
 * pointer stays valid until the next failing call on the same thread. */
const char* dsym_last_error(void);

/* Parses an expression over var_dim variables (1..10) into a value. */
dsym_status dsym_parse(const char* text, int var_dim, dsym_value** out);

/* Canonical text form of a value; reparsing it yields an equal value. */
dsym_status dsym_format(const dsym_value* value, char** out);

/* Exact structural equality; writes 1 or 0. */
dsym_status dsym_value_equals(const dsym_value* a, const dsym_value* b, int* out);

void dsym_value_free(dsym_value* value);

/* Runs one command given argv-style arguments (program name excluded), for
 * example {"matrix", "--n", "3"}. On DSYM_OK and DSYM_ERR_CHECK_FAILED the
 * report is returned through `out`; other statuses leave it null. */
dsym_status dsym_run(int argc, const char* const* argv, dsym_report** out);

/* Deterministic JSON serialization of a report (sorted keys, no timing). */
dsym_status dsym_report_json(const dsym_report* report, char** out);

/* Human-readable listing with one line per check and the elapsed time. */
dsym_status dsym_report_text(const dsym_report* report, char** out);

/* Writes 1 when every check in the report passed, else 0. */
dsym_status dsym_report_pass(const dsym_report* report, int* out);

void dsym_report_free(dsym_report* report);

/* Releases strings returned by dsym_format and the report serializers. */
void dsym_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DELTASYM_H */
