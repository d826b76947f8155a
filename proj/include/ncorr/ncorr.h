#ifndef NCORR_H
#define NCORR_H

/* C surface of the n-correlation workbench.
 *
 * All functionality flows through an opaque context: create one, set flat
 * key = value configuration entries, run a command, read the returned
 * strings, free them.  Every entry point returns a status code from the list
 * below; details of the last failed call on a context stay readable until the
 * next call on that context.  Contexts are independent; using one context
 * from several threads at once is not supported.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ncorr_ctx ncorr_ctx;

/* Status codes.  1..10 mirror the core library's error categories. */
enum {
    NCORR_OK = 0,
    NCORR_ERR_POLE = 1,      /* evaluation point within pole tolerance of a pole */
    NCORR_ERR_SIZE = 2,      /* combinatorial size guard tripped */
    NCORR_ERR_STRIP = 3,     /* complex argument outside the permitted strip */
    NCORR_ERR_TAIL = 4,      /* quadrature tail bound not met */
    NCORR_ERR_SUPPORT = 5,   /* test-function support budget violated */
    NCORR_ERR_PARSE = 6,     /* malformed input file */
    NCORR_ERR_ORDER = 7,     /* input ordinates not sorted or not positive */
    NCORR_ERR_NUMERICAL = 8, /* conditioning or convergence failure */
    NCORR_ERR_INVALID = 9,   /* bad argument combination */
    NCORR_ERR_IO = 10,       /* file system failure */
    NCORR_ERR_ARGUMENT = 98, /* null pointer or similar API misuse */
    NCORR_ERR_INTERNAL = 99
};

ncorr_ctx* ncorr_ctx_new(void);
void ncorr_ctx_free(ncorr_ctx* ctx);

/* Set or read one configuration entry.  Unknown keys are rejected.  The
 * string from ncorr_get is owned by the caller (ncorr_string_free). */
int ncorr_set(ncorr_ctx* ctx, const char* key, const char* value);
int ncorr_get(ncorr_ctx* ctx, const char* key, char** value_out);

/* Run a command: "compare", "sample", "verify-jstar", "decay", "zeta" or
 * "plotdata".  On NCORR_OK the outputs are heap strings owned by the caller
 * (either pointer may be NULL to skip) and *exit_code_out holds the verdict:
 * 0 pass, 1 tolerance failure, 2 configuration error, 3 numerical error.
 * Configuration and numerical problems are reported through the exit code
 * with detail in the records, not as a call failure. */
int ncorr_run(ncorr_ctx* ctx, const char* command, char** records_out, char** table_out,
              int* exit_code_out);

void ncorr_string_free(char* s);

/* Message and code of the last failed call on this context; the message is
 * valid until the next call on the context, empty when nothing failed. */
const char* ncorr_last_error(const ncorr_ctx* ctx);
int ncorr_last_error_code(const ncorr_ctx* ctx);

const char* ncorr_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NCORR_H */
