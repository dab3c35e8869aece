/*
 * liec: C interface to the exact Lie-theory engine.
 *
 * All computations are exact; rationals are rendered as "p/q" and integers
 * as plain decimal strings. Structured results are returned as JSON text
 * owned by the library; release them with liec_string_free. Calls return
 * LIEC_OK on success; on failure liec_last_error(ctx) describes the fault
 * and names the violated contract.
 */
#ifndef LIEC_H
#define LIEC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct liec_ctx liec_ctx;

typedef enum {
  LIEC_OK = 0,
  LIEC_EINVAL = 1,    /* invalid argument or type */
  LIEC_EDOMAIN = 2,   /* domain error (NonIntegerIndex, NotASimpleSystem, ...) */
  LIEC_ENOTFOUND = 3, /* unknown real form or dataset reference */
  LIEC_EPARSE = 4,    /* malformed file or request */
  LIEC_EFAIL = 5      /* internal failure */
} liec_status;

const char* liec_version(void);

/* Context over the bundled catalog and dataset. */
liec_ctx* liec_ctx_new(void);
/* Context over files; either path may be NULL to use the bundled data. */
liec_ctx* liec_ctx_new_with_paths(const char* catalog_path,
                                  const char* atlas_path);
void liec_ctx_free(liec_ctx* ctx);

/* Message for the most recent failing call on this context. */
const char* liec_last_error(const liec_ctx* ctx);

void liec_string_free(char* s);

/* Root system summary: count, dimension, highest root, norm spectrum. */
liec_status liec_roots_info(liec_ctx* ctx, const char* type, char** json_out);

/* Dynkin diagram; extended != 0 attaches the lowest-root node and marks. */
liec_status liec_diagram(liec_ctx* ctx, const char* type, int extended,
                         char** json_out);

/* Maximal regular subalgebras via extended-diagram node deletion. */
liec_status liec_regular_subalgebras(liec_ctx* ctx, const char* type,
                                     char** json_out);

/*
 * Dynkin index of an embedding. The request is JSON:
 *   {"mechanism":"regular","ambient":"G2","factors":[[[1,0]],[[3,2]]]}
 *   {"mechanism":"branched","block":"so7<so9"}
 *   {"mechanism":"principal","ambient":"F4","exponents":[1,5,7,11]}
 *   {"mechanism":"chain","links":["sp2<sl4","sl4<sl8"]}
 *   {"mechanism":"real","ambient":"e6^{-26}","sub":["sl_3(C)"],
 *    "via":"real(bds(E6:del=4,keep=1,2))"}   ("via" optional: auto-resolve)
 */
liec_status liec_index(liec_ctx* ctx, const char* request_json, char** json_out);

/* Trace-form oracle for a classical block spec such as "so5<so6". */
liec_status liec_trace_form_oracle(liec_ctx* ctx, const char* block,
                                   char** json_out);

/* Symmetric space data for a real form id. */
liec_status liec_space_info(liec_ctx* ctx, const char* realform, char** json_out);

/*
 * Run the verification harness over the named tables
 * ("g2,f4,e6,e7,e8,candidates,theorem-b" or "all").
 * mismatches_out receives the number of failing rows.
 */
liec_status liec_verify(liec_ctx* ctx, const char* tables, char** report_json_out,
                        int* mismatches_out);

/* what: "dataset" | "report"; format: "json" | "csv". */
liec_status liec_export(liec_ctx* ctx, const char* what, const char* format,
                        char** out);

#ifdef __cplusplus
}
#endif

#endif /* LIEC_H */
