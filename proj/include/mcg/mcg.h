/* C interface to the matching-covered graph analysis library.
 *
 * Usage pattern:
 *   mcg_instance* inst = NULL;
 *   char* report = NULL;
 *   char* error = NULL;
 *   mcg_params params;
 *   mcg_params_init(&params);
 *   mcg_status st = mcg_instance_parse(json_text, &inst, &error);
 *   if (st == MCG_OK) st = mcg_analyze(inst, "check", &params, &report, &error);
 *   ...
 *   mcg_string_free(report);
 *   mcg_string_free(error);
 *   mcg_instance_free(inst);
 *
 * Every function returns a status; out parameters are only written on the
 * paths documented below. Strings returned through out parameters are heap
 * copies owned by the caller and released with mcg_string_free.
 */

#ifndef MCG_H
#define MCG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcg_status {
  MCG_OK = 0,
  MCG_INTERNAL_ERROR = 1,  /* unexpected failure inside the library */
  MCG_INPUT_ERROR = 2,     /* malformed document or violated precondition */
  MCG_INFEASIBLE = 3,      /* structurally impossible or undefined request */
  MCG_BUDGET_EXCEEDED = 4, /* an enumeration budget was exhausted */
  MCG_THEOREM_ALARM = 5    /* an internal consistency guarantee broke */
} mcg_status;

/* Opaque parsed instance document. */
typedef struct mcg_instance mcg_instance;

typedef struct mcg_params {
  int ell;                       /* level for the kbest commands, default 1 */
  int budget_nodes;              /* 0 keeps each operation's own cap */
  long max_items;                /* enumeration item ceiling */
  unsigned long long seed;       /* for sampled walks */
  int walk_count;                /* oracle walks: how many */
  int walk_max_len;              /* oracle walks: length cap */
  const char* oracle_which;      /* oracle command selector, may be NULL */
} mcg_params;

/* Fills in the defaults; call before tweaking individual fields. */
void mcg_params_init(mcg_params* params);

/* Parses an instance document. On MCG_OK writes *out; otherwise *out stays
 * NULL and *error (when non-NULL) receives a message. */
mcg_status mcg_instance_parse(const char* json_text, mcg_instance** out, char** error);

/* Builds a named catalog instance (K2, K4, GSTAR, D1, ...). */
mcg_status mcg_instance_construct(const char* name, mcg_instance** out, char** error);

/* Canonical serialization of the instance. */
mcg_status mcg_instance_to_json(const mcg_instance* instance, char** out, char** error);

void mcg_instance_free(mcg_instance* instance);

/* Runs one analysis command (check, potential, spaces, blocks, decompose,
 * kbest-pm, kbest-bfactor, kbest-arb, arb-dual, oracle) and returns the
 * JSON report. params may be NULL for all defaults. */
mcg_status mcg_analyze(const mcg_instance* instance, const char* command,
                       const mcg_params* params, char** report_json, char** error);

/* Plain-text rendering of a JSON report produced by mcg_analyze. */
mcg_status mcg_render_text(const char* report_json, char** out, char** error);

void mcg_string_free(char* text);

const char* mcg_status_name(mcg_status status);

const char* mcg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MCG_H */
