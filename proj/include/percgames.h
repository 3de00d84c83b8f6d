/* C interface of the percolation-games verification library.
 *
 * The library runs named workflows ("runs") over the exact-rational
 * verification engine and the Monte Carlo simulator: kernel dumps, regime
 * verdicts, region exports, pushforward-lemma and weight-function
 * verification sweeps, threshold-root tables, draw-probability estimation
 * and envelope-PCA simulation. A run is requested with a JSON document and
 * produces one output document (JSON or CSV); identical requests produce
 * byte-identical outputs.
 */
#ifndef PERCGAMES_H
#define PERCGAMES_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_INVALID_ARGUMENT = 1, /* malformed request: unknown fields, bad JSON */
  PG_ERR_DOMAIN = 2,           /* parameters outside their domain */
  PG_ERR_VERIFICATION_FAILED = 3, /* run completed, some check failed */
  PG_ERR_INTERNAL = 4
} pg_status;

/* Library version, static storage. */
const char* pg_version(void);

/* Diagnostic for the calling thread's last non-PG_OK return; valid until the
 * next API call on the same thread. Empty string when the last call
 * succeeded. */
const char* pg_last_error(void);

/* A completed run: the output document plus its verdict. */
typedef struct pg_run pg_run;

/* Execute a subcommand with a JSON request. Subcommands and their request
 * fields (rational-valued fields are strings such as "0.01" or "3/4";
 * integer fields are JSON integers):
 *
 *   "kernel"         model, p/q/r or rp/sp
 *   "regime"         model, p/q/r or rp/sp
 *   "region"         model, axes p/q/r or rp/sp as {lo, hi, count}
 *   "draw-prob"      model, params, horizon, replicas, seed,
 *                    format ("json"|"csv"), optional threads
 *   "simulate"       model, params, size, steps, init ("allD"|"allW"|"allL"),
 *                    seed, optional driver ("kernel"|"labels")
 *   "verify-lemmas"  point_samples, measure_samples, seed,
 *                    optional family ("identities"|"bounds"|"all")
 *   "verify-weights" variant, param_samples, measure_samples, seed
 *   "roots"          optional format ("table"|"json")
 *
 * The request, minus the "threads" field, is echoed as the configuration
 * header of the output document, so outputs never depend on the degree of
 * parallelism.
 *
 * Returns PG_OK on success. PG_ERR_VERIFICATION_FAILED still populates
 * *out_run (the run completed and the report names the failing checks). On
 * any other status *out_run is NULL and pg_last_error() explains. Destroy
 * the run with pg_run_destroy. */
pg_status pg_run_create(const char* subcommand, const char* request_json,
                        pg_run** out_run);

/* The run's output document. Owned by the run; valid until pg_run_destroy. */
const char* pg_run_output(const pg_run* run);

/* 1 when every check in the run passed, 0 otherwise. Runs without a verdict
 * (dumps, simulations) report 1. */
int pg_run_passed(const pg_run* run);

void pg_run_destroy(pg_run* run);

#ifdef __cplusplus
}
#endif

#endif /* PERCGAMES_H */
