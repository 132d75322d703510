/* tric - interpolation error constants on triangles
 *
 * C interface to the verification library: closed-form constant bounds,
 * discrete upper-bound pipelines, the certified shape sweeps and the
 * algebraic identity suite. All heavy objects live behind opaque handles;
 * every call returns a tric_status and writes results through out
 * parameters. Strings returned through tric_*_json/csv stay owned by the
 * handle they came from and die with it.
 */

#ifndef TRIC_H
#define TRIC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tric_status {
  TRIC_OK = 0,
  TRIC_ERR_INVALID_ARGUMENT = 1,
  TRIC_ERR_DEGENERATE = 2,
  TRIC_ERR_NOT_CERTIFIED = 3,
  TRIC_ERR_INTERNAL = 4
} tric_status;

const char* tric_version(void);

/* Message for the last failing call on this thread. */
const char* tric_last_error(void);

/* ---- closed-form constants ---------------------------------------------
 * Rationals are passed as strings: "p/q", integers, or plain decimals
 * ("0.3" parses as 3/10 exactly). */

typedef struct tric_constants {
  double k1, k2, k3, k4;
  double circumradius;
  double normalized_a, normalized_b; /* canonical shape parameters */
  double scale;                      /* similarity ratio to the canonical shape */
} tric_constants;

tric_status tric_constants_from_shape(const char* a, const char* b,
                                      tric_constants* out);
tric_status tric_constants_from_vertices(const double xy[6], tric_constants* out);

/* Exact rational L_j(a,b) = K_j^2 as a "p/q" string written into buf. */
tric_status tric_l_constant(int j, const char* a, const char* b, char* buf,
                            size_t buf_len);

/* ---- reports ------------------------------------------------------------
 * Generic result handle carrying a verdict plus machine-readable renderings.
 */

typedef struct tric_report tric_report;

void tric_report_free(tric_report* report);
/* 1 when every contained check/point succeeded. */
int tric_report_ok(const tric_report* report);
const char* tric_report_json(const tric_report* report);
/* CSV rendering; empty string when the report type has none. */
const char* tric_report_csv(const tric_report* report);

/* ---- result tables ------------------------------------------------------ */

/* One table for constant index j (1..4): closed-form K_j, transferred upper
 * bounds for each n in ns, and the degree-limited subspace estimate
 * (degree <= 0 skips it). */
tric_status tric_table_compute(int j, const int* ns, int ns_count, int degree,
                               tric_report** out);

/* ---- certified sweeps ---------------------------------------------------- */

typedef struct tric_verify_config {
  const char* mode;  /* "thm61" or "thm62" */
  const int* js;     /* constant indices, NULL for all admissible */
  int js_count;
  int n;             /* refinement, 20 reproduces the published setup */
  const int* ks;     /* level slice (thm61), NULL for all 1..119 */
  int ks_count;
  const int* ls;     /* offset slice, NULL for all */
  int ls_count;
  int parallelism;   /* <= 1 for single-threaded */
  const char* checkpoint_path; /* optional resume file */
} tric_verify_config;

tric_status tric_verify_run(const tric_verify_config* config, tric_report** out);

/* ---- identity suite ------------------------------------------------------ */

/* selector: "all" or a comma-separated list of lemma ids ("14.9,14.11"). */
tric_status tric_identities_run(const char* selector, tric_report** out);
/* Same with an explicit seed for the randomized spot checks. */
tric_status tric_identities_run_seeded(const char* selector,
                                       unsigned long long seed, tric_report** out);

/* ---- proof-chain status --------------------------------------------------
 * Aggregates previously produced sweep report JSON documents. */
tric_status tric_proof_status(const char* const* report_jsons, int count,
                              int identities_passed, tric_report** out);

/* ---- refinement debug dump ------------------------------------------------ */
tric_status tric_mesh_dump(int n, const char* space, int j, const char* a,
                           const char* b, int include_matrices, tric_report** out);

#ifdef __cplusplus
}
#endif

#endif /* TRIC_H */
