/* C interface to the blockledger core library.
 *
 * Conventions:
 *   - Partitions are comma-separated part lists, e.g. "3,1,1"; "" or "0" is
 *     the empty partition.
 *   - Every function returning blc_status sets the thread-local message
 *     readable via blc_last_error() on failure.
 *   - Strings returned through char** out parameters are heap-allocated;
 *     release them with blc_free(). On failure *out is left untouched.
 *   - Structured results are JSON text; large integers are decimal strings.
 */
#ifndef BLOCKLEDGER_H
#define BLOCKLEDGER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef BLC_API
#define BLC_API __attribute__((visibility("default")))
#endif

typedef enum blc_status {
  BLC_OK = 0,
  BLC_EINVAL = 1,   /* invalid argument (bad partition text, non-prime, ...) */
  BLC_EBUDGET = 2,  /* group enumeration exceeded its element budget */
  BLC_EIO = 3,      /* file could not be read */
  BLC_ESCHEMA = 4,  /* external data failed validation */
  BLC_EINTERNAL = 5 /* internal consistency check failed */
} blc_status;

/* Message for the most recent failure on this thread; "" after success. */
BLC_API const char* blc_last_error(void);

/* Release a string returned through a char** out parameter. NULL is a no-op. */
BLC_API void blc_free(char* s);

/* ---- partition arithmetic ---------------------------------------------- */

/* Conjugate (transposed) partition, in the same textual form. */
BLC_API blc_status blc_conjugate(const char* partition, char** out);

/* Irreducible character degree for the label, as a decimal string. */
BLC_API blc_status blc_degree(const char* partition, char** out);

/* p-adic valuation of that degree. */
BLC_API blc_status blc_degree_valuation(const char* partition, int prime, int* out);

/* p-core of the partition. */
BLC_API blc_status blc_core(const char* partition, int prime, char** out);

/* p-quotient as a JSON array of p partition strings. */
BLC_API blc_status blc_quotient(const char* partition, int prime, char** out);

/* Core tower as a JSON array of layers, e.g. [["0"],["1","1"]]. */
BLC_API blc_status blc_tower(const char* partition, int prime, char** out);

/* p-weight: (|partition| - |p-core|) / p. */
BLC_API blc_status blc_weight(const char* partition, int prime, int* out);

/* ---- blocks ------------------------------------------------------------ */

/* Full report for the block with the given p-core and weight, as JSON:
 * {"p":..,"core":"..","weight":..,"n":..,"degrees":["..",...],
 *  "heights":[..],"defect":..,"dl":..,"thmC":bool,"questionA":bool}
 * plus a "members" array of partition strings. cross_check != 0 recomputes
 * every height a second way and fails BLC_EINTERNAL on a mismatch. */
BLC_API blc_status blc_block_report(int prime, const char* core, int weight,
                                    int cross_check, char** out_json);

/* All blocks of the symmetric group on n letters at the prime, as a JSON
 * array of {"core":"..","weight":..,"defect":..,"members":..} rows. */
BLC_API blc_status blc_block_list(int n, int prime, char** out_json);

/* The k-member ladder for a block of weight >= 1, as JSON rows
 * {"partition":"..","degree":"..","height":..,"self_conjugate":bool}. */
BLC_API blc_status blc_height_ladder(int prime, const char* core, int weight,
                                     char** out_json);

/* Index-2 subgroup view of the block (n >= 5), as JSON: constituent degrees,
 * heights, q_valuation, dl_q, dlq_mode, k, ok, paper_gap. */
BLC_API blc_status blc_alt_view(int prime, const char* core, int weight,
                                char** out_json);

/* Block reports for all blocks of the symmetric group on n letters, rendered
 * in the external-data JSON schema (suitable for blc_external_parse). */
BLC_API blc_status blc_export_blocks(int n, int prime, char** out_json);

/* ---- group brute force -------------------------------------------------- */

/* Sylow p-subgroup of the symmetric group on m letters (m <= 16 at p = 2;
 * the element budget is 32768): JSON with "order", "derived_series" (orders),
 * "dl", "lower_central_series", "class". */
BLC_API blc_status blc_sylow_symmetric(int m, int prime, char** out_json);

/* Upper unitriangular n x n matrices over F_p (budget 65536): same JSON
 * shape as blc_sylow_symmetric. */
BLC_API blc_status blc_unitriangular(int n, int prime, char** out_json);

/* ---- verification sweep -------------------------------------------------- */

typedef struct blc_sweep blc_sweep;

/* Check every block of every symmetric group up to max_n for each prime.
 * include_alternating != 0 adds index-2 views for n >= 5. cross_check is
 * "auto" (on for n <= 25), "on", or "off"; NULL means "auto". jobs is the
 * worker count (>= 1); output is identical for any job count. */
BLC_API blc_status blc_sweep_run(int max_n, const int* primes, int n_primes,
                                 int include_alternating, const char* cross_check,
                                 int jobs, blc_sweep** out);

/* Number of violations found; -1 if s is NULL. */
BLC_API int blc_sweep_violations(const blc_sweep* s);

/* Render the sweep report; format is "table", "json", or "csv". */
BLC_API blc_status blc_sweep_render(const blc_sweep* s, const char* format,
                                    char** out);

BLC_API void blc_sweep_free(blc_sweep* s);

/* ---- external block data ------------------------------------------------ */

typedef struct blc_external blc_external;

/* Load a JSON file of block data exported from another system and evaluate
 * the derived-length, height, and degree-count checks on every block. */
BLC_API blc_status blc_external_open(const char* path, blc_external** out);

/* Same, from JSON text already in memory. */
BLC_API blc_status blc_external_parse(const char* json_text, blc_external** out);

/* Number of failed checks (counterexamples included); -1 if e is NULL. */
BLC_API int blc_external_violations(const blc_external* e);

/* Render the verdicts; format is "table", "json", or "csv". */
BLC_API blc_status blc_external_render(const blc_external* e, const char* format,
                                       char** out);

BLC_API void blc_external_free(blc_external* e);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BLOCKLEDGER_H */
