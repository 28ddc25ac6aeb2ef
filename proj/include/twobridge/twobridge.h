/*
 * C API of the two-bridge knot torsion engine.
 *
 * All computation results cross the boundary as JSON strings (see the README
 * for the schemas). Handles are opaque; strings returned through `char**`
 * outputs are heap-allocated and must be released with tb_string_free().
 * Functions return TB_OK on success; on failure tb_last_error() describes
 * the problem for the calling thread.
 */
#ifndef TWOBRIDGE_H
#define TWOBRIDGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
  TB_OK = 0,
  TB_COMPUTATION_ERROR = 1, /* degenerate point, retries exhausted, ... */
  TB_INVALID_INPUT = 2      /* invalid form, bad flag or argument */
} tb_status;

typedef struct tb_riley tb_riley;
typedef struct tb_config tb_config;

const char* tb_version(void);

/* ---- configuration ---- */

tb_config* tb_config_new(void);
void tb_config_free(tb_config* config);
tb_status tb_config_set_tolerance(tb_config* config, const char* name, double value);
tb_status tb_config_set_seed(tb_config* config, uint64_t seed);
tb_status tb_config_set_trials(tb_config* config, int32_t trials);
tb_status tb_config_set_precision(tb_config* config, const char* mode); /* standard|extended */
/* Pin the trace value of the first verify trial; resample != 0 falls back to
 * sampling when the pinned value is rejected as non-generic. */
tb_status tb_config_set_pinned_c(tb_config* config, double c_re, double c_im, int32_t resample);

/* ---- Riley data ---- */

tb_status tb_riley_new(int32_t p, int32_t q, tb_riley** out);
void tb_riley_free(tb_riley* riley);
tb_status tb_riley_json(const tb_riley* riley, char** json_out);

/* ---- computations ---- */

/* One trace fiber: all characters over c, torsions, inverse sum. */
tb_status tb_spectrum_json(const tb_riley* riley, const tb_config* config, double c_re,
                           double c_im, char** json_out);

/* Sampled inverse-sum verification (trials/seed from the config). */
tb_status tb_verify_json(const tb_riley* riley, const tb_config* config, char** json_out);

/* Closed-form formula vs cochain-complex oracle at sampled characters.
 * dump_cochain != 0 attaches the cochain data of the first character. */
tb_status tb_oracle_json(const tb_riley* riley, const tb_config* config, int32_t samples,
                         int32_t dump_cochain, char** json_out);

/* ---- utilities ---- */

void tb_string_free(char* s);
const char* tb_last_error(void); /* thread-local, valid until the next call */
const char* tb_status_name(tb_status status);

#ifdef __cplusplus
}
#endif

#endif /* TWOBRIDGE_H */
