/* gcvs.h - C interface to the graph-coloring check-digit and verifiable
 * secret sharing library.
 *
 * All objects are opaque handles created by gcvs_* functions and released by
 * the matching *_free function. Functions return a gcvs_status; on failure
 * gcvs_last_error() describes the problem for the calling thread. Strings
 * returned through char** parameters are owned by the caller and released
 * with gcvs_string_free().
 */
#ifndef GCVS_H
#define GCVS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GCVS_API __declspec(dllexport)
#else
#define GCVS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcvs_status {
  GCVS_OK = 0,
  GCVS_E_INVALID_ARGUMENT,
  GCVS_E_INVALID_BIT_STRING,
  GCVS_E_VERTEX_OUT_OF_RANGE,
  GCVS_E_SELF_LOOP,
  GCVS_E_DUPLICATE_EDGE,
  GCVS_E_NON_TRIANGULAR_LENGTH,
  GCVS_E_PADDING_MISMATCH,
  GCVS_E_LENGTH_MISMATCH,
  GCVS_E_NON_BINARY_STRUCTURE_DIGIT,
  GCVS_E_COLOR_OUT_OF_RANGE,
  GCVS_E_GRAPH_TOO_LARGE,
  GCVS_E_TOO_LARGE_FOR_ORACLE,
  GCVS_E_EXTENSION_PATTERN_MISMATCH,
  GCVS_E_MALFORMED,
  GCVS_E_PAYLOAD_TOO_SHORT,
  GCVS_E_SAMPLING_EXHAUSTED,
  GCVS_E_MODULUS_MISMATCH,
  GCVS_E_EXCLUDED_SECRET,
  GCVS_E_SHAPE_MISMATCH,
  GCVS_E_DEALER_EXHAUSTED,
  GCVS_E_INVALID_SECRET,
  GCVS_E_INVALID_RECOVERY,
  GCVS_E_INTERNAL
} gcvs_status;

typedef enum gcvs_outcome {
  GCVS_POSITIVE = 0,
  GCVS_COLORING_INVALID = 1,
  GCVS_CHROMATIC_TOO_LOW = 2,
  GCVS_MALFORMED = 3
} gcvs_outcome;

typedef enum gcvs_tamper_model {
  GCVS_TAMPER_FLIP_ONE_BIT = 0,
  GCVS_TAMPER_FLIP_BITS = 1,
  GCVS_TAMPER_REPLACE_UNIFORM = 2
} gcvs_tamper_model;

typedef enum gcvs_deal_strategy {
  GCVS_DEAL_REJECTION = 0,
  GCVS_DEAL_SEQUENTIAL = 1
} gcvs_deal_strategy;

typedef struct gcvs_envelope gcvs_envelope;
typedef struct gcvs_structure gcvs_structure;
typedef struct gcvs_shares gcvs_shares;
typedef struct gcvs_report gcvs_report;

GCVS_API const char* gcvs_version(void);
GCVS_API const char* gcvs_last_error(void);
GCVS_API const char* gcvs_status_name(gcvs_status status);
GCVS_API const char* gcvs_outcome_name(gcvs_outcome outcome);
GCVS_API void gcvs_string_free(char* str);

/* --- check-digit envelopes ------------------------------------------------ */

/* modulus 0 selects k = n. */
GCVS_API gcvs_status gcvs_envelope_encode(const char* bits, size_t extension, uint32_t modulus,
                                          gcvs_envelope** out);
GCVS_API gcvs_status gcvs_envelope_parse(const char* text, gcvs_envelope** out);
GCVS_API gcvs_status gcvs_envelope_serialize(const gcvs_envelope* envelope, char** out);
/* detail (optional) receives a human-readable reason for non-Positive outcomes. */
GCVS_API gcvs_status gcvs_envelope_verify(const gcvs_envelope* envelope, gcvs_outcome* outcome,
                                          char** detail);
GCVS_API gcvs_status gcvs_envelope_tamper(const gcvs_envelope* envelope, gcvs_tamper_model model,
                                          size_t bits, uint64_t seed, gcvs_envelope** out);
GCVS_API gcvs_status gcvs_envelope_payload(const gcvs_envelope* envelope, char** out);
GCVS_API size_t gcvs_envelope_vertex_count(const gcvs_envelope* envelope);
GCVS_API uint32_t gcvs_envelope_palette(const gcvs_envelope* envelope);
GCVS_API uint32_t gcvs_envelope_modulus(const gcvs_envelope* envelope);
GCVS_API void gcvs_envelope_free(gcvs_envelope* envelope);

/* --- verification structures --------------------------------------------- */

GCVS_API gcvs_status gcvs_structure_pairwise(size_t threshold, gcvs_structure** out);
GCVS_API gcvs_status gcvs_structure_full(size_t threshold, gcvs_structure** out);
/* One set per line; indices separated by ',', '+' or blanks; '#' comments. */
GCVS_API gcvs_status gcvs_structure_parse(const char* text, size_t threshold,
                                          gcvs_structure** out);
GCVS_API size_t gcvs_structure_size(const gcvs_structure* structure);
GCVS_API void gcvs_structure_free(gcvs_structure* structure);

/* --- shares ---------------------------------------------------------------- */

typedef struct gcvs_deal_options {
  uint64_t max_retries;          /* default 1000000 */
  gcvs_deal_strategy strategy;   /* default GCVS_DEAL_REJECTION */
  unsigned jobs;                 /* default 1 */
  int uniform_modulus;           /* share structure over Z_k instead of Z_2 */
} gcvs_deal_options;

GCVS_API void gcvs_deal_options_init(gcvs_deal_options* options);

/* Shares the colored graph an envelope describes (extended graph plus check
 * digits). attempts (optional) receives the successful attempt number. */
GCVS_API gcvs_status gcvs_shares_deal(const gcvs_envelope* secret, size_t threshold,
                                      uint32_t modulus, const gcvs_structure* structure,
                                      uint64_t seed, const gcvs_deal_options* options,
                                      gcvs_shares** out, uint64_t* attempts);
GCVS_API gcvs_status gcvs_shares_new(gcvs_shares** out);
GCVS_API gcvs_status gcvs_shares_add_text(gcvs_shares* shares, const char* text);
GCVS_API size_t gcvs_shares_count(const gcvs_shares* shares);
GCVS_API size_t gcvs_shares_threshold(const gcvs_shares* shares);
/* position is 0-based within the collection. */
GCVS_API gcvs_status gcvs_shares_serialize(const gcvs_shares* shares, size_t position, char** out);
GCVS_API size_t gcvs_shares_index(const gcvs_shares* shares, size_t position);
/* Recovers the secret from the full set as an envelope whose payload has
 * bit_length bits; SIZE_MAX selects the full triangular length. */
GCVS_API gcvs_status gcvs_shares_combine(const gcvs_shares* shares, size_t bit_length,
                                         gcvs_envelope** out);
GCVS_API gcvs_status gcvs_shares_verify(const gcvs_shares* shares,
                                        const gcvs_structure* structure, gcvs_report** out);
GCVS_API void gcvs_shares_free(gcvs_shares* shares);

GCVS_API gcvs_status gcvs_report_csv(const gcvs_report* report, char** out);
GCVS_API gcvs_status gcvs_report_verdict(const gcvs_report* report, char** out);
GCVS_API int gcvs_report_positive(const gcvs_report* report);
GCVS_API void gcvs_report_free(gcvs_report* report);

/* --- counting and simulation ------------------------------------------- */

/* CSV with columns V,n,y,gamma_exp,gamma_n_exp,bound_holds for 1 <= n <= V
 * <= max_v. With oracle != 0 an extra "oracle" column reports PASS/FAIL for
 * rows with V <= 6 and "-" otherwise; all_pass (optional) is set to 0 when
 * any row fails. */
GCVS_API gcvs_status gcvs_count_table(uint32_t max_v, int oracle, char** csv, int* all_pass);

typedef struct gcvs_sweep_config {
  uint32_t vertices;
  uint32_t palette;
  uint64_t trials;
  gcvs_tamper_model model;
  size_t bits;               /* for GCVS_TAMPER_FLIP_BITS */
  uint64_t seed;
  unsigned jobs;
  int tamper_check_digits;
} gcvs_sweep_config;

typedef struct gcvs_sweep_record {
  uint32_t vertices;
  uint32_t palette;
  uint32_t y;
  uint64_t trials;
  uint64_t undetected;
  double empirical_rate;
  double bound;
  double tolerance;   /* 3 sigma at p = bound */
} gcvs_sweep_record;

GCVS_API gcvs_status gcvs_tamper_sweep(const gcvs_sweep_config* config, gcvs_sweep_record* out);
GCVS_API gcvs_status gcvs_sweep_csv(const gcvs_sweep_record* record, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GCVS_H */
