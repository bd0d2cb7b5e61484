/* SPDX-License-Identifier: Apache-2.0 */
#ifndef DELPEZZO_DELPEZZO_H
#define DELPEZZO_DELPEZZO_H

/*
 * C interface to the del Pezzo hypersurface classifier.
 *
 * Every function returns a dp_status. On failure the message for the calling
 * thread is available from dp_last_error() until the next failing call.
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are released with
 * dp_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DP_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define DP_API __attribute__((visibility("default")))
#else
#  define DP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dp_status {
  DP_OK = 0,
  DP_ERR_ARGUMENT = 1, /* invalid input: bad index, unordered weights, malformed JSON */
  DP_ERR_OVERFLOW = 2, /* 64-bit arithmetic would overflow */
  DP_ERR_RANGE = 3,    /* position out of range */
  DP_ERR_INTERNAL = 4  /* consistency check failed inside the library */
} dp_status;

typedef enum dp_format {
  DP_FORMAT_TEXT = 0,
  DP_FORMAT_JSON = 1,
  DP_FORMAT_CSV = 2,
  DP_FORMAT_LATEX = 3
} dp_format;

/* Series origin tags; 1..6 are the colourful classes. */
typedef enum dp_series_class {
  DP_CLASS_1 = 1,
  DP_CLASS_2 = 2,
  DP_CLASS_3 = 3,
  DP_CLASS_4 = 4,
  DP_CLASS_5 = 5,
  DP_CLASS_6 = 6,
  DP_CLASS_TABLE = 7
} dp_series_class;

enum { DP_TYPE_I = 1, DP_TYPE_II = 2, DP_TYPE_III = 4 };

typedef struct dp_quintuple {
  int64_t a[4]; /* a0 <= a1 <= a2 <= a3 */
  int64_t d;
} dp_quintuple;

typedef struct dp_series_info {
  int origin; /* dp_series_class */
  dp_quintuple base;
  size_t step_count; /* 1 or 2 */
  int64_t steps[2][5];
  int64_t modulus;
} dp_series_info;

/* Pair order in the per-pair arrays: 01 02 03 12 13 23.
 * wf_triples[i] refers to the triple that omits a_i. */
typedef struct dp_check_report {
  int64_t index;
  int wf_pairs[6];
  int wf_triples[4];
  int nondegenerate;
  int cond_iv;
  int cond_v[6];
  int cond_vi[6];
  int accepted;  /* conditions (i)-(vi), divisibility form */
  int monomial;  /* conditions (i)-(vi), monomial form */
  int types;     /* DP_TYPE_* bits */
  int colour;    /* class 1..6, 0 if not colourful */
  int solid;
  int valid;
  int table_covered;
} dp_check_report;

typedef struct dp_obstruction {
  int64_t k2_num, k2_den;   /* K^2 as a reduced fraction */
  int64_t group_order;      /* N */
  int64_t k2n_num, k2n_den; /* K^2 N */
  int gmsy;                 /* I > 3 a0 */
  int spotti;               /* K^2 N >= 12 */
} dp_obstruction;

typedef struct dp_classification dp_classification;
typedef struct dp_series dp_series;
typedef struct dp_quintuple_list dp_quintuple_list;

DP_API const char* dp_version(void);
DP_API const char* dp_last_error(void);
DP_API void dp_string_free(char* s);

/* Quintuple lists */
DP_API size_t dp_quintuple_list_size(const dp_quintuple_list* list);
DP_API dp_status dp_quintuple_list_get(const dp_quintuple_list* list, size_t i, dp_quintuple* out);
DP_API void dp_quintuple_list_free(dp_quintuple_list* list);

/* Builds a quintuple from weights in any order and an index or a degree. */
DP_API dp_status dp_quintuple_from_index(const int64_t weights[4], int64_t index, dp_quintuple* out);
DP_API dp_status dp_quintuple_from_degree(const int64_t weights[4], int64_t degree, dp_quintuple* out);

/* Classification */
DP_API dp_status dp_classify(int64_t index, dp_classification** out);
DP_API void dp_classification_free(dp_classification* c);
DP_API int64_t dp_classification_index(const dp_classification* c);
DP_API size_t dp_classification_series_count(const dp_classification* c, int two_parameter);
DP_API dp_status dp_classification_series(const dp_classification* c, int two_parameter, size_t i,
                                          dp_series_info* out);
DP_API size_t dp_classification_sporadic_count(const dp_classification* c);
DP_API dp_status dp_classification_sporadic(const dp_classification* c, size_t i, dp_quintuple* out);
DP_API dp_status dp_classification_render(const dp_classification* c, dp_format format, char** out);
/* Rendering followed by every member with a3 <= bound. */
DP_API dp_status dp_classification_render_members(const dp_classification* c, dp_format format, int64_t bound,
                                                  char** out);
DP_API dp_status dp_classification_expand(const dp_classification* c, int64_t bound, dp_quintuple_list** out);

/* Series */
DP_API dp_status dp_series_parse(const char* json, dp_series** out);
DP_API void dp_series_free(dp_series* s);
DP_API dp_status dp_series_info_get(const dp_series* s, dp_series_info* out);
DP_API dp_status dp_series_to_json(const dp_series* s, char** out);
DP_API dp_status dp_series_expand(const dp_series* s, int64_t bound, dp_quintuple_list** out);
DP_API dp_status dp_series_contains(const dp_series* s, const dp_quintuple* q, int* out);

/* Conditions and obstructions for one quintuple */
DP_API dp_status dp_check(const dp_quintuple* q, dp_check_report* out);
DP_API dp_status dp_obstruction_report(const dp_quintuple* q, dp_obstruction* out);

/* Brute force and comparison against the classifier */
DP_API dp_status dp_oracle(int64_t index, int64_t bound, dp_quintuple_list** out);
DP_API dp_status dp_verify(int64_t index, int64_t bound, dp_quintuple_list** missing, dp_quintuple_list** extra);

#ifdef __cplusplus
}
#endif

#endif /* DELPEZZO_DELPEZZO_H */
