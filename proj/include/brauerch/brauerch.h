/* C interface to the brauerch library. All strings returned through char**
 * are heap-allocated and must be released with brauerch_string_free. On any
 * status other than BRAUERCH_OK, brauerch_last_error() describes the failure
 * for the calling thread. */
#ifndef BRAUERCH_BRAUERCH_H_
#define BRAUERCH_BRAUERCH_H_

#include <stddef.h>

#if defined(BRAUERCH_BUILDING_LIBRARY)
#define BRAUERCH_API __attribute__((visibility("default")))
#else
#define BRAUERCH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BRAUERCH_OK = 0,
  BRAUERCH_DOMAIN_ERROR = 1, /* violated precondition: bounds, odd N, ... */
  BRAUERCH_USAGE_ERROR = 2,  /* malformed input text, bad arguments */
  BRAUERCH_INTERNAL_ERROR = 3
} brauerch_status;

typedef enum {
  BRAUERCH_GL = 0,
  BRAUERCH_ORTHOGONAL = 1,
  BRAUERCH_SYMPLECTIC = 2
} brauerch_family;

typedef enum {
  BRAUERCH_CH_THEOREM = 0,
  BRAUERCH_CH_ORACLE = 1
} brauerch_ch_method;

typedef struct brauerch_image brauerch_image;
typedef struct brauerch_operator brauerch_operator;

BRAUERCH_API const char* brauerch_version(void);
BRAUERCH_API const char* brauerch_last_error(void);
BRAUERCH_API void brauerch_string_free(char* s);

/* "gl", "orthogonal"/"o", "sp"/"symplectic". */
BRAUERCH_API brauerch_status brauerch_parse_family(const char* name, int* family);

/* Partitions are passed as text: "2,2"; "" or "0" is the empty partition. */

/* ch(φ_λ) for O_N / Sp_N. */
BRAUERCH_API brauerch_status brauerch_chmap(const char* lambda, int family, int N, int method, int force_large,
                                            brauerch_image** out);
BRAUERCH_API size_t brauerch_image_term_count(const brauerch_image* image);
BRAUERCH_API brauerch_status brauerch_image_term(const brauerch_image* image, size_t index, char** nu,
                                                 char** coeff);
BRAUERCH_API brauerch_status brauerch_image_json(const brauerch_image* image, char** out);
BRAUERCH_API brauerch_status brauerch_image_text(const brauerch_image* image, char** out);
BRAUERCH_API void brauerch_image_free(brauerch_image* image);

/* Dimension of the irreducible representation labelled by `shape` (the row
 * label ρ for Sp_N). `value` receives the integer; `json`/`text` the report. */
BRAUERCH_API brauerch_status brauerch_dimension(const char* shape, int family, int N, char** value);
BRAUERCH_API brauerch_status brauerch_dimension_report(const char* shape, int family, int N, int as_json,
                                                       char** out);

/* Standard tableaux of λ in enumeration order, e.g. "1 2|3". */
BRAUERCH_API brauerch_status brauerch_tableau_count(const char* lambda, size_t* count);
BRAUERCH_API brauerch_status brauerch_tableau_text(const char* lambda, size_t index, char** out);

/* Primitive idempotent E_T for the index-th standard tableau of λ. */
BRAUERCH_API brauerch_status brauerch_idempotent(const char* lambda, size_t tableau_index, int family, int N,
                                                 int force_large, brauerch_operator** out);
BRAUERCH_API size_t brauerch_operator_dimension(const brauerch_operator* op);
BRAUERCH_API size_t brauerch_operator_nnz(const brauerch_operator* op);
BRAUERCH_API brauerch_status brauerch_operator_trace(const brauerch_operator* op, char** out);
/* Sparse (row, col, value) triples with the index encoding recorded. */
BRAUERCH_API brauerch_status brauerch_operator_json(const brauerch_operator* op, char** out);
BRAUERCH_API void brauerch_operator_free(brauerch_operator* op);

/* s_ν(x_1..x_n) as a polynomial. */
BRAUERCH_API brauerch_status brauerch_schur(const char* nu, int n, int as_json, char** out);

/* s_ν(x | a) for a_i = (ε+i-1)^2, evaluated at the comma-separated rational
 * point `at`, or at a_ρ when `at` is NULL and `rho` is given. `eps` is "0",
 * "1/2", "1" or "zero" for the sequence a_i = 0. */
BRAUERCH_API brauerch_status brauerch_double_schur(const char* nu, int n, const char* eps, const char* at,
                                                   const char* rho, int as_json, char** out);

/* Brauer diagrams on 2m dots: the count (2m-1)!!, or the full list. */
BRAUERCH_API brauerch_status brauerch_basis(int m, int count_only, int as_json, char** out);

/* Runs a verification suite. `N_values` may be NULL for the defaults.
 * `all_passed` receives 1 or 0. */
BRAUERCH_API brauerch_status brauerch_verify(const char* suite, int max_m, const int* N_values, size_t N_count,
                                             int as_json, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* BRAUERCH_BRAUERCH_H_ */
