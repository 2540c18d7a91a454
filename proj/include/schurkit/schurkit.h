#ifndef SCHURKIT_SCHURKIT_H
#define SCHURKIT_SCHURKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SCHURKIT_BUILDING)
#define SK_API __attribute__((visibility("default")))
#else
#define SK_API
#endif

typedef struct sk_group sk_group;
typedef struct sk_field sk_field;

/* SK_OK, then one code per library error kind. */
typedef enum sk_status {
  SK_OK = 0,
  SK_INVALID_SPEC,
  SK_PARSE_ERROR,
  SK_PRESENTATION_INCONSISTENT,
  SK_ORDER_OVERFLOW,
  SK_SIZE_CAP_EXCEEDED,
  SK_NOT_NESTED,
  SK_NOT_METABELIAN,
  SK_COMPLETENESS_FAILURE,
  SK_NOT_STRONG_SHODA,
  SK_NOT_SQUAREFREE,
  SK_REDUCIBLE_POLYNOMIAL,
  SK_UNSUPPORTED,
  SK_ZERO_ELEMENT,
  SK_NOT_IN_FIELD,
  SK_NOT_QUADRATIC_EXTENSION,
  SK_ACTION_NOT_ORDER_2,
  SK_TWISTING_NOT_CENTRAL,
  SK_PRECONDITION_VIOLATED,
  SK_INTERNAL
} sk_status;

/* JSON description of the last failure on this thread, or "" after success. */
SK_API const char* sk_last_error(void);
SK_API const char* sk_status_name(sk_status s);

SK_API sk_status sk_group_parse(const char* spec, sk_group** out);
SK_API void sk_group_free(sk_group* g);
SK_API sk_status sk_field_parse(const char* spec, sk_field** out);
SK_API void sk_field_free(sk_field* f);

/* Functions below store a JSON document in *out, released with sk_string_free.
   A null verified_d selects the built-in list of d with SL2(Z[sqrt d]) known
   to be virtually free-by-free. */
SK_API sk_status sk_decompose(const sk_group* g, int verify_dimensions, char** out);
SK_API sk_status sk_cset(const sk_field* k, const sk_group* g, char** out);
/* The quaternion algebra (a, b / center) in M_n, or M_n(center) when a and b
   are null. a and b use the element syntax of the output, e.g. "-1" or "z4". */
SK_API sk_status sk_classify_algebra(const sk_field* center, const char* a, const char* b, long matrix_size,
                                     const long* verified_d, size_t n_verified, char** out);
SK_API sk_status sk_kleinian(const sk_field* k, const sk_group* g, char** out);
SK_API sk_status sk_unit_structure(const sk_field* k, const sk_group* g, const long* verified_d,
                                   size_t n_verified, char** out);
SK_API sk_status sk_catalog(char** out);
/* scope: all, groups, cyclofield, grpalg, csa or classify. */
SK_API sk_status sk_verify(const char* scope, int verify_dimensions, char** out);

SK_API void sk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
