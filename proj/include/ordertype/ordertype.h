#ifndef ORDERTYPE_H
#define ORDERTYPE_H

/* C interface to the order-type engine. Handles are opaque; every fallible
 * call returns an ot_status and leaves a message for ot_last_error(). Strings
 * returned through char** are owned by the caller (ot_string_free). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OT_API __declspec(dllexport)
#else
#define OT_API __attribute__((visibility("default")))
#endif

typedef enum ot_status {
  OT_OK = 0,
  OT_E_SYNTAX = 1,
  OT_E_ARITY = 2,
  OT_E_UNSUPPORTED = 3,
  OT_E_NO_ENDPOINT = 4,
  OT_E_INVALID_CODE = 5,
  OT_E_INVALID_SAMPLE = 6,
  OT_E_VERIFICATION = 7,
  OT_E_INVALID_ARGUMENT = 8,
  OT_E_INTERNAL = 9
} ot_status;

typedef enum ot_level { OT_FINITE = 0, OT_COUNTABLE = 1 } ot_level;
typedef enum ot_verdict { OT_NOT_EQUAL = 0, OT_EQUAL = 1, OT_UNKNOWN = 2 } ot_verdict;
typedef enum ot_format { OT_FORMAT_CSV = 0, OT_FORMAT_JSON = 1 } ot_format;

typedef struct ot_term ot_term;
typedef struct ot_terms ot_terms;

OT_API const char* ot_version(void);
OT_API uint64_t ot_default_seed(void);
OT_API const char* ot_status_name(ot_status status);
/* Message of the last failed call on this thread ("" if none). */
OT_API const char* ot_last_error(void);
/* Byte offset of the last syntax error on this thread. */
OT_API size_t ot_last_error_offset(void);
OT_API void ot_string_free(char* s);

/* Parses, evaluates cc/fc/mulw/mulf calls and normalizes. */
OT_API ot_status ot_term_parse(const char* text, ot_term** out);
OT_API ot_term* ot_term_clone(const ot_term* t);
OT_API void ot_term_free(ot_term* t);
OT_API ot_status ot_term_string(const ot_term* t, char** out);
/* 1 when the normal forms are identical. */
OT_API int ot_term_same(const ot_term* a, const ot_term* b);

OT_API ot_status ot_condense(const ot_term* t, ot_level level, ot_term** quotient, int* merge_left,
                             int* merge_right);
OT_API ot_status ot_multiply(const ot_term* m, const ot_term* l, ot_level level, ot_term** out);
OT_API ot_status ot_reverse(const ot_term* t, ot_term** out);
OT_API ot_status ot_equal(const ot_term* a, const ot_term* b, ot_verdict* out);
OT_API ot_status ot_right_identity(const ot_term* t, ot_level level, int* out);
OT_API ot_status ot_condenses_to_one(const ot_term* t, ot_level level, int* out);

OT_API ot_terms* ot_terms_new(void);
OT_API void ot_terms_free(ot_terms* list);
OT_API ot_status ot_terms_push(ot_terms* list, const ot_term* t);
OT_API size_t ot_terms_size(const ot_terms* list);
/* Borrowed; valid while the list lives. NULL when out of range. */
OT_API const ot_term* ot_terms_at(const ot_terms* list, size_t index);
/* Every atom and one-operator combination, then random terms to `depth`. */
OT_API ot_status ot_generate(int depth, size_t random_count, uint64_t seed, ot_terms** out);

/* JSON documents, schema 1. */
OT_API ot_status ot_eval_json(const char* expr, char** json);
OT_API ot_status ot_classify_json(const char* expr, char** json);
OT_API ot_status ot_tfae_json(const char* expr, char** json);
OT_API ot_status ot_check_band_json(const ot_terms* sample, const char* description, char** json, int* passed);
OT_API ot_status ot_check_semigroup_json(const ot_terms* sample, const char* description, char** json,
                                         int* passed);
OT_API ot_status ot_table(const ot_terms* generators, ot_level level, ot_format format, char** out);
OT_API ot_status ot_embed_json(const ot_term* t, size_t samples, uint64_t seed, char** json, int* embeddable);
OT_API ot_status ot_oracle_json(const ot_term* t, ot_level level, size_t pairs, uint64_t seed, char** json,
                                int* passed);

#ifdef __cplusplus
}
#endif

#endif
