#ifndef SKEW_SKEW_H
#define SKEW_SKEW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SKW_API __declspec(dllexport)
#else
#define SKW_API __attribute__((visibility("default")))
#endif

#define SKW_API_VERSION 1

typedef struct skw_presentation skw_presentation;

typedef enum skw_status {
  SKW_OK = 0,
  SKW_ERR_PARSE = 1,
  SKW_ERR_INVALID_ARGUMENT = 2,
  SKW_ERR_PRECONDITION = 3,
  SKW_ERR_BUDGET = 4,
  SKW_ERR_IO = 5,
  SKW_ERR_INTERNAL = 6
} skw_status;

typedef enum skw_overall {
  SKW_VERIFIED = 0,
  SKW_VIOLATED = 1,
  SKW_BUDGET_EXHAUSTED = 2
} skw_overall;

/* Negative numeric fields mean "use the default". */
typedef struct skw_analyze_options {
  int max_degree;
  int witness_bound;
  int n_max;
  const char* check; /* NULL or "" runs every verifier */
  int use_environment; /* read SKW_MAX_DEGREE / SKW_WITNESS_BOUND before applying fields */
} skw_analyze_options;

SKW_API int skw_api_version(void);
SKW_API void skw_analyze_options_init(skw_analyze_options* options);

SKW_API skw_status skw_presentation_parse(const char* text, skw_presentation** out);
/* A file path, or "builtin:<key>" for the corpus. */
SKW_API skw_status skw_presentation_load(const char* source, skw_presentation** out);
SKW_API skw_status skw_presentation_builtin(const char* key, skw_presentation** out);
SKW_API void skw_presentation_free(skw_presentation* p);
SKW_API size_t skw_presentation_generator_count(const skw_presentation* p);

/* Canonical form of a word such as "x1 x2^3 x4" and the size of its class. */
SKW_API skw_status skw_canonical(const skw_presentation* p, const char* word, char** canonical,
                                 size_t* class_size);

/* Full report as JSON; `overall` (may be NULL) receives an skw_overall value. */
SKW_API skw_status skw_analyze(const skw_presentation* p, const skw_analyze_options* options,
                               char** json, int* overall);

SKW_API skw_status skw_corpus_json(char** json);

SKW_API void skw_string_free(char* s);

/* Message for the last failing call on this thread; empty if none. */
SKW_API const char* skw_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
