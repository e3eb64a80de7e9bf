#ifndef CUTGROUP_CUTGROUP_H
#define CUTGROUP_CUTGROUP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cg_group cg_group;

typedef enum cg_status {
  CG_OK = 0,
  CG_INVALID_ARGUMENT = 1,
  CG_DEGREE_MISMATCH = 2,
  CG_NOT_A_PERMUTATION = 3,
  CG_CAP_EXCEEDED = 4,
  CG_NOT_A_MEMBER = 5,
  CG_NOT_NORMAL = 6,
  CG_NO_DIXON_PRIME = 7,
  CG_SPLITTING_FAILURE = 8,
  CG_LIFTING_FAILURE = 9,
  CG_OVERFLOW = 10,
  CG_PARSE_ERROR = 11,
  CG_IO_ERROR = 12,
  CG_INTERNAL = 13,
  CG_UNKNOWN_BUILTIN = 14,
  CG_OUT_OF_MEMORY = 15
} cg_status;

typedef enum cg_format { CG_FORMAT_JSON = 0, CG_FORMAT_TEXT = 1 } cg_format;

enum {
  CG_SUITE_THEOREM = 1,
  CG_SUITE_TRICHOTOMY = 2,
  CG_SUITE_PROOF = 4,
  CG_SUITE_EQUIVALENCE = 8,
  CG_SUITE_ALL = 15
};

typedef struct cg_verify_options {
  unsigned suites;
  uint64_t max_order; /* 0 means no limit */
  uint64_t table_cap;
  unsigned jobs;
  int timings;
  int enforce_hypotheses; /* 0 runs proof steps even when their hypotheses fail */
} cg_verify_options;

/* Message of the last failure on the calling thread; empty after success. */
CG_API const char* cg_last_error(void);
CG_API const char* cg_status_name(cg_status status);

/* Strings returned through char** out-parameters are released with cg_string_free. */
CG_API void cg_string_free(char* s);

/* cycles[i] is one generator in cycle notation on points 0..degree-1, e.g. "(0 1 2)(3 4)". */
CG_API cg_status cg_group_from_generators(size_t degree, const char* const* cycles, size_t count,
                                          const char* name, cg_group** out);
CG_API cg_status cg_group_from_json(const char* text, cg_group** out);
CG_API cg_status cg_group_load(const char* path, cg_group** out);
CG_API cg_status cg_group_builtin(const char* name, cg_group** out);
CG_API void cg_group_free(cg_group* group);

CG_API uint64_t cg_group_order(const cg_group* group);
CG_API size_t cg_group_degree(const cg_group* group);
CG_API const char* cg_group_name(const cg_group* group);

/* witness_k receives the least failing unit, or 0 when the group is cut. Either pointer may be NULL. */
CG_API cg_status cg_group_is_cut(const cg_group* group, int* is_cut, uint64_t* witness_k);
CG_API cg_status cg_group_is_rational(const cg_group* group, int* is_rational);

CG_API cg_status cg_group_analyze(const cg_group* group, cg_format format, char** out);
CG_API cg_status cg_group_chartable(const cg_group* group, cg_format format, char** out);

CG_API void cg_verify_options_init(cg_verify_options* options);
CG_API cg_status cg_suite_from_name(const char* name, unsigned* suite);
/* passed is set to 1 when no check failed and no group raised an error. */
CG_API cg_status cg_verify_corpus(const cg_verify_options* options, cg_format format, char** report, int* passed);
CG_API cg_status cg_verify_group(const cg_group* group, const cg_verify_options* options, cg_format format,
                                 char** report, int* passed);

CG_API cg_status cg_corpus_list(cg_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
