/*
 * C interface to the scsort library.
 *
 * Functions that can fail return an scs_status. Results come back through opaque
 * handles owned by the caller and released with the matching scs_*_free.
 * Strings returned by accessors are owned by the handle and stay valid until
 * it is freed. On failure scs_last_error() describes the problem for the
 * calling thread.
 *
 * Permutations cross the boundary in the text format: compact digits
 * ("52413") for n <= 9, or entries separated by spaces/commas.
 */
#ifndef SCSORT_SCSORT_H
#define SCSORT_SCSORT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SCS_API __declspec(dllexport)
#else
#  define SCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scs_status {
  SCS_OK = 0,
  SCS_ERR_INVALID_INPUT = 1,
  SCS_ERR_RESOURCE_LIMIT = 2,
  SCS_ERR_NULL_ARGUMENT = 3,
  SCS_ERR_OUT_OF_RANGE = 4,
  SCS_ERR_INTERNAL = 5
} scs_status;

typedef enum scs_event_kind {
  SCS_EVENT_PUSH = 0,
  SCS_EVENT_SIGMA_POP = 1,
  SCS_EVENT_DRAIN_POP = 2
} scs_event_kind;

/* Enumeration flags. Pruning is on unless SCS_NO_PRUNE is given. */
enum {
  SCS_NO_PRUNE = 1u << 0,
  SCS_FORCE = 1u << 1,
  SCS_WITH_LIST = 1u << 2
};

typedef struct scs_trace scs_trace;
typedef struct scs_report scs_report;
typedef struct scs_perm_list scs_perm_list;
typedef struct scs_spectrum scs_spectrum;
typedef struct scs_claims scs_claims;

SCS_API const char* scs_version(void);
SCS_API const char* scs_last_error(void);
SCS_API const char* scs_status_name(scs_status status);

/* Canonical re-serialization of a permutation; validates the text. */
SCS_API scs_status scs_perm_normalize(const char* perm, scs_perm_list** out);

/* ---- machine ---- */
SCS_API scs_status scs_map(const char* sigma, const char* perm, scs_trace** out);
SCS_API void scs_trace_free(scs_trace* trace);
SCS_API const char* scs_trace_output(const scs_trace* trace);
SCS_API int scs_trace_cro(const scs_trace* trace);
SCS_API size_t scs_trace_event_count(const scs_trace* trace);
SCS_API scs_status scs_trace_event(const scs_trace* trace, size_t index, scs_event_kind* kind,
                                   int* value, int* step);
/* PUSH/POP_SIGMA/POP_DRAIN lines followed by OUTPUT and CRO lines. */
SCS_API const char* scs_trace_text(const scs_trace* trace);
SCS_API const char* scs_trace_json(const scs_trace* trace);
/* Combination after `after_pops` pops, written to `entries` (capacity `cap`). */
SCS_API scs_status scs_trace_combination(const scs_trace* trace, int after_pops, int* entries,
                                         size_t cap, size_t* len);

/* ---- fertility ---- */
SCS_API scs_status scs_fertility(const char* sigma, const char* perm, unsigned flags,
                                 scs_report** out);
SCS_API void scs_report_free(scs_report* report);
SCS_API uint64_t scs_report_count(const scs_report* report);
/* NULL unless the report was built with SCS_WITH_LIST. Borrowed. */
SCS_API const scs_perm_list* scs_report_preimages(const scs_report* report);
SCS_API const char* scs_report_text(const scs_report* report);
SCS_API const char* scs_report_json(const scs_report* report);

/* ---- permutation lists ---- */
SCS_API void scs_perm_list_free(scs_perm_list* list);
SCS_API size_t scs_perm_list_size(const scs_perm_list* list);
SCS_API const char* scs_perm_list_at(const scs_perm_list* list, size_t index);

/* ---- constructions ---- */
SCS_API scs_status scs_construct(const char* sigma, int n, scs_perm_list** out);
SCS_API scs_status scs_construct_preimages(const char* sigma, int n, scs_perm_list** out);
SCS_API scs_status scs_small_witness(const char* sigma, int fertility, scs_perm_list** out);
SCS_API scs_status scs_family_min_n(const char* sigma, int* min_n);

/* ---- spectrum ---- */
SCS_API scs_status scs_spectrum_compute(const char* sigma, int n, unsigned flags,
                                        scs_spectrum** out);
SCS_API void scs_spectrum_free(scs_spectrum* spectrum);
SCS_API uint64_t scs_spectrum_total(const scs_spectrum* spectrum);
SCS_API scs_status scs_spectrum_fertility_of(const scs_spectrum* spectrum, const char* perm,
                                             uint64_t* fertility);
/* Rendered lazily on first access. */
SCS_API const char* scs_spectrum_counts_csv(scs_spectrum* spectrum);
SCS_API const char* scs_spectrum_histogram_csv(scs_spectrum* spectrum);
SCS_API const char* scs_spectrum_json(scs_spectrum* spectrum);
SCS_API const char* scs_spectrum_text(scs_spectrum* spectrum);

/* ---- verification ---- */
/* `claims` is a comma-separated id list, "all", or NULL for all. */
SCS_API scs_status scs_verify(int max_n, const char* claims, scs_claims** out);
SCS_API void scs_claims_free(scs_claims* claims);
SCS_API size_t scs_claims_size(const scs_claims* claims);
SCS_API const char* scs_claims_id(const scs_claims* claims, size_t index);
SCS_API int scs_claims_passed(const scs_claims* claims, size_t index);
SCS_API int scs_claims_all_passed(const scs_claims* claims);
SCS_API const char* scs_claims_text(const scs_claims* claims);
SCS_API const char* scs_claims_json(const scs_claims* claims);
/* Comma-separated list of every known claim id. */
SCS_API const char* scs_claim_ids(void);

#ifdef __cplusplus
}
#endif

#endif /* SCSORT_SCSORT_H */
