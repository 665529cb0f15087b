/*
 * ulrichtk — exact computational algebra for graded ring presentations:
 * Groebner bases, Hilbert series, multiplicities, Newton polygon
 * irreducibility certificates, and machine-checked non-existence criteria
 * for Ulrich modules.
 *
 * C ABI: opaque handles plus status codes. Every command fills a
 * heap-allocated JSON report (free with ultk_string_free); on error the
 * report is NULL and ultk_last_error() carries a message for the calling
 * thread.
 */
#ifndef ULRICHTK_H
#define ULRICHTK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ultk_status {
  ULTK_OK = 0,            /* computed; every mathematical check passed */
  ULTK_CHECK_FAILED = 1,  /* computed; a mathematical check came out negative */
  ULTK_ERR_PARSE = 2,
  ULTK_ERR_IO = 3,
  ULTK_ERR_ARG = 4,
  ULTK_ERR_BUDGET = 5,    /* configured Groebner budget exceeded */
  ULTK_ERR_INTERNAL = 6
} ultk_status;

/* Loaded ring presentation plus any certificates from the file. */
typedef struct ultk_ring ultk_ring;

const char *ultk_version(void);

/* Message for the most recent failure on this thread; valid until the next
 * ulrichtk call on the same thread. */
const char *ultk_last_error(void);

void ultk_string_free(char *s);

ultk_status ultk_ring_load(const char *path, ultk_ring **out);
ultk_status ultk_ring_from_text(const char *text, ultk_ring **out);
void ultk_ring_free(ultk_ring *ring);

/* Canonical serialization of a loaded presentation. */
ultk_status ultk_ring_serialize(const ultk_ring *ring, char **out);

/* Commands. Each fills *report_json with the full report envelope. A NULL
 * list pointer with count 0 is accepted everywhere a list is optional. */
ultk_status ultk_hilbert(const ultk_ring *ring, char **report_json);
ultk_status ultk_dim(const ultk_ring *ring, char **report_json);
ultk_status ultk_ci_check(const ultk_ring *ring, char **report_json);
ultk_status ultk_length(const ultk_ring *ring, const char *const *extra_gens, size_t n_extra,
                        char **report_json);
ultk_status ultk_multiplicity(const ultk_ring *ring, const char *const *params, size_t n_params,
                              char **report_json);
/* j > 0: single multiplication map S_a (x) S_j -> S_{a+j}. j == 0: the full
 * condition for a <= j <= j_max with the file's module generators. */
ultk_status ultk_surjectivity(const ultk_ring *ring, unsigned long a, unsigned long j,
                              unsigned long j_max, char **report_json);
ultk_status ultk_truncation(const ultk_ring *ring, unsigned long a, unsigned long j_max,
                            char **report_json);
ultk_status ultk_section_cert(const ultk_ring *ring, char **report_json);
ultk_status ultk_verdict(const ultk_ring *ring, unsigned long a, unsigned long j_max,
                         int acknowledge_assumptions, char **report_json);

/* Stateless commands. */
ultk_status ultk_newton(const char *polynomial, const char *var1, const char *var2,
                        char **report_json);
ultk_status ultk_kernel_verify(const char *map_path, char **report_json);
ultk_status ultk_cyclotomic(const char *polynomial_in_t, char **report_json);
ultk_status ultk_corpus_run(const char *corpus_dir, unsigned jobs, int include_experimental,
                            char **report_json);

/* Renders a report produced by any command as human-readable text with the
 * same fields. */
ultk_status ultk_report_to_text(const char *report_json, char **text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ULRICHTK_H */
