/* C interface to the rothe library: Grothendieck and Schubert polynomials,
 * Rothe tableaux, balanced labelings and tableau complexes.
 *
 * Every function returns a rothe_status. On failure the message of the most
 * recent error on the calling thread is available from rothe_last_error().
 * Objects returned through out-parameters are owned by the caller and must be
 * released with the matching *_free function.
 */
#ifndef ROTHE_H
#define ROTHE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(ROTHE_BUILDING)
#define ROTHE_API __declspec(dllexport)
#elif defined(_WIN32)
#define ROTHE_API __declspec(dllimport)
#else
#define ROTHE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rothe_status {
  ROTHE_OK = 0,
  ROTHE_ERR_INVALID_ARGUMENT = 1,
  ROTHE_ERR_DUPLICATE_VALUE = 2,
  ROTHE_ERR_OUT_OF_RANGE = 3,
  ROTHE_ERR_METHOD_NOT_APPLICABLE = 4,
  ROTHE_ERR_GROUND_SET_TOO_LARGE = 5,
  ROTHE_ERR_VERIFICATION_FAILED = 6,
  ROTHE_ERR_RESOURCE_CAP = 7,
  ROTHE_ERR_PARSE = 8,
  ROTHE_ERR_INTERNAL = 9
} rothe_status;

typedef enum rothe_format {
  ROTHE_FORMAT_JSON_LINES = 0,
  ROTHE_FORMAT_PRETTY = 1
} rothe_format;

typedef struct rothe_perm rothe_perm;
typedef struct rothe_poly rothe_poly;

/* Receives one output line (without trailing newline). */
typedef void (*rothe_line_fn)(const char *line, void *user);

typedef struct rothe_verify_summary {
  size_t pass;
  size_t fail;
  size_t skip;
} rothe_verify_summary;

/* Bits of the warnings out-parameter of rothe_compute. */
#define ROTHE_WARNING_OUTSIDE_CLASS 1u

/* Message of the last failure on this thread; "" if none. */
ROTHE_API const char *rothe_last_error(void);
ROTHE_API const char *rothe_status_name(rothe_status status);

/* "426315" or "1,4,5,9,6,10,7,8,2,3". */
ROTHE_API rothe_status rothe_perm_parse(const char *text, rothe_perm **out);
ROTHE_API rothe_status rothe_perm_from_word(const unsigned *word, size_t n,
                                            rothe_perm **out);
ROTHE_API void rothe_perm_free(rothe_perm *w);
ROTHE_API size_t rothe_perm_size(const rothe_perm *w);
ROTHE_API unsigned rothe_perm_length(const rothe_perm *w);
/* *out = 1 if w contains pattern, else 0. */
ROTHE_API rothe_status rothe_perm_contains(const rothe_perm *w,
                                           const rothe_perm *pattern, int *out);

/* family: grothendieck-double, grothendieck-single, schubert-double,
 * schubert-single. method: oracle, theorem11, theorem14-limit,
 * theorem14-srt, matsumura321, fgrs, corollary12, corollary13.
 * warnings may be NULL. */
ROTHE_API rothe_status rothe_compute(const rothe_perm *w, const char *family,
                                     const char *method, rothe_poly **out,
                                     unsigned *warnings);
/* Same computation rendered as a document. Free *out with
 * rothe_string_free. */
ROTHE_API rothe_status rothe_compute_document(const rothe_perm *w,
                                              const char *family,
                                              const char *method,
                                              rothe_format format, char **out);

ROTHE_API void rothe_poly_free(rothe_poly *p);
ROTHE_API size_t rothe_poly_term_count(const rothe_poly *p);
/* Monomial notation, e.g. "x1 + y2 - x1*y2". */
ROTHE_API rothe_status rothe_poly_to_string(const rothe_poly *p, char **out);
ROTHE_API rothe_status rothe_poly_equal(const rothe_poly *a,
                                        const rothe_poly *b, int *out);
/* Parses a json-lines document back into its polynomial. */
ROTHE_API rothe_status rothe_document_parse(const char *line, rothe_poly **out);
ROTHE_API void rothe_string_free(char *s);

/* kind: svrt, srt, lsvrt, csbl, faces. Emits one line per object and a
 * trailing count line. count may be NULL. */
ROTHE_API rothe_status rothe_enumerate(const rothe_perm *w, const char *kind,
                                       rothe_format format,
                                       unsigned max_ground_set,
                                       rothe_line_fn emit, void *user,
                                       size_t *count);
ROTHE_API rothe_status rothe_count(const rothe_perm *w, const char *kind,
                                   unsigned max_ground_set, size_t *out);
ROTHE_API rothe_status rothe_count_avoiders(unsigned n,
                                            const rothe_perm *pattern,
                                            uint64_t *out);

/* suite: theorem11, theorem14, matsumura, fgrs, theorem41, kpoly, lemma41,
 * wilf-counts. Returns ROTHE_ERR_VERIFICATION_FAILED if any item fails;
 * the summary is filled in either case. summary may be NULL. */
ROTHE_API rothe_status rothe_verify(unsigned n, const char *suite,
                                    rothe_format format, unsigned jobs,
                                    unsigned max_ground_set, rothe_line_fn emit,
                                    void *user, rothe_verify_summary *summary);

#ifdef __cplusplus
}
#endif

#endif /* ROTHE_H */
