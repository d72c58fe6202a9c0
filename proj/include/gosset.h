#ifndef GOSSET_H
#define GOSSET_H

/* C interface to the del Pezzo line / Gosset polytope engine.
 *
 * Every function returns a gosset_status. On failure a message is available
 * from gosset_last_error() on the calling thread until the next call.
 * Text results come back as gosset_string handles owned by the caller. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GOSSET_API __declspec(dllexport)
#elif defined(__GNUC__)
#define GOSSET_API __attribute__((visibility("default")))
#else
#define GOSSET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gosset_status {
  GOSSET_OK = 0,
  GOSSET_ERR_ARGUMENT = 1,  /* null pointer, unknown name, bad range */
  GOSSET_ERR_DOMAIN = 2,    /* input outside a documented precondition */
  GOSSET_ERR_INVARIANT = 3, /* a divisibility or uniqueness claim failed */
  GOSSET_ERR_IO = 4,
  GOSSET_ERR_PARSE = 5,
  GOSSET_ERR_INTERNAL = 6,
  GOSSET_ERR_ABORTED = 7    /* a callback asked to stop */
} gosset_status;

typedef struct gosset_catalog gosset_catalog;
typedef struct gosset_string gosset_string;

/* Returns nonzero to stop the enumeration. */
typedef int (*gosset_line_fn)(const char* line, size_t len, void* user);
typedef void (*gosset_progress_fn)(const char* message, void* user);

GOSSET_API const char* gosset_version(void);
GOSSET_API const char* gosset_last_error(void);
GOSSET_API const char* gosset_status_name(gosset_status status);

GOSSET_API const char* gosset_string_data(const gosset_string* s);
GOSSET_API size_t gosset_string_size(const gosset_string* s);
GOSSET_API void gosset_string_free(gosset_string* s);

/* kind: "lines", "roots", "rulings" or "exceptional"; 3 <= r <= 8. */
GOSSET_API gosset_status gosset_catalog_build(const char* kind, int r, gosset_catalog** out);
/* JSON-lines cache file; the header and every class are re-validated. */
GOSSET_API gosset_status gosset_catalog_load(const char* path, gosset_catalog** out);
GOSSET_API gosset_status gosset_catalog_save(const gosset_catalog* c, const char* path);
GOSSET_API gosset_status gosset_catalog_serialize(const gosset_catalog* c, gosset_string** out);
GOSSET_API void gosset_catalog_free(gosset_catalog* c);
GOSSET_API gosset_status gosset_catalog_size(const gosset_catalog* c, size_t* out);
GOSSET_API gosset_status gosset_catalog_rank(const gosset_catalog* c, int* out);
/* Writes r + 1 coefficients (h, e_1 ... e_r) of class i. */
GOSSET_API gosset_status gosset_catalog_class(const gosset_catalog* c, size_t i, int64_t* coeffs, size_t capacity);
GOSSET_API gosset_status gosset_catalog_pairing(const gosset_catalog* c, size_t i, size_t j, int64_t* out);

/* Published (r-4)_21 subpolytope counts against enumeration, as CSV rows
 * with header "r,polytope,expected,computed,pass". */
GOSSET_API gosset_status gosset_subpolytope_table(int r, unsigned threads, gosset_string** out);
/* JSON summary of the intersection-v graph on the lines of S_r. */
GOSSET_API gosset_status gosset_graph_summary(int r, int v, unsigned threads, gosset_string** out);

GOSSET_API int gosset_inscribed_feasible(int r, int n, int b);
/* One JSON object per A_n^r(b) in lexicographic vertex order. With
 * classify set each object carries "tag" and, when defined, "corner_line"
 * and "companion". At most limit objects when limit is nonzero. */
GOSSET_API gosset_status gosset_inscribed_each(int r, int n, int b, int classify, uint64_t limit,
                                               gosset_line_fn fn, void* user);
GOSSET_API gosset_status gosset_inscribed_count(int r, int n, int b, unsigned threads, uint64_t* out);
/* Distinct centers, sorted, one JSON class per line. */
GOSSET_API gosset_status gosset_inscribed_centers(int r, int n, int b, unsigned threads, gosset_progress_fn progress,
                                                  void* user, gosset_string** lines, uint64_t* count);

/* Seeded samples of A_6^8(1) with their Fano structure and extensions. */
GOSSET_API gosset_status gosset_fano_sample(uint64_t seed, size_t count, gosset_string** out);
/* kind: "3cube" (r = 7 or 8), "4cube" or "obstruction" (r = 8). */
GOSSET_API gosset_status gosset_cubes_sample(const char* kind, int r, uint64_t seed, size_t count,
                                             gosset_string** out);

/* name: SA2S7, SA2S8, SB3S6, SB3S8 or SC4S7. JSON with the system and its
 * design check; *passed is set to 1 when every check holds. */
GOSSET_API gosset_status gosset_steiner(const char* name, unsigned threads, gosset_string** out, int* passed);

/* scope: "tables", "theorems", "steiner" or "all"; r = 0 for every rank;
 * format: "json" or "csv". */
GOSSET_API gosset_status gosset_verify(const char* scope, int r, size_t sample, uint64_t seed, unsigned threads,
                                       const char* format, gosset_progress_fn progress, void* user,
                                       gosset_string** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
