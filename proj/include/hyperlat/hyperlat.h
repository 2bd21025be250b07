/* C interface to the hyperlat library.
 *
 * Every function returns an hl_status. On failure the message is available
 * from hl_last_error() (per thread, valid until the next call on that thread).
 * Strings returned through char** are owned by the caller and released with
 * hl_string_free; maps with hl_map_free.
 */
#ifndef HYPERLAT_H
#define HYPERLAT_H

#include <stddef.h>

#if defined(_WIN32)
#define HL_API __declspec(dllexport)
#else
#define HL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_DOMAIN_ERROR = 1,     /* mathematically invalid input */
    HL_PARSE_ERROR = 2,      /* malformed text, file or name */
    HL_OVERFLOW = 3,         /* exact arithmetic left int64 */
    HL_BUDGET_EXCEEDED = 4,  /* enumeration larger than the budget */
    HL_INVALID_ARGUMENT = 5, /* null pointer or out-of-range argument */
    HL_INTERNAL_ERROR = 6
} hl_status;

typedef struct hl_map hl_map;

HL_API const char* hl_version(void);
HL_API const char* hl_last_error(void);
HL_API const char* hl_status_name(hl_status status);
HL_API void hl_string_free(char* s);

/* Branch data. problem is "E", "G", "Eprime" or "Gprime"; format "csv" or
 * "markdown". m1 < 0 pools every block of the problem. */
HL_API hl_status hl_enum_table(const char* problem, int m1, int n1, int n2, int min_fibers, const char* format,
                               unsigned jobs, char** out);
/* Checks a published table (CSV with m1, n1, [n2,] k1.., [dim] columns)
 * against the enumeration. *clean is set to 1 when nothing is off. */
HL_API hl_status hl_enum_check(const char* problem, const char* reference_csv, char** report, int* clean);

/* Surfaces. family is "eis-deg2", "eis-deg3" or "gauss-deg2". */
HL_API hl_status hl_build(const char* family, const char* point, int subdivide, hl_map** out);
HL_API hl_status hl_map_from_json(const char* text, hl_map** out);
HL_API hl_status hl_map_to_json(const hl_map* map, char** out);
HL_API void hl_map_free(hl_map* map);

HL_API size_t hl_map_darts(const hl_map* map);
HL_API int hl_map_face_size(const hl_map* map);
HL_API hl_status hl_map_counts(const hl_map* map, size_t* vertices, size_t* edges, size_t* faces);

HL_API hl_status hl_map_subdivide(const hl_map* map, int k, hl_map** out);
/* DOT of the dual modular graph; triangulations only. */
HL_API hl_status hl_map_dual_dot(const hl_map* map, char** out);
/* *ok is 1 for a connected non-negatively curved sphere passing Gauss-Bonnet. */
HL_API hl_status hl_map_verify(const hl_map* map, int json, char** report, int* ok);
HL_API hl_status hl_map_isomorphic(const hl_map* a, const hl_map* b, int* result);

/* Canonical representative, witnesses and cell count of a lattice point. */
HL_API hl_status hl_reduce(const char* family, const char* point, int json, char** report);

/* Series of isomer counts for 1..max_cells as CSV; crosscheck adds the
 * small-map comparison for n up to 8 and sets *all_agree (may be null). */
HL_API hl_status hl_count_series(const char* family, int max_cells, int crosscheck, unsigned jobs, char** csv,
                                 int* all_agree);
HL_API int hl_count_budget(void);

#ifdef __cplusplus
}
#endif

#endif
