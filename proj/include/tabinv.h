/*
 * tabinv — inverted Young tableaux: enumeration, counting formulas and
 * constructive maps behind a C interface.
 *
 * Conventions:
 *   - Functions returning tabinv_status report failure details through
 *     tabinv_last_error() (thread-local).
 *   - Out-parameters are written only on TABINV_OK unless noted.
 *   - Strings returned through char** are heap-allocated; release them with
 *     tabinv_string_free(). Handles have their matching _free function.
 *   - Shapes parse from comma-separated row lengths ("4,3,2,2"); tableaux
 *     from entries separated by spaces with '/' or newlines between rows
 *     ("1 2 8 / 4 5 6 / 3 7 9").
 *   - workers <= 0 selects single-threaded; budget 0 selects the default
 *     cap of 10^8 generated fillings.
 */

#ifndef TABINV_H
#define TABINV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tabinv_status {
    TABINV_OK = 0,
    TABINV_ERROR_PARSE = 1,
    TABINV_ERROR_INVALID_ARGUMENT = 2,
    TABINV_ERROR_UNSUPPORTED_SHAPE = 3,
    TABINV_ERROR_WRONG_INVERSION_COUNT = 4,
    TABINV_ERROR_INPUT_NOT_STANDARD = 5,
    TABINV_ERROR_SHAPE_MISMATCH = 6,
    TABINV_ERROR_BUDGET_EXCEEDED = 7,
    TABINV_ERROR_DOMAIN = 8,
    TABINV_ERROR_VERIFY_FAILED = 9,
    TABINV_ERROR_INTERNAL = 10
} tabinv_status;

typedef struct tabinv_partition tabinv_partition;
typedef struct tabinv_tableau tabinv_tableau;
typedef struct tabinv_distribution tabinv_distribution;

/* Message for the most recent failing call on this thread; never NULL. */
const char* tabinv_last_error(void);
const char* tabinv_status_name(tabinv_status status);
void tabinv_string_free(char* s);

/* ---- shapes ---------------------------------------------------------- */

tabinv_status tabinv_partition_parse(const char* text, tabinv_partition** out);
void tabinv_partition_free(tabinv_partition* p);
char* tabinv_partition_format(const tabinv_partition* p);
size_t tabinv_partition_rows(const tabinv_partition* p);
uint32_t tabinv_partition_row_length(const tabinv_partition* p, size_t row_1based);
uint64_t tabinv_partition_boxes(const tabinv_partition* p);

uint64_t tabinv_max_inversions(const tabinv_partition* p);
/* Number of standard fillings (hook-length count), as a decimal string. */
tabinv_status tabinv_standard_count(const tabinv_partition* p, char** decimal_out);
/* Number of row-standard fillings, as a decimal string. */
tabinv_status tabinv_total_inverted_count(const tabinv_partition* p, char** decimal_out);
/* JSON array of corner moves: [{"source_row","target_row","shape"},...] */
tabinv_status tabinv_stair_steps(const tabinv_partition* p, char** json_out);

/* ---- tableaux -------------------------------------------------------- */

tabinv_status tabinv_tableau_parse(const char* text, tabinv_tableau** out);
void tabinv_tableau_free(tabinv_tableau* t);
char* tabinv_tableau_format(const tabinv_tableau* t);
tabinv_status tabinv_tableau_shape(const tabinv_tableau* t, tabinv_partition** out);
int tabinv_is_row_standard(const tabinv_tableau* t);
int tabinv_is_column_standard(const tabinv_tableau* t);

/* Inversion pairs of a row-standard tableau, as JSON:
 * {"tableau":"...","count":K,"pairs":[{"small","large","column"},...]} */
tabinv_status tabinv_inversions(const tabinv_tableau* t, char** json_out);
tabinv_status tabinv_inversion_count(const tabinv_tableau* t, uint64_t* count_out);
/* Per-column sort of a row-standard tableau; the result is standard. */
tabinv_status tabinv_standardize(const tabinv_tableau* t, tabinv_tableau** out);
/* The unique filling of p with the maximal number of inversions. */
tabinv_status tabinv_max_inversion_tableau(const tabinv_partition* p, tabinv_tableau** out);

/* ---- enumeration ----------------------------------------------------- */

tabinv_status tabinv_distribution_compute(const tabinv_partition* p, int workers,
                                          uint64_t budget, tabinv_distribution** out);
void tabinv_distribution_free(tabinv_distribution* d);
size_t tabinv_distribution_length(const tabinv_distribution* d); /* max inversions + 1 */
uint64_t tabinv_distribution_count(const tabinv_distribution* d, size_t i);
uint64_t tabinv_distribution_total(const tabinv_distribution* d);
/* format: "text" | "json" | "csv" */
tabinv_status tabinv_distribution_render(const tabinv_distribution* d, const char* format,
                                         char** out);

/* All row-standard fillings whose column sort gives back T, one per line in
 * inline tableau form; count_out may be NULL. T must be standard. */
tabinv_status tabinv_fiber(const tabinv_tableau* T, uint64_t budget, char** lines_out,
                           uint64_t* count_out);

/* Distribution read backwards (top degree first); format as above. */
tabinv_status tabinv_betti_render(const tabinv_partition* p, int workers, uint64_t budget,
                                  const char* format, char** out);

/* ---- constructive maps ----------------------------------------------- */

/* Single-inversion tableau -> standard tableau of a corner-moved shape.
 * trace_json_out may be NULL. */
tabinv_status tabinv_map_phi1(const tabinv_tableau* t, tabinv_tableau** image_out,
                              char** trace_json_out);
/* Standard tableau -> single-inversion tableau of `source`. Pass source =
 * NULL to infer the rectangle from a stair-step shape. */
tabinv_status tabinv_map_phi2(const tabinv_tableau* T, const tabinv_partition* source,
                              tabinv_tableau** image_out, char** trace_json_out);

/* ---- verification ---------------------------------------------------- */

typedef struct tabinv_verify_options {
    const char* shape; /* comma-separated, or NULL */
    int64_t m, n, i;   /* -1 when unset */
    int64_t max_n;     /* sweep bound, -1 for the claim's default */
    int workers;       /* <= 0 for single-threaded */
    uint64_t budget;   /* 0 for the default */
} tabinv_verify_options;

/* Claims: hook, totals, two-row, max-unique, rect-i1, general-i1, m1, m2,
 * lemma, tail. Writes the JSON report even when the claim fails; returns
 * TABINV_ERROR_VERIFY_FAILED on any mismatch inside the claim's hypothesis. */
tabinv_status tabinv_verify(const char* claim, const tabinv_verify_options* opts,
                            char** report_json_out);

/* Regenerates the four reference tables by enumeration and compares them
 * cell by cell with the embedded fixtures. rendered_out receives the
 * recomputed tables in the requested format; diff_out (may be NULL) receives
 * the mismatches. Returns TABINV_ERROR_VERIFY_FAILED when any cell differs. */
tabinv_status tabinv_appendix(int workers, uint64_t budget, const char* format,
                              char** rendered_out, char** diff_out);

#ifdef __cplusplus
}
#endif

#endif /* TABINV_H */
