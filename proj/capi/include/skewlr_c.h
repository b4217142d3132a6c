/* C interface for the skewlr library.
 *
 * Conventions:
 *   - Every function returns a status code (SKEWLR_OK on success) unless
 *     noted otherwise; outputs are written through pointer arguments.
 *   - On failure, skewlr_last_error() returns a message for the calling
 *     thread; output arguments are left untouched.
 *   - Partitions and compositions are passed as int arrays with explicit
 *     lengths. Strings returned through char** are heap-allocated and must
 *     be released with skewlr_string_free().
 */
#ifndef SKEWLR_C_H
#define SKEWLR_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SKEWLR_OK 0
#define SKEWLR_EINVAL 1
#define SKEWLR_ECOMPUTE 2

typedef struct skewlr_shape skewlr_shape;
typedef struct skewlr_expansion skewlr_expansion;

typedef struct skewlr_options {
  uint64_t node_limit; /* 0 disables the enumeration budget */
  unsigned workers;    /* <= 1 runs single threaded */
} skewlr_options;

/* Message associated with the most recent failure on this thread. */
const char* skewlr_last_error(void);

void skewlr_string_free(char* s);

/* Shapes. Text form is "outer/inner" with comma-separated parts and "-"
 * for the empty partition; a bare "outer" is also accepted on parse. */
int skewlr_shape_parse(const char* text, skewlr_shape** out);
int skewlr_shape_from_parts(const int* outer, size_t outer_len,
                            const int* inner, size_t inner_len,
                            skewlr_shape** out);
int skewlr_staircase_shape(const int* lambda, size_t lambda_len,
                           const int* alpha, size_t alpha_len, int k,
                           skewlr_shape** out);
void skewlr_shape_free(skewlr_shape* shape);
int skewlr_shape_format(const skewlr_shape* shape, char** out);
int skewlr_shape_box_count(const skewlr_shape* shape, int* out);

/* Complement of a partition inside a width x height rectangle, formatted
 * as comma-separated parts ("-" when empty). */
int skewlr_complement(const int* rho, size_t rho_len, int width, int height,
                      char** out);

/* Schur expansions. */
int skewlr_expand(const skewlr_shape* shape, const skewlr_options* opt,
                  skewlr_expansion** out);
void skewlr_expansion_free(skewlr_expansion* e);
int skewlr_expansion_format(const skewlr_expansion* e, int as_json,
                            char** out);
int skewlr_expansion_term_count(const skewlr_expansion* e, size_t* out);
/* Terms are indexed in descending lexicographic order of the partition.
 * The parts pointer stays valid until the expansion is freed. */
int skewlr_expansion_term(const skewlr_expansion* e, size_t index,
                          const int** parts, size_t* parts_len,
                          long long* coeff);

int skewlr_lr_coefficient(const int* outer, size_t outer_len, const int* inner,
                          size_t inner_len, const int* nu, size_t nu_len,
                          const skewlr_options* opt, long long* out);

/* Coefficientwise comparison of two equal-size diagrams.
 * Verdicts: 0 first dominates, 1 second dominates, 2 equal, 3 incomparable.
 * Witness outputs may be NULL; when requested they receive a formatted
 * "partition:coefficient" excess term or NULL when no such term exists. */
#define SKEWLR_CMP_FIRST_DOMINATES 0
#define SKEWLR_CMP_SECOND_DOMINATES 1
#define SKEWLR_CMP_EQUAL 2
#define SKEWLR_CMP_INCOMPARABLE 3
int skewlr_compare(const skewlr_shape* first, const skewlr_shape* second,
                   const skewlr_options* opt, int* verdict,
                   char** first_witness, char** second_witness);

/* Dominance order of the hook family for alpha, h, k.
 * complement_rect_height = 0 uses foundations equal to the hooks themselves;
 * a positive value uses hook complements in the (alpha_len + k) x height
 * rectangle. Nodes are labeled by the hook partitions. */
int skewlr_hasse_dot(const int* alpha, size_t alpha_len, int h, int k,
                     int complement_rect_height, const skewlr_options* opt,
                     char** out);
int skewlr_hasse_json(const int* alpha, size_t alpha_len, int h, int k,
                      int complement_rect_height, const skewlr_options* opt,
                      char** out);

/* Checks every ordered pair of distinct size-h hooks against the predicted
 * relation and reports the outcomes as JSON. Either output may be NULL. */
int skewlr_verify_family(const int* alpha, size_t alpha_len, int h, int k,
                         int complemented, int rect_height,
                         const skewlr_options* opt, char** report_json_out,
                         int* mismatch_count);

#ifdef __cplusplus
}
#endif

#endif /* SKEWLR_C_H */
