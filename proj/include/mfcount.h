/* mfcount — publication-credit counting methods behind a C API.
 *
 * Handles are opaque; every *_free function accepts NULL. Functions that
 * return mfc_status leave their outputs untouched on failure and store a
 * thread-local message retrievable through mfc_last_error(). Exponent
 * parameters k accept any finite value >= 1 or INFINITY (full counting).
 */
#ifndef MFCOUNT_H
#define MFCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MFC_API __declspec(dllexport)
#else
#define MFC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mfc_status {
  MFC_OK = 0,
  MFC_ERR_DOMAIN = 1,     /* argument outside the mathematical domain */
  MFC_ERR_PARSE = 2,      /* malformed input text */
  MFC_ERR_VALIDATION = 3, /* well-formed input breaking a corpus invariant */
  MFC_ERR_IO = 4,         /* file not readable */
  MFC_ERR_USAGE = 5       /* null pointer, unknown name, bad call */
} mfc_status;

MFC_API const char* mfc_status_name(mfc_status status);

/* Message describing the last failure on the calling thread. */
MFC_API const char* mfc_last_error(void);

MFC_API const char* mfc_version(void);

/* ---- author-level credits ------------------------------------------- */

/* Credit of one author of an n-author publication: (1/n)^(1/k). */
MFC_API mfc_status mfc_author_credit(uint64_t n_authors, double k, double* out);

/* Sum of all author credits of one publication: n^((k-1)/k). */
MFC_API mfc_status mfc_article_total(uint64_t n_authors, double k, double* out);

/* Weighted geometric average of the counting extremes 1/n and 1:
 * (1/n)^lambda, lambda in [0, 1]. Equals mfc_author_credit(n, 1/lambda). */
MFC_API mfc_status mfc_geometric_bridge(uint64_t n_authors, double lambda, double* out);

/* The k for which (1/n)^(1/k) equals the weighted arithmetic (resp.
 * harmonic) average of the extremes; depends on n. n >= 2, 0 < lambda <= 1. */
MFC_API mfc_status mfc_solve_k_arithmetic(uint64_t n_authors, double lambda, double* out);
MFC_API mfc_status mfc_solve_k_harmonic(uint64_t n_authors, double lambda, double* out);

typedef enum mfc_mean {
  MFC_MEAN_ARITHMETIC = 0,
  MFC_MEAN_GEOMETRIC = 1,
  MFC_MEAN_HARMONIC = 2
} mfc_mean;

/* Weighted average of strictly positive values; weights lie in [0, 1] with
 * a positive sum. */
MFC_API mfc_status mfc_weighted_mean(mfc_mean kind, const double* values,
                                     const double* weights, size_t n, double* out);

/* ---- corpora ---------------------------------------------------------- */

typedef struct mfc_corpus mfc_corpus;

/* format: "structured" (JSON), "delimited" (publication_id,author_id,
 * institute_id[,role] lines), or NULL / "auto" to detect. */
MFC_API mfc_status mfc_corpus_load(const char* path, const char* format, mfc_corpus** out);
MFC_API mfc_status mfc_corpus_parse(const char* text, const char* format, mfc_corpus** out);

/* Serialized text must be released with mfc_string_free. */
MFC_API mfc_status mfc_corpus_serialize(const mfc_corpus* corpus, const char* format,
                                        char** out);

MFC_API size_t mfc_corpus_publications(const mfc_corpus* corpus);
MFC_API int mfc_corpus_has_institute(const mfc_corpus* corpus, const char* institute);
MFC_API mfc_status mfc_corpus_stats(const mfc_corpus* corpus, size_t* publications,
                                    size_t* authors, size_t* institutes);
MFC_API void mfc_corpus_free(mfc_corpus* corpus);

/* ---- role-weight schemes ---------------------------------------------- */

typedef struct mfc_role_scheme mfc_role_scheme;

/* JSON object mapping "first" / "second" / "middle" / "corresponding" to
 * positive weights (integers, or strings such as "3/2" or "1.5"). Roles not
 * mentioned keep weight 1. */
MFC_API mfc_status mfc_role_scheme_load(const char* path, mfc_role_scheme** out);
MFC_API mfc_status mfc_role_scheme_parse(const char* text, mfc_role_scheme** out);
MFC_API void mfc_role_scheme_free(mfc_role_scheme* scheme);

/* ---- institute-level scores ------------------------------------------- */

/* method: "mfc", "cmfc" or "pmfc". A role scheme (may be NULL) is only
 * accepted with "mfc". */
MFC_API mfc_status mfc_institute_score(const mfc_corpus* corpus, const char* institute,
                                       const char* method, double k,
                                       const mfc_role_scheme* scheme, double* out);

/* ---- report tables ----------------------------------------------------- */

typedef struct mfc_table mfc_table;

/* Per-publication scores plus the corpus total. method additionally accepts
 * "classical" (k ignored). An absent institute yields a zero table with a
 * warning note, not an error. */
MFC_API mfc_status mfc_report_score(const mfc_corpus* corpus, const char* institute,
                                    const char* method, double k,
                                    const mfc_role_scheme* scheme, mfc_table** out);

/* Built-in reference tables 1..3, regenerated from the formulas. */
MFC_API mfc_status mfc_report_reference_table(int which, mfc_table** out);

/* Sampled credit curves for one n: credit against k on [1, k_max] and
 * against the bridge weight lambda on [0, 1]; grid_size >= 2 points each. */
MFC_API mfc_status mfc_report_curves(uint64_t n_authors, size_t grid_size, double k_max,
                                     mfc_table** out);

/* mfc/cmfc/pmfc side by side for each k in ks. */
MFC_API mfc_status mfc_report_compare(const mfc_corpus* corpus, const char* institute,
                                      const double* ks, size_t n_ks, mfc_table** out);

/* Effect of adding authors to one publication's entity counts.
 * action: "uniform" (every entity adds `amount`), "add-entity" (a new
 * entity with `amount` authors joins), or "add-authors" (entity `index`,
 * 0-based, adds `amount`). */
MFC_API mfc_status mfc_report_perturb(const double* counts, size_t n, const char* action,
                                      double amount, size_t index, double k,
                                      mfc_table** out);

/* Lorenz curve vertices of `values`; when `other` is non-NULL both curves
 * plus the majorization verdict. */
MFC_API mfc_status mfc_report_lorenz(const double* values, size_t n_values,
                                     const double* other, size_t n_other, mfc_table** out);

/* format: "plain", "delimited" or "structured". precision >= 0 forces that
 * many decimals on floating-point cells; -1 keeps per-column defaults.
 * Rendered text must be released with mfc_string_free. */
MFC_API mfc_status mfc_table_render(const mfc_table* table, const char* format,
                                    int precision, char** out);

MFC_API size_t mfc_table_rows(const mfc_table* table);
MFC_API size_t mfc_table_cols(const mfc_table* table);
MFC_API void mfc_table_free(mfc_table* table);

MFC_API void mfc_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* MFCOUNT_H */
