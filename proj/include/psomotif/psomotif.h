/*
 * psomotif C API.
 *
 * Every function that can fail returns a pm_status. On failure a message is
 * available from pm_last_error() until the next failing call on the same
 * thread. Handles are opaque; each *_create / *_load has a matching
 * *_destroy. Strings returned through char** are heap-allocated and must be
 * released with pm_string_free().
 */
#ifndef PSOMOTIF_H
#define PSOMOTIF_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef PSOMOTIF_BUILDING
#    define PM_API __declspec(dllexport)
#  else
#    define PM_API __declspec(dllimport)
#  endif
#else
#  define PM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
    PM_OK = 0,
    PM_ERR_CONTRACT = 1,   /* precondition violated, non-finite objective */
    PM_ERR_IO = 2,         /* file missing, unreadable or unwritable */
    PM_ERR_VALIDATION = 3, /* malformed input, bad config value, link error */
    PM_ERR_ARGUMENT = 4,   /* null handle or pointer */
    PM_ERR_INTERNAL = 5
} pm_status;

typedef enum pm_homology {
    PM_HOMOLOGY_IDENTICAL = 0,
    PM_HOMOLOGY_WEAK = 1,
    PM_HOMOLOGY_NONE = 2
} pm_homology;

typedef enum pm_relation {
    PM_RELATION_FULL = 0,
    PM_RELATION_PARTIAL = 1,
    PM_RELATION_DISJOINT = 2
} pm_relation;

typedef struct pm_config pm_config;
typedef struct pm_corpus pm_corpus;

PM_API const char* pm_version(void);
PM_API const char* pm_last_error(void);
PM_API void pm_string_free(char* s);

/* Configuration: key/value pairs using the command-line spelling
 * ("k-rows", "seed", "thresholds" = "0.7,0.65,0.6", ...). */
PM_API pm_status pm_config_create(pm_config** out);
PM_API void pm_config_destroy(pm_config* cfg);
PM_API pm_status pm_config_set(pm_config* cfg, const char* key, const char* value);
PM_API pm_status pm_config_validate(const pm_config* cfg);
PM_API pm_status pm_config_to_json(const pm_config* cfg, char** out_json);

/* Corpus: sequences plus optional structure annotations (NULL to omit).
 * The config supplies window-size and relax-alphabet; it may be NULL. */
PM_API pm_status pm_corpus_load(const char* sequences_path, const char* structures_path,
                                const pm_config* cfg, pm_corpus** out);
PM_API pm_status pm_corpus_parse(const char* sequences_text, const char* structures_text,
                                 const pm_config* cfg, pm_corpus** out);
PM_API void pm_corpus_destroy(pm_corpus* corpus);
PM_API size_t pm_corpus_size(const pm_corpus* corpus);
PM_API int pm_corpus_has_structures(const pm_corpus* corpus);

/* Subcommands. Each writes its artifacts into out_dir. */
PM_API pm_status pm_run_prepare(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir);
PM_API pm_status pm_run_cluster(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir);
PM_API pm_status pm_run_bicluster(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir);
/* groups_path: a clusters.json / biclusters.json report, or NULL to run
 * biclustering first. */
PM_API pm_status pm_run_motifs(const pm_corpus* corpus, const pm_config* cfg, const char* groups_path,
                               const char* out_dir);
PM_API pm_status pm_run_compare(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir);

/* The same reports returned as JSON text instead of files. */
PM_API pm_status pm_cluster_json(const pm_corpus* corpus, const pm_config* cfg, char** out_json);
PM_API pm_status pm_bicluster_json(const pm_corpus* corpus, const pm_config* cfg, char** out_json);
PM_API pm_status pm_compare_json(const pm_corpus* corpus, const pm_config* cfg, char** out_json);

/* Numeric kernels. Matrices are row-major. */
PM_API pm_status pm_cityblock(const double* a, const double* b, size_t n, double* out);
PM_API pm_status pm_msr(const double* matrix, size_t rows, size_t cols, const size_t* row_idx,
                        size_t n_row_idx, const size_t* col_idx, size_t n_col_idx, double* out);
/* freqs: window_size x 3 (H, E, C) frequencies. */
PM_API pm_status pm_structure_similarity(const double* freqs, size_t window_size, double* out);
PM_API pm_homology pm_homology_class(double similarity);
PM_API char pm_map_ss8_to_ss3(char code);
/* saa, motif: amino-acid letter strings, e.g. "AGV" and "ADEGILKTV". */
PM_API pm_status pm_classify_superset(const char* saa, const char* motif, pm_relation* out);

#ifdef __cplusplus
}
#endif

#endif
