#include "psomotif/psomotif.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "psomotif/config.hpp"
#include "psomotif/error.hpp"
#include "psomotif/motif.hpp"
#include "psomotif/pipeline.hpp"
#include "psomotif/seqio.hpp"

using namespace psomotif;

struct pm_config {
    RunConfig cfg;
};

struct pm_corpus {
    Corpus corpus;
};

namespace {

thread_local std::string g_last_error;

pm_status fail(pm_status status, const char* what) {
    g_last_error = what;
    return status;
}

template <class F>
pm_status guarded(F&& body) {
    try {
        body();
        return PM_OK;
    } catch (const IoError& e) {
        return fail(PM_ERR_IO, e.what());
    } catch (const ValidationError& e) {
        return fail(PM_ERR_VALIDATION, e.what());
    } catch (const ContractViolation& e) {
        return fail(PM_ERR_CONTRACT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PM_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const RunConfig& config_or_default(const pm_config* cfg) {
    static const RunConfig defaults;
    return cfg ? cfg->cfg : defaults;
}

} // namespace

extern "C" {

const char* pm_version(void) {
    static const std::string v = version_string();
    return v.c_str();
}

const char* pm_last_error(void) { return g_last_error.c_str(); }

void pm_string_free(char* s) { std::free(s); }

pm_status pm_config_create(pm_config** out) {
    if (!out) return fail(PM_ERR_ARGUMENT, "pm_config_create: null output pointer");
    return guarded([&] { *out = new pm_config{}; });
}

void pm_config_destroy(pm_config* cfg) { delete cfg; }

pm_status pm_config_set(pm_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(PM_ERR_ARGUMENT, "pm_config_set: null argument");
    return guarded([&] { cfg->cfg.set(key, value); });
}

pm_status pm_config_validate(const pm_config* cfg) {
    if (!cfg) return fail(PM_ERR_ARGUMENT, "pm_config_validate: null config");
    return guarded([&] { cfg->cfg.validate(); });
}

pm_status pm_config_to_json(const pm_config* cfg, char** out_json) {
    if (!cfg || !out_json) return fail(PM_ERR_ARGUMENT, "pm_config_to_json: null argument");
    return guarded([&] { *out_json = dup_string(cfg->cfg.to_json().dump(2)); });
}

pm_status pm_corpus_load(const char* sequences_path, const char* structures_path, const pm_config* cfg,
                         pm_corpus** out) {
    if (!sequences_path || !out) return fail(PM_ERR_ARGUMENT, "pm_corpus_load: null argument");
    return guarded([&] {
        std::optional<std::filesystem::path> ss;
        if (structures_path) ss = structures_path;
        auto corpus = load_corpus(sequences_path, ss, config_or_default(cfg).parse_options());
        *out = new pm_corpus{std::move(corpus)};
    });
}

pm_status pm_corpus_parse(const char* sequences_text, const char* structures_text, const pm_config* cfg,
                          pm_corpus** out) {
    if (!sequences_text || !out) return fail(PM_ERR_ARGUMENT, "pm_corpus_parse: null argument");
    return guarded([&] {
        std::optional<std::string_view> ss;
        if (structures_text) ss = structures_text;
        *out = new pm_corpus{parse_corpus(sequences_text, ss, config_or_default(cfg).parse_options())};
    });
}

void pm_corpus_destroy(pm_corpus* corpus) { delete corpus; }

size_t pm_corpus_size(const pm_corpus* corpus) { return corpus ? corpus->corpus.size() : 0; }

int pm_corpus_has_structures(const pm_corpus* corpus) {
    return corpus && corpus->corpus.has_structures() ? 1 : 0;
}

#define PM_RUN_CHECK(name)                                                                   \
    if (!corpus || !out_dir) return fail(PM_ERR_ARGUMENT, name ": null argument")

pm_status pm_run_prepare(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir) {
    PM_RUN_CHECK("pm_run_prepare");
    return guarded([&] { write_prepare(corpus->corpus, config_or_default(cfg), out_dir); });
}

pm_status pm_run_cluster(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir) {
    PM_RUN_CHECK("pm_run_cluster");
    return guarded([&] { write_cluster(corpus->corpus, config_or_default(cfg), out_dir); });
}

pm_status pm_run_bicluster(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir) {
    PM_RUN_CHECK("pm_run_bicluster");
    return guarded([&] { write_bicluster(corpus->corpus, config_or_default(cfg), out_dir); });
}

pm_status pm_run_motifs(const pm_corpus* corpus, const pm_config* cfg, const char* groups_path,
                        const char* out_dir) {
    PM_RUN_CHECK("pm_run_motifs");
    return guarded([&] {
        std::optional<std::filesystem::path> groups;
        if (groups_path) groups = groups_path;
        write_motifs(corpus->corpus, config_or_default(cfg), groups, out_dir);
    });
}

pm_status pm_run_compare(const pm_corpus* corpus, const pm_config* cfg, const char* out_dir) {
    PM_RUN_CHECK("pm_run_compare");
    return guarded([&] { write_compare(corpus->corpus, config_or_default(cfg), out_dir); });
}

#undef PM_RUN_CHECK

pm_status pm_cluster_json(const pm_corpus* corpus, const pm_config* cfg, char** out_json) {
    if (!corpus || !out_json) return fail(PM_ERR_ARGUMENT, "pm_cluster_json: null argument");
    return guarded([&] {
        const auto& c = config_or_default(cfg);
        *out_json = dup_string(clusters_json(corpus->corpus, run_clustering(corpus->corpus, c), c).dump(2));
    });
}

pm_status pm_bicluster_json(const pm_corpus* corpus, const pm_config* cfg, char** out_json) {
    if (!corpus || !out_json) return fail(PM_ERR_ARGUMENT, "pm_bicluster_json: null argument");
    return guarded([&] {
        const auto& c = config_or_default(cfg);
        *out_json = dup_string(biclusters_json(corpus->corpus, run_biclustering(corpus->corpus, c), c).dump(2));
    });
}

pm_status pm_compare_json(const pm_corpus* corpus, const pm_config* cfg, char** out_json) {
    if (!corpus || !out_json) return fail(PM_ERR_ARGUMENT, "pm_compare_json: null argument");
    return guarded([&] {
        const auto& c = config_or_default(cfg);
        *out_json = dup_string(comparison_json(compare_pipelines(corpus->corpus, c), c).dump(2));
    });
}

pm_status pm_cityblock(const double* a, const double* b, size_t n, double* out) {
    if ((n > 0 && (!a || !b)) || !out) return fail(PM_ERR_ARGUMENT, "pm_cityblock: null argument");
    return guarded([&] { *out = cityblock(std::span(a, n), std::span(b, n)); });
}

pm_status pm_msr(const double* matrix, size_t rows, size_t cols, const size_t* row_idx, size_t n_row_idx,
                 const size_t* col_idx, size_t n_col_idx, double* out) {
    if (!matrix || !row_idx || !col_idx || !out) return fail(PM_ERR_ARGUMENT, "pm_msr: null argument");
    return guarded([&] {
        Matrix m(rows, cols, std::vector<double>(matrix, matrix + rows * cols));
        *out = msr(m, std::span(row_idx, n_row_idx), std::span(col_idx, n_col_idx));
    });
}

pm_status pm_structure_similarity(const double* freqs, size_t window_size, double* out) {
    if (!freqs || !out) return fail(PM_ERR_ARGUMENT, "pm_structure_similarity: null argument");
    return guarded([&] {
        StructureProfile p;
        p.n_segments = 1;
        for (size_t i = 0; i < window_size; ++i) {
            std::array<double, 3> row{freqs[3 * i], freqs[3 * i + 1], freqs[3 * i + 2]};
            double sum = row[0] + row[1] + row[2];
            require(row[0] >= 0 && row[1] >= 0 && row[2] >= 0 && std::abs(sum - 1.0) <= 1e-9,
                    "structure profile rows must be frequencies summing to 1");
            p.freqs.push_back(row);
        }
        *out = structure_similarity(p);
    });
}

pm_homology pm_homology_class(double similarity) {
    switch (homology_class(similarity)) {
    case Homology::identical: return PM_HOMOLOGY_IDENTICAL;
    case Homology::weak: return PM_HOMOLOGY_WEAK;
    case Homology::none: break;
    }
    return PM_HOMOLOGY_NONE;
}

char pm_map_ss8_to_ss3(char code) { return map_ss8_to_ss3(code); }

pm_status pm_classify_superset(const char* saa, const char* motif, pm_relation* out) {
    if (!saa || !motif || !out) return fail(PM_ERR_ARGUMENT, "pm_classify_superset: null argument");
    return guarded([&] {
        switch (classify_superset(parse_amino_set(saa), parse_amino_set(motif))) {
        case SupersetRelation::full: *out = PM_RELATION_FULL; break;
        case SupersetRelation::partial: *out = PM_RELATION_PARTIAL; break;
        case SupersetRelation::disjoint: *out = PM_RELATION_DISJOINT; break;
        }
    });
}

} // extern "C"
