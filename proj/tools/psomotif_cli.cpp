// psomotif command-line front end. Parses flags and an optional key=value
// config file, forwards them to the C API and maps status codes to exit
// codes: 1 contract violation, 2 I/O, 3 validation, 64 usage.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psomotif/psomotif.h"

namespace {

constexpr int kExitUsage = 64;

int exit_code(pm_status s) {
    switch (s) {
    case PM_OK: return 0;
    case PM_ERR_IO: return 2;
    case PM_ERR_VALIDATION: return 3;
    default: return 1;
    }
}

struct ConfigDeleter {
    void operator()(pm_config* c) const { pm_config_destroy(c); }
};
struct CorpusDeleter {
    void operator()(pm_corpus* c) const { pm_corpus_destroy(c); }
};

// A flag or option forwarded to pm_config_set under `key`.
struct Forwarded {
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
    bool is_flag = false;
    bool flag_value = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Protein sequence motif extraction with PSO k-means clustering and binary-PSO biclustering"};
    app.set_version_flag("--version", std::string(pm_version()));
    app.set_config("--config", "", "Key/value config file; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir = ".";
    app.add_option("-o,--out", out_dir, "Output directory")->capture_default_str();

    // Options forwarded verbatim to the library configuration.
    const std::vector<std::pair<std::string, std::string>> options = {
        {"sequences", "Sequence file ('>'-records)"},
        {"structures", "Secondary-structure file (>id / 8-class string pairs)"},
        {"window-size", "Residues per window (default 9)"},
        {"window-mode", "reshape | sliding"},
        {"normalization", "Row normalization for biclustering: mean | range | mode"},
        {"distance", "cityblock | euclidean"},
        {"engine", "Clustering engine: kmeans | pso-kmeans"},
        {"k", "Number of clusters"},
        {"kmeans-max-iter", "Lloyd iteration limit"},
        {"centroid-update", "mean | median"},
        {"kmeans-init", "plusplus | sample | balanced"},
        {"particle-init", "How PSO particles pick their initial items: sample | plusplus"},
        {"particles", "Swarm size for PSO k-means (<= 100)"},
        {"iterations", "PSO k-means iterations"},
        {"inertia", "Inertia weight w"},
        {"c1", "Cognitive coefficient"},
        {"c2", "Social coefficient"},
        {"v-max", "Uniform velocity clamp (default: fraction of data range)"},
        {"v-max-fraction", "Velocity clamp as a fraction of each dimension's range"},
        {"patience", "Stop after this many non-improving iterations (0 = off)"},
        {"k-rows", "Row clusters used to seed biclustering"},
        {"k-cols", "Column clusters used to seed biclustering"},
        {"bicluster-particles", "Binary swarm size (0 = one per seed)"},
        {"bicluster-iterations", "Binary PSO iterations"},
        {"bicluster-inertia", "Binary PSO inertia weight (default 0.95)"},
        {"lambda", "Volume reward weight (default 0.1 x full-matrix MSR)"},
        {"velocity-clamp", "Binary PSO velocity clamp"},
        {"min-rows", "Smallest bicluster row count kept by the repair step"},
        {"min-cols", "Smallest bicluster column count kept by the repair step"},
        {"thresholds", "Homology tally thresholds, descending, comma separated"},
        {"saa-threshold", "Significant amino-acid frequency threshold"},
        {"seed", "Random seed"},
    };
    const std::vector<std::pair<std::string, std::string>> flags = {
        {"relax-alphabet", "Map B/Z/X/U to D/E/A/C instead of rejecting them"},
        {"refine", "Apply one Lloyd pass to the PSO k-means result"},
        {"trace", "Write the per-iteration gbest trace as trace.csv"},
    };

    // Options bind into fwd's elements, so it must not reallocate.
    std::vector<Forwarded> fwd;
    fwd.reserve(options.size() + flags.size());
    for (const auto& [key, help] : options) {
        fwd.push_back({key, {}, nullptr, false, false});
        fwd.back().option = app.add_option("--" + key, fwd.back().value, help);
    }
    for (const auto& [key, help] : flags) {
        fwd.push_back({key, {}, nullptr, true, false});
        fwd.back().option = app.add_flag("--" + key, fwd.back().flag_value, help);
    }
    bool no_logo_correction = false;
    auto* no_corr = app.add_flag("--no-logo-correction", no_logo_correction,
                                 "Disable the small-sample correction in logo bits");

    auto* prepare = app.add_subcommand("prepare", "Write frequency windows and the normalized matrix");
    auto* cluster = app.add_subcommand("cluster", "Cluster frequency windows (k-means or PSO k-means)");
    auto* bicluster = app.add_subcommand("bicluster", "Bicluster the normalized matrix with binary PSO");
    auto* motifs = app.add_subcommand("motifs", "Significant amino acids, motif classification and logos");
    auto* compare = app.add_subcommand("compare", "Structure-homology comparison of clusters and biclusters");
    std::string groups_file;
    motifs->add_option("--from", groups_file, "clusters.json or biclusters.json to report on");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    pm_config* raw_cfg = nullptr;
    if (pm_config_create(&raw_cfg) != PM_OK) {
        std::cerr << "error: " << pm_last_error() << '\n';
        return 1;
    }
    std::unique_ptr<pm_config, ConfigDeleter> cfg(raw_cfg);

    for (const auto& f : fwd) {
        if (f.option->count() == 0) continue;
        std::string value = f.is_flag ? (f.flag_value ? "true" : "false") : f.value;
        if (auto s = pm_config_set(cfg.get(), f.key.c_str(), value.c_str()); s != PM_OK) {
            std::cerr << "error: " << pm_last_error() << '\n';
            return exit_code(s);
        }
    }
    if (no_corr->count() > 0 && no_logo_correction) pm_config_set(cfg.get(), "logo-correction", "false");

    if (auto s = pm_config_validate(cfg.get()); s != PM_OK) {
        std::cerr << "error: " << pm_last_error() << '\n';
        return exit_code(s);
    }

    const auto& seq_opt = fwd.front();
    if (seq_opt.option->count() == 0) {
        std::cerr << "error: --sequences is required\n\n" << app.help();
        return kExitUsage;
    }
    const auto& ss_opt = fwd[1];
    const char* ss_path = ss_opt.option->count() > 0 ? ss_opt.value.c_str() : nullptr;

    pm_corpus* raw_corpus = nullptr;
    if (auto s = pm_corpus_load(seq_opt.value.c_str(), ss_path, cfg.get(), &raw_corpus); s != PM_OK) {
        std::cerr << "error: " << pm_last_error() << '\n';
        return exit_code(s);
    }
    std::unique_ptr<pm_corpus, CorpusDeleter> corpus(raw_corpus);

    pm_status status = PM_OK;
    if (*prepare)
        status = pm_run_prepare(corpus.get(), cfg.get(), out_dir.c_str());
    else if (*cluster)
        status = pm_run_cluster(corpus.get(), cfg.get(), out_dir.c_str());
    else if (*bicluster)
        status = pm_run_bicluster(corpus.get(), cfg.get(), out_dir.c_str());
    else if (*motifs)
        status = pm_run_motifs(corpus.get(), cfg.get(), groups_file.empty() ? nullptr : groups_file.c_str(),
                               out_dir.c_str());
    else if (*compare)
        status = pm_run_compare(corpus.get(), cfg.get(), out_dir.c_str());

    if (status != PM_OK) {
        std::cerr << "error: " << pm_last_error() << '\n';
        return exit_code(status);
    }
    return 0;
}
