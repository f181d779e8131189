#include "doctest.h"

#include <filesystem>

#include "psomotif/config.hpp"
#include "psomotif/error.hpp"
#include "psomotif/pipeline.hpp"
#include "synthetic.hpp"

using namespace psomotif;
namespace fs = std::filesystem;

namespace {

Corpus sample_corpus() {
    return load_corpus(PSOMOTIF_SAMPLE_DIR "/sequences.fasta", fs::path(PSOMOTIF_SAMPLE_DIR "/structures.ss"));
}

RunConfig quick_config(std::uint64_t seed) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.iterations = 30;
    cfg.bicluster_iterations = 30;
    return cfg;
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("psomotif_unit_" + name);
    fs::remove_all(p);
    return p;
}

} // namespace

TEST_CASE("config keys accept dashes or underscores") {
    RunConfig cfg;
    cfg.set("k_rows", "3");
    cfg.set("window-size", "9");
    cfg.set("thresholds", "0.8, 0.6");
    cfg.set("lambda", "0.25");
    cfg.set("engine", "kmeans");
    CHECK(cfg.k_rows == 3);
    CHECK(cfg.thresholds == std::vector<double>{0.8, 0.6});
    CHECK(cfg.lambda == 0.25);
    CHECK(cfg.engine == Engine::kmeans);
    CHECK_THROWS_AS(cfg.set("no-such-key", "1"), ValidationError);
    CHECK_THROWS_AS(cfg.set("k", "three"), ValidationError);
    CHECK_THROWS_AS(cfg.set("normalization", "median"), ValidationError);
}

TEST_CASE("config validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.particles = 101;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.thresholds = {0.6, 0.7};
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.k_cols = 21;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("config JSON lists every settable key") {
    auto j = RunConfig{}.to_json();
    for (const auto& key : config_keys()) CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["bicluster-inertia"] == 0.95);
}

TEST_CASE("sample corpus has windows of shape 9x20") {
    auto corpus = sample_corpus();
    REQUIRE(corpus.has_structures());
    CHECK(corpus.size() == 30);
    auto dir = scratch("prepare");
    write_prepare(corpus, RunConfig{}, dir);
    auto manifest = nlohmann::json::parse(read_text_file(dir / "manifest.json"));
    CHECK(manifest["n_windows"] == corpus.size());
    CHECK(manifest["window_shape"] == nlohmann::json::array({9, 20}));
    CHECK(manifest["matrix_shape"] == nlohmann::json::array({30, 20}));
    fs::remove_all(dir);
}

TEST_CASE("cluster and bicluster groups survive a JSON round-trip") {
    auto corpus = sample_corpus();
    auto cfg = quick_config(4);
    auto clusters = run_clustering(corpus, cfg);
    auto cg = cluster_groups(corpus, clusters);
    auto back = groups_from_json(corpus, clusters_json(corpus, clusters, cfg));
    REQUIRE(back.size() == cg.size());
    for (std::size_t i = 0; i < cg.size(); ++i) {
        CHECK(back[i].members == cg[i].members);
        CHECK(!back[i].motif);
    }

    auto bic = run_biclustering(corpus, cfg);
    auto bg = bicluster_groups(corpus, bic);
    auto bback = groups_from_json(corpus, biclusters_json(corpus, bic, cfg));
    REQUIRE(bback.size() == bg.size());
    for (std::size_t i = 0; i < bg.size(); ++i) {
        CHECK(bback[i].members == bg[i].members);
        CHECK(*bback[i].motif == *bg[i].motif);
    }

    auto reports = motif_reports(corpus, bg, cfg);
    CHECK(reports.size() == bg.size());
    for (const auto& r : reports) CHECK(r.positions.size() == 9);
}

TEST_CASE("groups file errors") {
    auto corpus = sample_corpus();
    CHECK_THROWS_AS(groups_from_json(corpus, nlohmann::json{{"kind", "other"}}), ValidationError);
    CHECK_THROWS_AS(groups_from_json(corpus, nlohmann::json::object()), ValidationError);
    nlohmann::json bad = {{"kind", "clusters"}, {"groups", {{{"id", "c1"}, {"members", {"nobody"}}}}}};
    CHECK_THROWS_AS(groups_from_json(corpus, bad), LinkError);
}

TEST_CASE("compare needs structures") {
    auto corpus = sample_corpus();
    corpus.structures.clear();
    CHECK_THROWS_AS(compare_pipelines(corpus, quick_config(0)), ValidationError);
}

TEST_CASE("comparison report is consistent with its groups") {
    auto corpus = synth::planted_corpus(7);
    auto cfg = quick_config(2);
    auto rep = compare_pipelines(corpus, cfg);
    CHECK(rep.clusters.size() <= cfg.k);
    CHECK(!rep.biclusters.empty());
    std::vector<double> cs, bs;
    for (const auto& g : rep.clusters) cs.push_back(g.similarity);
    for (const auto& g : rep.biclusters) bs.push_back(g.similarity);
    CHECK(rep.tally.clusters == tally_homology(cs, cfg.thresholds));
    CHECK(rep.tally.biclusters == tally_homology(bs, cfg.thresholds));
    for (const auto& g : rep.biclusters) {
        CHECK(!g.columns.empty());
        CHECK(g.homology == homology_class(g.similarity));
    }
}

TEST_CASE("reruns write byte-identical files") {
    auto corpus = sample_corpus();
    auto cfg = quick_config(12);
    cfg.trace = true;
    auto a = scratch("rerun_a"), b = scratch("rerun_b");
    for (const auto& dir : {a, b}) {
        write_cluster(corpus, cfg, dir / "cluster");
        write_bicluster(corpus, cfg, dir / "bicluster");
        write_motifs(corpus, cfg, dir / "bicluster" / "biclusters.json", dir / "motifs");
        write_compare(corpus, cfg, dir / "compare");
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) continue;
        auto rel = fs::relative(entry.path(), a);
        CHECK_MESSAGE(read_text_file(entry.path()) == read_text_file(b / rel), rel.string());
        ++compared;
    }
    CHECK(compared >= 8);
    fs::remove_all(a);
    fs::remove_all(b);
}
