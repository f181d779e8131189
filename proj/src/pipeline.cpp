#include "psomotif/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "psomotif/error.hpp"
#include "psomotif/featurize.hpp"
#include "psomotif/psokmeans.hpp"

#ifndef PSOMOTIF_VERSION
#define PSOMOTIF_VERSION "0.0.0-unknown"
#endif

namespace psomotif {

namespace fs = std::filesystem;

std::string version_string() { return PSOMOTIF_VERSION; }

nlohmann::json producer_block(const RunConfig& cfg) {
    return {{"tool", "psomotif"}, {"version", version_string()}, {"seed", cfg.seed}, {"config", cfg.to_json()}};
}

namespace {

std::string real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    out.flush();
    if (!out) throw IoError("error writing '" + path.string() + "'");
}

void write_json(const fs::path& path, const nlohmann::json& j) { write_file(path, j.dump(2) + "\n"); }

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir.string() + "'");
}

std::string csv_preamble(const RunConfig& cfg) {
    return "# psomotif " + version_string() + "\n# seed=" + std::to_string(cfg.seed) +
           "\n# config=" + cfg.to_json().dump() + "\n";
}

std::string trace_csv(const std::vector<double>& trace, const RunConfig& cfg) {
    std::string s = csv_preamble(cfg) + "iteration,gbest_fitness\n";
    for (std::size_t i = 0; i < trace.size(); ++i) s += std::to_string(i + 1) + "," + real(trace[i]) + "\n";
    return s;
}

std::vector<std::string> member_ids(const Corpus& corpus, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(corpus.sequences[i].id);
    return out;
}

StructureProfile group_profile(const Corpus& corpus, const std::vector<std::size_t>& members,
                               const RunConfig& cfg) {
    std::vector<StructureWindowSet> sets;
    sets.reserve(members.size());
    for (auto i : members) sets.push_back(structure_segments(corpus.structures[i], cfg.window_size, cfg.window_mode));
    return build_profile(sets);
}

GroupSummary summarize(const Corpus& corpus, const Group& g, const RunConfig& cfg) {
    GroupSummary s;
    s.id = g.id;
    s.members = member_ids(corpus, g.members);
    auto profile = group_profile(corpus, g.members, cfg);
    s.n_segments = profile.n_segments;
    s.similarity = structure_similarity(profile);
    s.homology = homology_class(s.similarity);
    return s;
}

std::string xml_comment(std::string text) {
    for (auto pos = text.find("--"); pos != std::string::npos; pos = text.find("--", pos)) text.replace(pos, 2, "- -");
    return "<!-- " + text + " -->\n";
}

std::string safe_file_stem(const std::string& id) {
    std::string out = id;
    for (char& c : out)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
    return out;
}

} // namespace

ClusterSet run_clustering(const Corpus& corpus, const RunConfig& cfg) {
    cfg.validate();
    auto windows = build_cluster_dataset(corpus.sequences, cfg.window_size, cfg.window_mode);
    auto data = windows_to_matrix(windows);
    if (data.rows() < cfg.k)
        throw ValidationError("k = " + std::to_string(cfg.k) + " exceeds the " + std::to_string(data.rows()) +
                              " sequences in the corpus");
    auto dist = distance_by_name(cfg.distance);
    if (cfg.engine == Engine::kmeans) return kmeans_run(data, cfg.kmeans_config(), dist);
    return pso_kmeans(data, cfg.pso_kmeans_config(), dist);
}

BiclusterRun run_biclustering(const Corpus& corpus, const RunConfig& cfg) {
    cfg.validate();
    BiclusterRun run;
    run.matrix = build_bicluster_matrix(corpus.sequences, cfg.normalization, cfg.window_size, cfg.window_mode);
    if (run.matrix.rows() < 2) throw ValidationError("biclustering needs at least 2 sequences");
    if (run.matrix.rows() < cfg.k_rows)
        throw ValidationError("k-rows = " + std::to_string(cfg.k_rows) + " exceeds the " +
                              std::to_string(run.matrix.rows()) + " sequences in the corpus");
    run.seeds = seed_biclusters(run.matrix, cfg.k_rows, cfg.k_cols, cfg.bicluster_seed_config());
    run.result = pso_bicluster(run.matrix, cfg.bicluster_config(), run.seeds);
    return run;
}

std::vector<Group> cluster_groups(const Corpus& corpus, const ClusterSet& cs) {
    (void)corpus;
    std::vector<Group> out;
    auto members = cs.members();
    for (std::size_t c = 0; c < members.size(); ++c)
        out.push_back({"cluster-" + std::to_string(c + 1), members[c], std::nullopt});
    return out;
}

std::vector<Group> bicluster_groups(const Corpus& corpus, const BiclusterRun& run) {
    (void)corpus;
    std::vector<Group> out;
    for (std::size_t b = 0; b < run.result.biclusters.size(); ++b) {
        const auto& bic = run.result.biclusters[b];
        out.push_back({"bicluster-" + std::to_string(b + 1), bic.rows, motif_set(bic)});
    }
    return out;
}

std::vector<Group> groups_from_json(const Corpus& corpus, const nlohmann::json& doc) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < corpus.sequences.size(); ++i) index.emplace(corpus.sequences[i].id, i);
    std::vector<Group> out;
    try {
        const auto kind = doc.at("kind").get<std::string>();
        if (kind != "clusters" && kind != "biclusters")
            throw ValidationError("groups file has kind '" + kind + "', expected clusters or biclusters");
        for (const auto& g : doc.at("groups")) {
            Group group{g.at("id").get<std::string>(), {}, std::nullopt};
            for (const auto& id : g.at("members")) {
                auto it = index.find(id.get<std::string>());
                if (it == index.end())
                    throw LinkError("group '" + group.id + "' names unknown sequence '" + id.get<std::string>() + "'");
                group.members.push_back(it->second);
            }
            if (kind == "biclusters") group.motif = parse_amino_set(g.at("columns").get<std::string>());
            out.push_back(std::move(group));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed groups file: ") + e.what());
    }
    return out;
}

std::vector<MotifReport> motif_reports(const Corpus& corpus, const std::vector<Group>& groups,
                                       const RunConfig& cfg) {
    auto windows = build_cluster_dataset(corpus.sequences, cfg.window_size, cfg.window_mode);
    std::vector<MotifReport> out;
    for (const auto& g : groups) {
        if (g.members.empty()) continue;
        std::vector<FrequencyWindow> members;
        for (auto i : g.members) members.push_back(windows[i]);
        auto pf = position_frequencies(members);
        std::vector<AminoSet> motifs;
        if (g.motif) motifs.push_back(*g.motif);
        out.push_back(build_motif_report(g.id, pf.freqs, motifs, pf.n_segments,
                                         {cfg.saa_threshold, cfg.logo_correction}));
    }
    return out;
}

ComparisonReport compare_pipelines(const Corpus& corpus, const RunConfig& cfg) {
    cfg.validate();
    if (!corpus.has_structures())
        throw ValidationError("compare needs secondary-structure annotations for every sequence");

    ComparisonReport report;
    auto clusters = run_clustering(corpus, cfg);
    for (const auto& g : cluster_groups(corpus, clusters))
        if (!g.members.empty()) report.clusters.push_back(summarize(corpus, g, cfg));

    auto bic = run_biclustering(corpus, cfg);
    auto groups = bicluster_groups(corpus, bic);
    for (std::size_t b = 0; b < groups.size(); ++b) {
        auto s = summarize(corpus, groups[b], cfg);
        s.columns = to_string(*groups[b].motif);
        s.score = bic.result.biclusters[b].msr;
        report.biclusters.push_back(std::move(s));
    }

    std::vector<double> cs, bs;
    for (const auto& g : report.clusters) cs.push_back(g.similarity);
    for (const auto& g : report.biclusters) bs.push_back(g.similarity);
    report.tally = {cfg.thresholds, tally_homology(cs, cfg.thresholds), tally_homology(bs, cfg.thresholds)};
    return report;
}

nlohmann::json clusters_json(const Corpus& corpus, const ClusterSet& cs, const RunConfig& cfg) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : cluster_groups(corpus, cs)) {
        std::size_t c = groups.size();
        groups.push_back({{"id", g.id},
                          {"members", member_ids(corpus, g.members)},
                          {"size", g.members.size()},
                          {"centroid", std::vector<double>(cs.centroids.row(c).begin(), cs.centroids.row(c).end())}});
    }
    return {{"kind", "clusters"},
            {"producer", producer_block(cfg)},
            {"engine", std::string(to_string(cfg.engine))},
            {"k", cs.k},
            {"item_shape", {cfg.window_size, kNumAminoAcids}},
            {"fitness", cs.final_fitness},
            {"iterations", cs.iterations_run},
            {"converged", cs.converged},
            {"groups", groups}};
}

nlohmann::json biclusters_json(const Corpus& corpus, const BiclusterRun& run, const RunConfig& cfg) {
    nlohmann::json groups = nlohmann::json::array();
    for (std::size_t b = 0; b < run.result.biclusters.size(); ++b) {
        const auto& bic = run.result.biclusters[b];
        groups.push_back({{"id", "bicluster-" + std::to_string(b + 1)},
                          {"members", member_ids(corpus, bic.rows)},
                          {"columns", to_string(motif_set(bic))},
                          {"msr", bic.msr},
                          {"volume", bic.volume()},
                          {"fitness", run.result.fitness[b]}});
    }
    return {{"kind", "biclusters"},
            {"producer", producer_block(cfg)},
            {"lambda", run.result.lambda},
            {"n_seeds", run.seeds.size()},
            {"n_particles", run.result.n_particles},
            {"groups", groups}};
}

nlohmann::json comparison_json(const ComparisonReport& report, const RunConfig& cfg) {
    nlohmann::json clusters = nlohmann::json::array(), biclusters = nlohmann::json::array();
    for (const auto& g : report.clusters) clusters.push_back(to_json(g));
    for (const auto& g : report.biclusters) biclusters.push_back(to_json(g));
    return {{"kind", "comparison"},
            {"producer", producer_block(cfg)},
            {"tally", to_json(report.tally)},
            {"clusters", clusters},
            {"biclusters", biclusters}};
}

void write_prepare(const Corpus& corpus, const RunConfig& cfg, const fs::path& out_dir) {
    cfg.validate();
    prepare_dir(out_dir);
    auto windows = build_cluster_dataset(corpus.sequences, cfg.window_size, cfg.window_mode);

    std::string header;
    for (char aa : kAminoAcids) header += std::string(",") + aa;

    std::ostringstream w;
    w << csv_preamble(cfg) << "sequence_id,position" << header << '\n';
    for (const auto& fw : windows)
        for (std::size_t i = 0; i < fw.window_size; ++i) {
            w << fw.sequence_id << ',' << i + 1;
            for (std::size_t j = 0; j < kNumAminoAcids; ++j) w << ',' << fw.at(i, j);
            w << '\n';
        }
    write_file(out_dir / "windows.csv", w.str());

    auto matrix = build_bicluster_matrix(corpus.sequences, cfg.normalization, cfg.window_size, cfg.window_mode);
    std::ostringstream m;
    m << csv_preamble(cfg) << "sequence_id" << header << '\n';
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        m << corpus.sequences[r].id;
        for (double v : matrix.row(r)) m << ',' << real(v);
        m << '\n';
    }
    write_file(out_dir / "matrix.csv", m.str());

    write_json(out_dir / "manifest.json",
               {{"kind", "prepare"},
                {"producer", producer_block(cfg)},
                {"n_sequences", corpus.size()},
                {"has_structures", corpus.has_structures()},
                {"window_shape", {cfg.window_size, kNumAminoAcids}},
                {"n_windows", windows.size()},
                {"matrix_shape", {matrix.rows(), matrix.cols()}},
                {"normalization", std::string(to_string(cfg.normalization))},
                {"files", {"windows.csv", "matrix.csv"}}});
}

void write_cluster(const Corpus& corpus, const RunConfig& cfg, const fs::path& out_dir) {
    auto cs = run_clustering(corpus, cfg);
    prepare_dir(out_dir);
    write_json(out_dir / "clusters.json", clusters_json(corpus, cs, cfg));
    if (cfg.trace) write_file(out_dir / "trace.csv", trace_csv(cs.trace, cfg));
}

void write_bicluster(const Corpus& corpus, const RunConfig& cfg, const fs::path& out_dir) {
    auto run = run_biclustering(corpus, cfg);
    prepare_dir(out_dir);
    write_json(out_dir / "biclusters.json", biclusters_json(corpus, run, cfg));
    if (cfg.trace) write_file(out_dir / "trace.csv", trace_csv(run.result.trace, cfg));
}

void write_motifs(const Corpus& corpus, const RunConfig& cfg, const std::optional<fs::path>& groups_file,
                  const fs::path& out_dir) {
    cfg.validate();
    std::vector<Group> groups;
    std::string source = "biclusters";
    if (groups_file) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_text_file(*groups_file));
        } catch (const nlohmann::json::parse_error& e) {
            throw ValidationError(groups_file->string() + ": " + e.what());
        }
        groups = groups_from_json(corpus, doc);
        source = doc.at("kind").get<std::string>();
    } else {
        groups = bicluster_groups(corpus, run_biclustering(corpus, cfg));
    }
    auto reports = motif_reports(corpus, groups, cfg);

    prepare_dir(out_dir);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) {
        list.push_back(to_json(r));
        std::string svg = render_logo_svg(r);
        svg.insert(svg.find('\n') + 1, xml_comment("psomotif " + version_string() + " seed=" +
                                                    std::to_string(cfg.seed) + " config=" + cfg.to_json().dump()));
        write_file(out_dir / ("logo_" + safe_file_stem(r.group_id) + ".svg"), svg);
    }
    write_json(out_dir / "motifs.json",
               {{"kind", "motifs"}, {"producer", producer_block(cfg)}, {"source", source}, {"reports", list}});
}

void write_compare(const Corpus& corpus, const RunConfig& cfg, const fs::path& out_dir) {
    auto report = compare_pipelines(corpus, cfg);
    prepare_dir(out_dir);
    write_json(out_dir / "comparison.json", comparison_json(report, cfg));
    write_file(out_dir / "homology_tally.csv", csv_preamble(cfg) + tally_csv(report.tally));
}

} // namespace psomotif
