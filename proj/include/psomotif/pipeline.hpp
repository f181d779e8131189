#ifndef PSOMOTIF_PIPELINE_HPP
#define PSOMOTIF_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "psomotif/config.hpp"
#include "psomotif/kmeans.hpp"
#include "psomotif/motif.hpp"
#include "psomotif/psobiclust.hpp"
#include "psomotif/report.hpp"
#include "psomotif/seqio.hpp"

namespace psomotif {

std::string version_string();

/// Self-description embedded in every output: tool, version, seed, config.
nlohmann::json producer_block(const RunConfig& cfg);

ClusterSet run_clustering(const Corpus& corpus, const RunConfig& cfg);

struct BiclusterRun {
    Matrix matrix;
    std::vector<Bicluster> seeds;
    BiclusterResult result;
};

BiclusterRun run_biclustering(const Corpus& corpus, const RunConfig& cfg);

/// Runs both pipelines and tallies structure homology of their groups.
ComparisonReport compare_pipelines(const Corpus& corpus, const RunConfig& cfg);

/// A group of sequences read back from a clusters/biclusters report.
struct Group {
    std::string id;
    std::vector<std::size_t> members; // corpus indices
    std::optional<AminoSet> motif;    // bicluster columns
};

std::vector<Group> cluster_groups(const Corpus& corpus, const ClusterSet& cs);
std::vector<Group> bicluster_groups(const Corpus& corpus, const BiclusterRun& run);
/// Reads groups from a clusters.json or biclusters.json document.
std::vector<Group> groups_from_json(const Corpus& corpus, const nlohmann::json& doc);

std::vector<MotifReport> motif_reports(const Corpus& corpus, const std::vector<Group>& groups,
                                       const RunConfig& cfg);

nlohmann::json clusters_json(const Corpus& corpus, const ClusterSet& cs, const RunConfig& cfg);
nlohmann::json biclusters_json(const Corpus& corpus, const BiclusterRun& run, const RunConfig& cfg);
nlohmann::json comparison_json(const ComparisonReport& report, const RunConfig& cfg);

// Subcommand bodies: each validates the configuration and writes its
// artifacts into `out_dir` (created if missing).
void write_prepare(const Corpus& corpus, const RunConfig& cfg, const std::filesystem::path& out_dir);
void write_cluster(const Corpus& corpus, const RunConfig& cfg, const std::filesystem::path& out_dir);
void write_bicluster(const Corpus& corpus, const RunConfig& cfg, const std::filesystem::path& out_dir);
/// With `groups_file` the groups come from an earlier cluster/bicluster
/// report; otherwise biclustering runs first.
void write_motifs(const Corpus& corpus, const RunConfig& cfg,
                  const std::optional<std::filesystem::path>& groups_file,
                  const std::filesystem::path& out_dir);
void write_compare(const Corpus& corpus, const RunConfig& cfg, const std::filesystem::path& out_dir);

} // namespace psomotif

#endif
