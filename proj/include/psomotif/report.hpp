#ifndef PSOMOTIF_REPORT_HPP
#define PSOMOTIF_REPORT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "psomotif/metrics.hpp"

namespace psomotif {

inline const std::vector<double> kDefaultThresholds = {0.70, 0.65, 0.60};

/// Per-threshold counts of groups whose structure similarity is >= the
/// threshold. Thresholds must be sorted in descending order.
std::vector<std::size_t> tally_homology(std::span<const double> similarities,
                                        std::span<const double> thresholds);

std::vector<std::size_t> tally_homology(std::span<const StructureProfile> profiles,
                                        std::span<const double> thresholds);

struct HomologyTally {
    std::vector<double> thresholds;
    std::vector<std::size_t> clusters;
    std::vector<std::size_t> biclusters;
};

struct GroupSummary {
    std::string id;
    std::vector<std::string> members; // sequence ids
    std::string columns;              // amino-acid letters; empty for clusters
    double score = 0.0;               // bicluster MSR, or 0 for clusters
    std::size_t n_segments = 0;
    double similarity = 0.0;
    Homology homology = Homology::none;
};

struct ComparisonReport {
    HomologyTally tally;
    std::vector<GroupSummary> clusters;
    std::vector<GroupSummary> biclusters;
};

nlohmann::json to_json(const HomologyTally& t);
nlohmann::json to_json(const GroupSummary& g);

/// Table-shaped CSV body: threshold,clusters,biclusters.
std::string tally_csv(const HomologyTally& t);

} // namespace psomotif

#endif
