#include "psomotif/report.hpp"

#include <cstdio>
#include <sstream>

#include "psomotif/error.hpp"

namespace psomotif {

std::vector<std::size_t> tally_homology(std::span<const double> similarities,
                                        std::span<const double> thresholds) {
    for (std::size_t t = 1; t < thresholds.size(); ++t)
        require(thresholds[t - 1] >= thresholds[t], "tally_homology: thresholds must be sorted descending");
    std::vector<std::size_t> counts(thresholds.size(), 0);
    for (double s : similarities)
        for (std::size_t t = 0; t < thresholds.size(); ++t)
            if (s >= thresholds[t]) ++counts[t];
    return counts;
}

std::vector<std::size_t> tally_homology(std::span<const StructureProfile> profiles,
                                        std::span<const double> thresholds) {
    std::vector<double> sims;
    sims.reserve(profiles.size());
    for (const auto& p : profiles) sims.push_back(structure_similarity(p));
    return tally_homology(sims, thresholds);
}

nlohmann::json to_json(const HomologyTally& t) {
    return {{"thresholds", t.thresholds}, {"clusters", t.clusters}, {"biclusters", t.biclusters}};
}

nlohmann::json to_json(const GroupSummary& g) {
    nlohmann::json j = {{"id", g.id}, {"members", g.members}};
    if (!g.columns.empty()) {
        j["columns"] = g.columns;
        j["msr"] = g.score;
    }
    j["n_segments"] = g.n_segments;
    j["similarity"] = g.similarity;
    j["homology"] = std::string(to_string(g.homology));
    return j;
}

std::string tally_csv(const HomologyTally& t) {
    std::ostringstream s;
    s << "threshold,clusters,biclusters\n";
    for (std::size_t i = 0; i < t.thresholds.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", t.thresholds[i]);
        s << buf << ',' << t.clusters[i] << ',' << t.biclusters[i] << '\n';
    }
    return s.str();
}

} // namespace psomotif
