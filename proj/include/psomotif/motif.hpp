#ifndef PSOMOTIF_MOTIF_HPP
#define PSOMOTIF_MOTIF_HPP

#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "psomotif/featurize.hpp"
#include "psomotif/matrix.hpp"
#include "psomotif/psobiclust.hpp"
#include "psomotif/seqio.hpp"

namespace psomotif {

/// Set of amino acids, bit j = kAminoAcids[j].
using AminoSet = std::bitset<kNumAminoAcids>;

/// Letters in canonical column order.
std::string to_string(const AminoSet& s);
/// Accepts letters in any order; throws ValidationError on anything else.
AminoSet parse_amino_set(std::string_view letters);

inline constexpr double kSaaThreshold = 0.07;

struct PositionFrequencies {
    Matrix freqs;                  // window_size x 20, rows sum to 1
    std::vector<std::size_t> zero_rows; // rows with no counts, left all-zero
    std::size_t n_segments = 0;    // largest per-position count total
};

/// Sums the members' count tables and normalizes every row.
PositionFrequencies position_frequencies(std::span<const FrequencyWindow> members);

struct PositionSaa {
    std::size_t position = 0; // 1-based
    AminoSet saa;
};

/// Letters whose frequency is strictly above `threshold`, per position.
std::vector<PositionSaa> significant_amino_acids(const Matrix& freqs, double threshold = kSaaThreshold);

/// Letters of the columns a bicluster keeps.
AminoSet motif_set(const Bicluster& b, std::span<const char> col_labels = kAminoAcids);

enum class SupersetRelation { full, partial, disjoint };

std::string_view to_string(SupersetRelation r) noexcept;
SupersetRelation parse_superset_relation(std::string_view s);

/// full: saa is a non-empty subset of motif; partial: they overlap but saa
/// is not contained; disjoint: no overlap (including an empty saa).
SupersetRelation classify_superset(const AminoSet& saa, const AminoSet& motif);

struct LogoColumn {
    std::size_t position = 0; // 1-based
    double total_bits = 0.0;
    std::vector<std::pair<char, double>> letters; // descending height
};

/// Information content per position: log2(20) - H - e(n), with the small
/// sample correction e(n) = 19 / (2 ln2 n) when `correction` is set; clamped
/// at zero. Letter height is frequency times the column's information.
std::vector<LogoColumn> logo_columns(const Matrix& freqs, std::size_t n_segments, bool correction = true);

struct PositionRecord {
    std::size_t position = 0;
    AminoSet saa;
    std::optional<AminoSet> motif;               // absent for plain clusters
    std::optional<SupersetRelation> relation;    // absent when motif is absent
};

struct MotifReport {
    std::string group_id;
    std::vector<PositionRecord> positions;
    std::vector<LogoColumn> logo;
    bool degenerate = false; // every position has an empty SAA set

    friend bool operator==(const MotifReport&, const MotifReport&);
};

struct MotifOptions {
    double saa_threshold = kSaaThreshold;
    bool logo_correction = true;
};

/// `motifs` holds either one set applied to every position or one set per
/// position; empty means no motif (cluster groups).
MotifReport build_motif_report(std::string group_id, const Matrix& freqs,
                               std::span<const AminoSet> motifs, std::size_t n_segments,
                               const MotifOptions& opts = {});

nlohmann::json to_json(const MotifReport& r);
MotifReport motif_report_from_json(const nlohmann::json& j);

/// Stacked-letter logo: positions on x, bits (0..log2 20) on y.
std::string render_logo_svg(const MotifReport& r);

} // namespace psomotif

#endif
