#ifndef PSOMOTIF_FEATURIZE_HPP
#define PSOMOTIF_FEATURIZE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psomotif/matrix.hpp"
#include "psomotif/seqio.hpp"

namespace psomotif {

inline constexpr std::size_t kDefaultWindowSize = 9;

/// How a sequence is cut into window_size-long pieces.
///   reshape: consecutive non-overlapping blocks; the short tail block is
///            padded with a non-residue sentinel that is never counted.
///   sliding: every window of window_size consecutive residues (stride 1).
enum class WindowMode { reshape, sliding };

/// window_size x 20 table of residue counts for one sequence. Entry (i, j)
/// counts the blocks whose i-th residue is amino acid j.
struct FrequencyWindow {
    std::string sequence_id;
    std::size_t window_size = kDefaultWindowSize;
    std::vector<int> counts; // row-major, window_size x 20

    int at(std::size_t position, std::size_t amino) const {
        return counts[position * kNumAminoAcids + amino];
    }
    int row_sum(std::size_t position) const;
    int total() const;
};

FrequencyWindow reshape_and_count(const Sequence& seq, std::size_t window_size = kDefaultWindowSize,
                                  WindowMode mode = WindowMode::reshape);

enum class Normalization { mean, range, mode };

std::string_view to_string(Normalization n) noexcept;
Normalization parse_normalization(std::string_view s);
std::string_view to_string(WindowMode m) noexcept;
WindowMode parse_window_mode(std::string_view s);

struct NormalizedRow {
    std::string sequence_id;
    std::array<double, kNumAminoAcids> values{};
    Normalization method = Normalization::mean;
};

/// Collapses each amino-acid column of the window to one value:
/// mean of the counts, max - min, or the most frequent count (ties go to
/// the smaller count).
NormalizedRow normalize_window(const FrequencyWindow& fw, Normalization method);

std::vector<FrequencyWindow> build_cluster_dataset(std::span<const Sequence> seqs,
                                                   std::size_t window_size = kDefaultWindowSize,
                                                   WindowMode mode = WindowMode::reshape);

/// Flattens windows into an n x (window_size * 20) matrix, one item per row.
Matrix windows_to_matrix(std::span<const FrequencyWindow> windows);

/// n_sequences x 20 matrix of normalized rows.
Matrix build_bicluster_matrix(std::span<const Sequence> seqs, Normalization method,
                              std::size_t window_size = kDefaultWindowSize,
                              WindowMode mode = WindowMode::reshape);

struct StructureWindowSet {
    std::string sequence_id;
    std::vector<std::string> segments; // each exactly window_size labels over {H,E,C}
};

/// Chunks the structure labels like reshape_and_count chunks residues; an
/// incomplete tail is dropped.
StructureWindowSet structure_segments(const SecondaryStructure& ss,
                                      std::size_t window_size = kDefaultWindowSize,
                                      WindowMode mode = WindowMode::reshape);

} // namespace psomotif

#endif
