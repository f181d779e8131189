#ifndef PSOMOTIF_SEQIO_HPP
#define PSOMOTIF_SEQIO_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psomotif {

inline constexpr std::size_t kNumAminoAcids = 20;

/// Canonical amino-acid order used for every matrix column in the library.
inline constexpr std::array<char, kNumAminoAcids> kAminoAcids = {
    'A', 'R', 'N', 'D', 'C', 'Q', 'E', 'G', 'H', 'I',
    'L', 'K', 'M', 'F', 'P', 'S', 'T', 'W', 'Y', 'V'};

/// Column index of a canonical residue letter, or -1.
constexpr int amino_index(char c) noexcept {
    for (std::size_t i = 0; i < kAminoAcids.size(); ++i)
        if (kAminoAcids[i] == c) return static_cast<int>(i);
    return -1;
}

struct Sequence {
    std::string id;
    std::string residues; // uppercase, canonical letters only
};

/// Three-state secondary structure labels ('H', 'E' or 'C'), one per residue.
struct SecondaryStructure {
    std::string id;
    std::string classes3;
};

struct ParseOptions {
    /// Map ambiguity codes B/Z/X/U to D/E/A/C instead of rejecting them.
    bool relax_alphabet = false;
    /// Records shorter than this are rejected; corpus loading passes the window size.
    std::size_t min_length = 1;
};

/// Parses '>'-introduced records. Body lines are concatenated with
/// whitespace removed and letters uppercased.
std::vector<Sequence> parse_sequences(std::string_view text, const ParseOptions& opts = {});

/// H, G, I -> H; B, E -> E; anything else -> C.
constexpr char map_ss8_to_ss3(char code) noexcept {
    switch (code) {
    case 'H': case 'G': case 'I': return 'H';
    case 'B': case 'E': return 'E';
    default: return 'C';
    }
}

/// Parses `>id` / structure-string pairs and links them to `sequences`.
/// The result is ordered like `sequences`; every sequence must have exactly
/// one annotation of equal length.
std::vector<SecondaryStructure> parse_structures(std::string_view text,
                                                 std::span<const Sequence> sequences);

struct Corpus {
    std::vector<Sequence> sequences;
    std::vector<SecondaryStructure> structures; // empty, or aligned with sequences

    bool has_structures() const noexcept { return !structures.empty(); }
    std::size_t size() const noexcept { return sequences.size(); }
};

std::string read_text_file(const std::filesystem::path& path);

Corpus load_corpus(const std::filesystem::path& sequences,
                   const std::optional<std::filesystem::path>& structures,
                   const ParseOptions& opts = {});

Corpus parse_corpus(std::string_view sequence_text, std::optional<std::string_view> structure_text,
                    const ParseOptions& opts = {});

} // namespace psomotif

#endif
