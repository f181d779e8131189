#include "psomotif/featurize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "psomotif/error.hpp"

namespace psomotif {

int FrequencyWindow::row_sum(std::size_t position) const {
    auto first = counts.begin() + static_cast<std::ptrdiff_t>(position * kNumAminoAcids);
    return std::accumulate(first, first + kNumAminoAcids, 0);
}

int FrequencyWindow::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

FrequencyWindow reshape_and_count(const Sequence& seq, std::size_t window_size, WindowMode mode) {
    require(window_size > 0, "window size must be positive");
    const auto len = seq.residues.size();
    if (len < window_size)
        throw ValidationError("sequence '" + seq.id + "' has length " + std::to_string(len) +
                              ", shorter than the window size " + std::to_string(window_size));

    FrequencyWindow fw{seq.id, window_size, std::vector<int>(window_size * kNumAminoAcids, 0)};
    auto count = [&](std::size_t position, char residue) {
        int aa = amino_index(residue);
        if (aa < 0)
            throw ValidationError("sequence '" + seq.id + "' contains non-canonical residue '" +
                                  std::string(1, residue) + "'");
        ++fw.counts[position * kNumAminoAcids + static_cast<std::size_t>(aa)];
    };

    if (mode == WindowMode::reshape) {
        // Position i of the window is residue index mod window_size; the
        // padded tail cells of the last block hold no residue.
        for (std::size_t r = 0; r < len; ++r) count(r % window_size, seq.residues[r]);
    } else {
        for (std::size_t start = 0; start + window_size <= len; ++start)
            for (std::size_t i = 0; i < window_size; ++i) count(i, seq.residues[start + i]);
    }
    return fw;
}

std::string_view to_string(Normalization n) noexcept {
    switch (n) {
    case Normalization::mean: return "mean";
    case Normalization::range: return "range";
    case Normalization::mode: return "mode";
    }
    return "mean";
}

Normalization parse_normalization(std::string_view s) {
    if (s == "mean") return Normalization::mean;
    if (s == "range") return Normalization::range;
    if (s == "mode") return Normalization::mode;
    throw ValidationError("unknown normalization '" + std::string(s) + "' (mean|range|mode)");
}

std::string_view to_string(WindowMode m) noexcept {
    return m == WindowMode::reshape ? "reshape" : "sliding";
}

WindowMode parse_window_mode(std::string_view s) {
    if (s == "reshape") return WindowMode::reshape;
    if (s == "sliding") return WindowMode::sliding;
    throw ValidationError("unknown window mode '" + std::string(s) + "' (reshape|sliding)");
}

NormalizedRow normalize_window(const FrequencyWindow& fw, Normalization method) {
    NormalizedRow row{fw.sequence_id, {}, method};
    std::vector<int> column(fw.window_size);
    for (std::size_t j = 0; j < kNumAminoAcids; ++j) {
        for (std::size_t i = 0; i < fw.window_size; ++i) column[i] = fw.at(i, j);
        double v = 0.0;
        switch (method) {
        case Normalization::mean:
            v = static_cast<double>(std::accumulate(column.begin(), column.end(), 0)) /
                static_cast<double>(fw.window_size);
            break;
        case Normalization::range: {
            auto [lo, hi] = std::minmax_element(column.begin(), column.end());
            v = static_cast<double>(*hi - *lo);
            break;
        }
        case Normalization::mode: {
            std::map<int, int> freq; // ordered: first maximum is the smallest value
            for (int c : column) ++freq[c];
            int best = 0, best_n = -1;
            for (auto [value, n] : freq)
                if (n > best_n) best = value, best_n = n;
            v = static_cast<double>(best);
            break;
        }
        }
        row.values[j] = v;
    }
    return row;
}

std::vector<FrequencyWindow> build_cluster_dataset(std::span<const Sequence> seqs,
                                                   std::size_t window_size, WindowMode mode) {
    std::vector<FrequencyWindow> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) out.push_back(reshape_and_count(s, window_size, mode));
    return out;
}

Matrix windows_to_matrix(std::span<const FrequencyWindow> windows) {
    if (windows.empty()) return {};
    const auto width = windows.front().counts.size();
    Matrix m(windows.size(), width);
    for (std::size_t i = 0; i < windows.size(); ++i) {
        require(windows[i].counts.size() == width, "windows differ in shape");
        std::copy(windows[i].counts.begin(), windows[i].counts.end(), m.row(i).begin());
    }
    return m;
}

Matrix build_bicluster_matrix(std::span<const Sequence> seqs, Normalization method,
                              std::size_t window_size, WindowMode mode) {
    Matrix m(seqs.size(), kNumAminoAcids);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        auto row = normalize_window(reshape_and_count(seqs[i], window_size, mode), method);
        std::copy(row.values.begin(), row.values.end(), m.row(i).begin());
    }
    return m;
}

StructureWindowSet structure_segments(const SecondaryStructure& ss, std::size_t window_size,
                                      WindowMode mode) {
    require(window_size > 0, "window size must be positive");
    StructureWindowSet out{ss.id, {}};
    const auto len = ss.classes3.size();
    const std::size_t stride = mode == WindowMode::reshape ? window_size : 1;
    for (std::size_t start = 0; start + window_size <= len; start += stride)
        out.segments.push_back(ss.classes3.substr(start, window_size));
    return out;
}

} // namespace psomotif
