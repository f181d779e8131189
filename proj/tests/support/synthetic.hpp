// Synthetic fixtures with planted structure, shared by the unit and
// acceptance suites.
#ifndef PSOMOTIF_TESTS_SYNTHETIC_HPP
#define PSOMOTIF_TESTS_SYNTHETIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "psomotif/matrix.hpp"
#include "psomotif/random.hpp"
#include "psomotif/seqio.hpp"

namespace synth {

using psomotif::Matrix;

inline double normal(psomotif::StreamRng& rng) {
    double u1 = rng.uniform(), u2 = rng.uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

struct Labeled {
    Matrix data;
    std::vector<std::size_t> labels;
};

/// Gaussian blobs in 2-D around `centers`, `per_blob` points each.
inline Labeled blobs(const std::vector<std::pair<double, double>>& centers, std::size_t per_blob, double sigma,
                     std::uint64_t seed) {
    psomotif::StreamRng rng(seed, 77);
    Labeled out{Matrix(centers.size() * per_blob, 2), {}};
    std::size_t r = 0;
    for (std::size_t c = 0; c < centers.size(); ++c)
        for (std::size_t i = 0; i < per_blob; ++i, ++r) {
            out.data(r, 0) = centers[c].first + sigma * normal(rng);
            out.data(r, 1) = centers[c].second + sigma * normal(rng);
            out.labels.push_back(c);
        }
    return out;
}

/// Three blobs separated by 10 sigma or more, 60 items.
inline Labeled three_blobs(std::uint64_t seed) {
    return blobs({{0.0, 0.0}, {10.0, 0.0}, {5.0, 9.0}}, 20, 0.5, seed);
}

/// Three blobs plus uniformly scattered background points.
inline Matrix three_blobs_with_noise(std::uint64_t seed, std::size_t n_noise = 12) {
    auto b = blobs({{0.0, 0.0}, {10.0, 0.0}, {5.0, 9.0}}, 16, 1.0, seed);
    psomotif::StreamRng rng(seed, 91);
    Matrix m(b.data.rows() + n_noise, 2);
    for (std::size_t i = 0; i < b.data.rows(); ++i)
        for (std::size_t d = 0; d < 2; ++d) m(i, d) = b.data(i, d);
    for (std::size_t i = 0; i < n_noise; ++i) {
        m(b.data.rows() + i, 0) = -3.0 + 16.0 * rng.uniform();
        m(b.data.rows() + i, 1) = -3.0 + 15.0 * rng.uniform();
    }
    return m;
}

/// Agreement of two labelings up to relabeling (best permutation).
inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

struct PlantedMatrix {
    Matrix data;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// rows x cols uniform noise in [0, 10) with an additive block
/// b_ij = r_i + c_j (r, c uniform in [0, 5)) on randomly chosen indices.
inline PlantedMatrix planted_bicluster(std::uint64_t seed, std::size_t rows = 40, std::size_t cols = 20,
                                       std::size_t block_rows = 8, std::size_t block_cols = 6,
                                       double shift = 10.0) {
    psomotif::StreamRng rng(seed, 123);
    PlantedMatrix p{Matrix(rows, cols), {}, {}};
    for (auto& v : p.data.data()) v = 10.0 * rng.uniform();
    auto pick = [&](std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
        idx.resize(k);
        std::sort(idx.begin(), idx.end());
        return idx;
    };
    p.rows = pick(rows, block_rows);
    p.cols = pick(cols, block_cols);
    std::vector<double> r(block_rows), c(block_cols);
    for (auto& v : r) v = 5.0 * rng.uniform();
    for (auto& v : c) v = 5.0 * rng.uniform();
    for (std::size_t a = 0; a < block_rows; ++a)
        for (std::size_t b = 0; b < block_cols; ++b) p.data(p.rows[a], p.cols[b]) = shift + r[a] + c[b];
    return p;
}

inline double jaccard(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> i, u;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(i));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u.empty() ? 1.0 : static_cast<double>(i.size()) / static_cast<double>(u.size());
}

/// Corpus with three planted structural classes. Each class favours a set
/// of residues and is annotated mostly with its own structure state.
inline psomotif::Corpus planted_corpus(std::uint64_t seed, std::size_t per_class = 10,
                                       double residue_bias = 0.7, double structure_purity = 0.85) {
    static const std::string alphabet = "ARNDCQEGHILKMFPSTWYV";
    static const std::string preferred[3] = {"AELKMQR", "VIYFWTC", "GPNDSH"};
    static const std::string codes[3] = {"HHHHGI", "EEEEB", "TTS-C"};
    psomotif::StreamRng rng(seed, 555);
    auto pick = [&](const std::string& s) { return s[rng.below(s.size())]; };

    psomotif::Corpus corpus;
    for (std::size_t cls = 0; cls < 3; ++cls)
        for (std::size_t i = 0; i < per_class; ++i) {
            auto len = 36 + rng.below(55);
            std::string id = "s" + std::to_string(cls) + "_" + std::to_string(i);
            std::string res, ss;
            for (std::size_t r = 0; r < len; ++r) {
                res.push_back(rng.uniform() < residue_bias ? pick(preferred[cls]) : pick(alphabet));
                std::size_t state = cls;
                if (rng.uniform() >= structure_purity) state = (cls + 1 + rng.below(2)) % 3;
                ss.push_back(psomotif::map_ss8_to_ss3(pick(codes[state])));
            }
            corpus.sequences.push_back({id, res});
            corpus.structures.push_back({id, ss});
        }
    return corpus;
}

} // namespace synth

#endif
