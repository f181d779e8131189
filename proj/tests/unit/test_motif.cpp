#include "doctest.h"

#include <cmath>

#include "psomotif/error.hpp"
#include "psomotif/featurize.hpp"
#include "psomotif/motif.hpp"

using namespace psomotif;

namespace {

std::size_t col(char c) { return static_cast<std::size_t>(amino_index(c)); }

// Frequency rows whose significant letters are exactly `saa[i]`.
Matrix freqs_with_saa(const std::vector<std::string>& saa) {
    Matrix f(saa.size(), kNumAminoAcids);
    for (std::size_t i = 0; i < saa.size(); ++i) {
        const double hi = 0.5 / static_cast<double>(saa[i].size());
        const double lo = 0.5 / static_cast<double>(kNumAminoAcids - saa[i].size());
        for (std::size_t j = 0; j < kNumAminoAcids; ++j) f(i, j) = lo;
        for (char c : saa[i]) f(i, col(c)) = hi;
    }
    return f;
}

} // namespace

TEST_CASE("amino sets print in canonical order") {
    CHECK(to_string(parse_amino_set("VTKLIGEDA")) == "ADEGILKTV");
    CHECK(to_string(parse_amino_set("")) == "");
    CHECK_THROWS_AS(parse_amino_set("AJ"), ValidationError);
}

TEST_CASE("position frequencies") {
    SUBCASE("single all-A member") {
        auto fw = reshape_and_count({"s", "AAAAAAAAA"});
        auto pf = position_frequencies(std::span(&fw, 1));
        for (std::size_t i = 0; i < 9; ++i) CHECK(pf.freqs(i, col('A')) == 1.0);
        CHECK(pf.n_segments == 1);
        CHECK(pf.zero_rows.empty());
    }
    SUBCASE("two members with disjoint letters") {
        std::vector<FrequencyWindow> m{reshape_and_count({"a", "AAAAAAAAA"}), reshape_and_count({"b", "VVVVVVVVV"})};
        auto pf = position_frequencies(m);
        for (std::size_t i = 0; i < 9; ++i) {
            CHECK(pf.freqs(i, col('A')) == 0.5);
            CHECK(pf.freqs(i, col('V')) == 0.5);
        }
    }
    SUBCASE("hand tally over five windows") {
        std::vector<FrequencyWindow> m{
            reshape_and_count({"a", "ACDEFGHIK"}), reshape_and_count({"b", "ACDEFGHIK"}),
            reshape_and_count({"c", "GCDEFGHIK"}), reshape_and_count({"d", "GCDEFGHIKW"}),
            reshape_and_count({"e", "LCDEFGHIK"})};
        auto pf = position_frequencies(m);
        // position 1: A,A,G,G+W,L -> 6 residues
        CHECK(pf.freqs(0, col('A')) == doctest::Approx(2.0 / 6.0));
        CHECK(pf.freqs(0, col('G')) == doctest::Approx(2.0 / 6.0));
        CHECK(pf.freqs(0, col('W')) == doctest::Approx(1.0 / 6.0));
        CHECK(pf.freqs(0, col('L')) == doctest::Approx(1.0 / 6.0));
        CHECK(pf.freqs(1, col('C')) == 1.0);
        CHECK(pf.n_segments == 6);
    }
}

TEST_CASE("significant amino acids use a strict threshold") {
    Matrix f(3, kNumAminoAcids);
    f(0, col('A')) = 0.08;
    for (std::size_t j = 1; j < kNumAminoAcids; ++j) f(0, j) = 0.92 / 19.0;
    f(1, col('A')) = 0.07;
    f(1, col('R')) = 0.93;
    for (std::size_t j = 0; j < kNumAminoAcids; ++j) f(2, j) = 0.05;
    auto saa = significant_amino_acids(f);
    CHECK(to_string(saa[0].saa) == "A");
    CHECK(to_string(saa[1].saa) == "R");
    CHECK(saa[2].saa.none());
    CHECK(saa[0].position == 1);
}

TEST_CASE("SAA sets shrink as the threshold grows") {
    auto f = freqs_with_saa({"AGV", "AEFPTV", "EG"});
    for (double t = 0.0; t < 0.3; t += 0.01) {
        auto lo = significant_amino_acids(f, t), hi = significant_amino_acids(f, t + 0.01);
        for (std::size_t i = 0; i < lo.size(); ++i) CHECK((hi[i].saa & ~lo[i].saa).none());
    }
}

TEST_CASE("motif set from bicluster columns") {
    Bicluster b{{0}, {0, 3, 6, 7, 9, 10, 11, 16, 19}, 0.0};
    CHECK(to_string(motif_set(b)) == "ADEGILKTV");
    Bicluster all{{0}, {}, 0.0};
    for (std::size_t j = 0; j < 20; ++j) all.cols.push_back(j);
    CHECK(to_string(motif_set(all)) == "ARNDCQEGHILKMFPSTWYV");
    CHECK(to_string(motif_set(Bicluster{{0}, {1}, 0.0})) == "R");
}

TEST_CASE("superset classification") {
    auto motif = parse_amino_set("ADEGILKTV");
    CHECK(classify_superset(parse_amino_set("AGV"), motif) == SupersetRelation::full);
    CHECK(classify_superset(parse_amino_set("AEFPTV"), motif) == SupersetRelation::partial);
    CHECK(classify_superset(parse_amino_set("EQSV"), parse_amino_set("RNQFPSY")) == SupersetRelation::partial);
    CHECK(classify_superset(parse_amino_set("W"), parse_amino_set("A")) == SupersetRelation::disjoint);
    // a letter outside the motif demotes to partial
    CHECK(classify_superset(parse_amino_set("LRT"), motif) == SupersetRelation::partial);
    CHECK(classify_superset(parse_amino_set("ADLRV"), motif) == SupersetRelation::partial);
    CHECK(to_string(SupersetRelation::full) == "Full");
    CHECK(parse_superset_relation("Partial") == SupersetRelation::partial);
}

TEST_CASE("superset classification properties") {
    for (unsigned bits = 1; bits < (1u << 8); bits += 7) {
        AminoSet s(bits * 2654435761u);
        if (s.none()) continue;
        CHECK(classify_superset(s, s) == SupersetRelation::full);
        // growing the motif never demotes full
        AminoSet grown = s;
        grown.set(col('W'));
        CHECK(classify_superset(s, grown) == SupersetRelation::full);
    }
}

TEST_CASE("logo columns") {
    const double max_bits = std::log2(20.0);
    Matrix f(3, kNumAminoAcids);
    f(0, col('A')) = 1.0;
    for (std::size_t j = 0; j < kNumAminoAcids; ++j) f(1, j) = 0.05;
    f(2, col('A')) = 0.5;
    f(2, col('V')) = 0.5;
    auto logo = logo_columns(f, 1000000, false);
    CHECK(std::fabs(logo[0].total_bits - max_bits) < 1e-9);
    CHECK(std::fabs(logo[1].total_bits) < 1e-9);
    CHECK(std::fabs(logo[2].total_bits - (max_bits - 1.0)) < 1e-9);
    REQUIRE(logo[2].letters.size() == 2);
    CHECK(logo[2].letters[0].second == doctest::Approx(logo[2].letters[1].second));
    CHECK(logo[2].letters[0].second == doctest::Approx(1.6610).epsilon(1e-4));

    auto corrected = logo_columns(f, 10, true);
    CHECK(corrected[0].total_bits == doctest::Approx(max_bits - 19.0 / (2.0 * std::log(2.0) * 10.0)));
    CHECK(corrected[1].total_bits == 0.0);
    for (const auto& c : corrected) {
        CHECK(c.total_bits >= 0.0);
        CHECK(c.total_bits <= max_bits);
        double sum = 0.0;
        for (const auto& [letter, h] : c.letters) sum += h;
        CHECK(sum == doctest::Approx(c.total_bits));
    }
}

TEST_CASE("report relations follow the per-position motif sets") {
    std::vector<std::string> saa{"AGV", "AEFPTV", "EGLTV", "AEKQS", "EQSV", "ADLRV", "LRT", "ATV", "EGIKL"};
    std::vector<AminoSet> motifs(9, parse_amino_set("ADEGILKTV"));
    motifs[4] = parse_amino_set("RNQFPSY");
    auto r = build_motif_report("g1", freqs_with_saa(saa), motifs, 50);
    REQUIRE(r.positions.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(to_string(r.positions[i].saa) == to_string(parse_amino_set(saa[i])));
    std::vector<std::string> got;
    for (const auto& p : r.positions) got.emplace_back(to_string(*p.relation));
    CHECK(got == std::vector<std::string>{"Full", "Partial", "Full", "Partial", "Partial", "Partial", "Partial",
                                          "Full", "Full"});
    CHECK(!r.degenerate);
}

TEST_CASE("all-Full report with one shared motif") {
    std::vector<std::string> saa{"AGL", "DL", "LV", "EILV", "AV", "AL", "GLV", "GL", "ALV"};
    auto motif = parse_amino_set("ADEGILKTV");
    auto r = build_motif_report("g2", freqs_with_saa(saa), std::span(&motif, 1), 50);
    for (const auto& p : r.positions) CHECK(*p.relation == SupersetRelation::full);
}

TEST_CASE("cluster reports carry no motif and empty SAA is flagged") {
    Matrix uniform(9, kNumAminoAcids, 0.05);
    auto r = build_motif_report("c", uniform, {}, 40);
    CHECK(r.degenerate);
    for (const auto& p : r.positions) {
        CHECK(!p.motif);
        CHECK(!p.relation);
    }
}

TEST_CASE("motif report JSON round-trip and SVG") {
    std::vector<std::string> saa{"AGV", "AEFPTV", "EGLTV", "AEKQS", "EQSV", "ADLRV", "LRT", "ATV", "EGIKL"};
    auto motif = parse_amino_set("ADEGILKTV");
    auto r = build_motif_report("g<&>", freqs_with_saa(saa), std::span(&motif, 1), 30);
    auto back = motif_report_from_json(nlohmann::json::parse(to_json(r).dump()));
    CHECK(back == r);
    auto cluster = build_motif_report("c", freqs_with_saa(saa), {}, 30);
    CHECK(motif_report_from_json(to_json(cluster)) == cluster);

    auto svg = render_logo_svg(r);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("g&lt;&amp;&gt;") != std::string::npos);
    CHECK(svg == render_logo_svg(back));
}
