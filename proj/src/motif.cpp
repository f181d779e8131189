#include "psomotif/motif.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "psomotif/error.hpp"

namespace psomotif {

std::string to_string(const AminoSet& s) {
    std::string out;
    for (std::size_t j = 0; j < kNumAminoAcids; ++j)
        if (s.test(j)) out.push_back(kAminoAcids[j]);
    return out;
}

AminoSet parse_amino_set(std::string_view letters) {
    AminoSet s;
    for (char c : letters) {
        int j = amino_index(c);
        if (j < 0) throw ValidationError("'" + std::string(1, c) + "' is not an amino-acid letter");
        s.set(static_cast<std::size_t>(j));
    }
    return s;
}

PositionFrequencies position_frequencies(std::span<const FrequencyWindow> members) {
    require(!members.empty(), "position_frequencies: no members");
    const auto ws = members.front().window_size;
    PositionFrequencies out{Matrix(ws, kNumAminoAcids), {}, 0};
    for (const auto& fw : members) {
        require(fw.window_size == ws, "position_frequencies: members differ in window size");
        for (std::size_t i = 0; i < ws; ++i)
            for (std::size_t j = 0; j < kNumAminoAcids; ++j) out.freqs(i, j) += fw.at(i, j);
    }
    for (std::size_t i = 0; i < ws; ++i) {
        double total = 0.0;
        for (double v : out.freqs.row(i)) total += v;
        out.n_segments = std::max(out.n_segments, static_cast<std::size_t>(total));
        if (total == 0.0) {
            out.zero_rows.push_back(i);
            continue;
        }
        for (double& v : out.freqs.row(i)) v /= total;
    }
    return out;
}

std::vector<PositionSaa> significant_amino_acids(const Matrix& freqs, double threshold) {
    std::vector<PositionSaa> out;
    for (std::size_t i = 0; i < freqs.rows(); ++i) {
        PositionSaa p{i + 1, {}};
        for (std::size_t j = 0; j < freqs.cols(); ++j)
            if (freqs(i, j) > threshold) p.saa.set(j);
        out.push_back(p);
    }
    return out;
}

AminoSet motif_set(const Bicluster& b, std::span<const char> col_labels) {
    AminoSet s;
    for (auto c : b.cols) {
        require(c < col_labels.size(), "motif_set: column outside the label set");
        int j = amino_index(col_labels[c]);
        require(j >= 0, "motif_set: column label is not an amino acid");
        s.set(static_cast<std::size_t>(j));
    }
    return s;
}

std::string_view to_string(SupersetRelation r) noexcept {
    switch (r) {
    case SupersetRelation::full: return "Full";
    case SupersetRelation::partial: return "Partial";
    case SupersetRelation::disjoint: return "Disjoint";
    }
    return "Disjoint";
}

SupersetRelation parse_superset_relation(std::string_view s) {
    if (s == "Full") return SupersetRelation::full;
    if (s == "Partial") return SupersetRelation::partial;
    if (s == "Disjoint") return SupersetRelation::disjoint;
    throw ValidationError("unknown superset relation '" + std::string(s) + "'");
}

SupersetRelation classify_superset(const AminoSet& saa, const AminoSet& motif) {
    if ((saa & motif).none()) return SupersetRelation::disjoint;
    if ((saa & ~motif).none()) return SupersetRelation::full;
    return SupersetRelation::partial;
}

std::vector<LogoColumn> logo_columns(const Matrix& freqs, std::size_t n_segments, bool correction) {
    require(freqs.cols() == kNumAminoAcids, "logo_columns: expected 20 columns");
    require(!correction || n_segments > 0, "logo_columns: n_segments must be positive");
    const double max_bits = std::log2(static_cast<double>(kNumAminoAcids));
    const double e_n = correction ? (kNumAminoAcids - 1) / (2.0 * std::numbers::ln2 * static_cast<double>(n_segments))
                                  : 0.0;
    std::vector<LogoColumn> out;
    for (std::size_t i = 0; i < freqs.rows(); ++i) {
        LogoColumn col{i + 1, 0.0, {}};
        double mass = 0.0, entropy = 0.0;
        for (double p : freqs.row(i)) {
            mass += p;
            if (p > 0.0) entropy -= p * std::log2(p);
        }
        if (mass > 0.0) {
            col.total_bits = std::clamp(max_bits - entropy - e_n, 0.0, max_bits);
            for (std::size_t j = 0; j < kNumAminoAcids; ++j)
                if (freqs(i, j) > 0.0) col.letters.emplace_back(kAminoAcids[j], freqs(i, j) * col.total_bits);
            std::stable_sort(col.letters.begin(), col.letters.end(),
                             [](const auto& a, const auto& b) { return a.second > b.second; });
        }
        out.push_back(std::move(col));
    }
    return out;
}

MotifReport build_motif_report(std::string group_id, const Matrix& freqs,
                               std::span<const AminoSet> motifs, std::size_t n_segments,
                               const MotifOptions& opts) {
    require(motifs.empty() || motifs.size() == 1 || motifs.size() == freqs.rows(),
            "build_motif_report: need one motif set or one per position");
    MotifReport r;
    r.group_id = std::move(group_id);
    r.degenerate = true;
    for (const auto& p : significant_amino_acids(freqs, opts.saa_threshold)) {
        PositionRecord rec{p.position, p.saa, std::nullopt, std::nullopt};
        if (!motifs.empty()) {
            rec.motif = motifs.size() == 1 ? motifs[0] : motifs[p.position - 1];
            rec.relation = classify_superset(rec.saa, *rec.motif);
        }
        if (rec.saa.any()) r.degenerate = false;
        r.positions.push_back(rec);
    }
    r.logo = logo_columns(freqs, n_segments, opts.logo_correction);
    return r;
}

bool operator==(const MotifReport& a, const MotifReport& b) {
    if (a.group_id != b.group_id || a.degenerate != b.degenerate ||
        a.positions.size() != b.positions.size() || a.logo.size() != b.logo.size())
        return false;
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        const auto &x = a.positions[i], &y = b.positions[i];
        if (x.position != y.position || x.saa != y.saa || x.motif != y.motif || x.relation != y.relation)
            return false;
    }
    for (std::size_t i = 0; i < a.logo.size(); ++i) {
        const auto &x = a.logo[i], &y = b.logo[i];
        if (x.position != y.position || x.total_bits != y.total_bits || x.letters != y.letters) return false;
    }
    return true;
}

nlohmann::json to_json(const MotifReport& r) {
    nlohmann::json positions = nlohmann::json::array();
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
        const auto& p = r.positions[i];
        nlohmann::json letters = nlohmann::json::array();
        nlohmann::json logo = {{"total_bits", 0.0}, {"letters", letters}};
        if (i < r.logo.size()) {
            for (const auto& [aa, h] : r.logo[i].letters)
                letters.push_back({{"aa", std::string(1, aa)}, {"bits", h}});
            logo = {{"total_bits", r.logo[i].total_bits}, {"letters", letters}};
        }
        positions.push_back({
            {"position", p.position},
            {"saa", to_string(p.saa)},
            {"motif", p.motif ? nlohmann::json(to_string(*p.motif)) : nlohmann::json(nullptr)},
            {"relation", p.relation ? nlohmann::json(std::string(to_string(*p.relation))) : nlohmann::json(nullptr)},
            {"logo", logo},
        });
    }
    return {{"group_id", r.group_id}, {"degenerate", r.degenerate}, {"positions", positions}};
}

MotifReport motif_report_from_json(const nlohmann::json& j) {
    try {
        MotifReport r;
        r.group_id = j.at("group_id").get<std::string>();
        r.degenerate = j.at("degenerate").get<bool>();
        for (const auto& p : j.at("positions")) {
            PositionRecord rec;
            rec.position = p.at("position").get<std::size_t>();
            rec.saa = parse_amino_set(p.at("saa").get<std::string>());
            if (!p.at("motif").is_null()) rec.motif = parse_amino_set(p.at("motif").get<std::string>());
            if (!p.at("relation").is_null())
                rec.relation = parse_superset_relation(p.at("relation").get<std::string>());
            r.positions.push_back(rec);

            LogoColumn col{rec.position, p.at("logo").at("total_bits").get<double>(), {}};
            for (const auto& l : p.at("logo").at("letters")) {
                auto aa = l.at("aa").get<std::string>();
                if (aa.size() != 1 || amino_index(aa[0]) < 0)
                    throw ValidationError("bad logo letter '" + aa + "'");
                col.letters.emplace_back(aa[0], l.at("bits").get<double>());
            }
            r.logo.push_back(std::move(col));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed motif report: ") + e.what());
    }
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string xml_escape(std::string_view in) {
    std::string out;
    for (char c : in) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string render_logo_svg(const MotifReport& r) {
    constexpr double col_w = 50.0, plot_h = 200.0, left = 50.0, top = 20.0, bottom = 40.0;
    constexpr double font = 100.0, cap = 0.72; // cap height of the font, in em
    const double max_bits = std::log2(static_cast<double>(kNumAminoAcids));
    const double width = left + col_w * static_cast<double>(r.logo.size()) + 20.0;
    const double height = top + plot_h + bottom;
    const double base = top + plot_h;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    s << "<title>" << xml_escape(r.group_id) << "</title>\n";
    s << "<g font-family=\"Helvetica, Arial, sans-serif\">\n";
    // Axes.
    s << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left) << "\" y2=\""
      << fmt(base) << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(base) << "\" x2=\"" << fmt(width - 20.0)
      << "\" y2=\"" << fmt(base) << "\" stroke=\"black\"/>\n";
    for (int b = 0; b <= 4; ++b) {
        double y = base - plot_h * b / max_bits;
        s << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(y + 4) << "\" font-size=\"11\" text-anchor=\"end\">"
          << b << "</text>\n";
    }
    s << "<text x=\"14\" y=\"" << fmt(top + plot_h / 2) << "\" font-size=\"12\" transform=\"rotate(-90 14 "
      << fmt(top + plot_h / 2) << ")\" text-anchor=\"middle\">bits</text>\n";

    for (std::size_t c = 0; c < r.logo.size(); ++c) {
        const auto& col = r.logo[c];
        const double x = left + col_w * static_cast<double>(c);
        s << "<text x=\"" << fmt(x + col_w / 2) << "\" y=\"" << fmt(base + 16) << "\" font-size=\"11\" "
          << "text-anchor=\"middle\">" << col.position << "</text>\n";
        // Smallest letter at the bottom.
        double y = base;
        for (auto it = col.letters.rbegin(); it != col.letters.rend(); ++it) {
            double h = plot_h * it->second / max_bits;
            if (h < 0.05) continue;
            double sy = h / (font * cap);
            s << "<text x=\"0\" y=\"0\" font-size=\"" << fmt(font) << "\" text-anchor=\"middle\" transform=\"translate("
              << fmt(x + col_w / 2) << ' ' << fmt(y) << ") scale(" << fmt(col_w / (font * 0.7)) << ' ' << fmt(sy)
              << ")\">" << it->first << "</text>\n";
            y -= h;
        }
    }
    s << "<text x=\"" << fmt(left + col_w * static_cast<double>(r.logo.size()) / 2) << "\" y=\"" << fmt(height - 6)
      << "\" font-size=\"12\" text-anchor=\"middle\">position</text>\n";
    s << "</g>\n</svg>\n";
    return s.str();
}

} // namespace psomotif
