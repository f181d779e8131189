#include "psomotif/seqio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "psomotif/error.hpp"

namespace psomotif {
namespace {

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number++});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

bool is_blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string header_id(std::string_view header, std::size_t line) {
    header.remove_prefix(1);
    std::size_t b = 0;
    while (b < header.size() && std::isspace(static_cast<unsigned char>(header[b]))) ++b;
    std::size_t e = b;
    while (e < header.size() && !std::isspace(static_cast<unsigned char>(header[e]))) ++e;
    if (b == e) throw ParseError("record header without identifier", line);
    return std::string(header.substr(b, e - b));
}

char relaxed(char c) {
    switch (c) {
    case 'B': return 'D';
    case 'Z': return 'E';
    case 'X': return 'A';
    case 'U': return 'C';
    default: return c;
    }
}

} // namespace

std::vector<Sequence> parse_sequences(std::string_view text, const ParseOptions& opts) {
    std::vector<Sequence> out;
    std::unordered_set<std::string> seen;

    auto finish = [&](Sequence& s) {
        if (s.residues.empty()) throw ValidationError("sequence '" + s.id + "' is empty");
        if (s.residues.size() < opts.min_length)
            throw ValidationError("sequence '" + s.id + "' has length " +
                                  std::to_string(s.residues.size()) +
                                  ", shorter than the window size " +
                                  std::to_string(opts.min_length));
    };

    for (const auto& [line, number] : split_lines(text)) {
        if (!line.empty() && line.front() == '>') {
            if (!out.empty()) finish(out.back());
            auto id = header_id(line, number);
            if (!seen.insert(id).second)
                throw ValidationError("duplicate sequence id '" + id + "'");
            out.push_back({std::move(id), {}});
            continue;
        }
        if (is_blank(line)) continue;
        if (out.empty()) throw ParseError("residue line before any '>' header", number);
        auto& seq = out.back();
        for (char raw : line) {
            if (std::isspace(static_cast<unsigned char>(raw))) continue;
            char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
            if (opts.relax_alphabet) c = relaxed(c);
            if (amino_index(c) < 0)
                throw ValidationError("sequence '" + seq.id + "': illegal residue '" +
                                      std::string(1, raw) + "' at position " +
                                      std::to_string(seq.residues.size() + 1));
            seq.residues.push_back(c);
        }
    }
    if (!out.empty()) finish(out.back());
    return out;
}

std::vector<SecondaryStructure> parse_structures(std::string_view text,
                                                 std::span<const Sequence> sequences) {
    std::unordered_map<std::string, std::string> by_id;
    std::string pending;
    std::size_t pending_line = 0;
    bool expecting_body = false;

    for (const auto& [line, number] : split_lines(text)) {
        if (expecting_body) {
            // The structure string is taken verbatim: blanks are coil.
            std::string ss3;
            ss3.reserve(line.size());
            for (char c : line) ss3.push_back(map_ss8_to_ss3(c));
            if (!by_id.emplace(pending, std::move(ss3)).second)
                throw ValidationError("duplicate structure id '" + pending + "'");
            expecting_body = false;
            continue;
        }
        if (is_blank(line)) continue;
        if (line.front() != '>') throw ParseError("expected '>id' structure header", number);
        pending = header_id(line, number);
        pending_line = number;
        expecting_body = true;
    }
    if (expecting_body)
        throw ParseError("structure header '" + pending + "' without structure line", pending_line);

    std::unordered_set<std::string> known;
    for (const auto& s : sequences) known.insert(s.id);
    for (const auto& [id, ss] : by_id)
        if (!known.contains(id)) throw LinkError("structure id '" + id + "' has no matching sequence");

    std::vector<SecondaryStructure> out;
    out.reserve(sequences.size());
    for (const auto& s : sequences) {
        auto it = by_id.find(s.id);
        if (it == by_id.end()) throw LinkError("sequence '" + s.id + "' has no structure annotation");
        if (it->second.size() != s.residues.size())
            throw ValidationError("structure for '" + s.id + "' has length " +
                                  std::to_string(it->second.size()) + " but the sequence has length " +
                                  std::to_string(s.residues.size()));
        out.push_back({s.id, std::move(it->second)});
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return ss.str();
}

Corpus parse_corpus(std::string_view sequence_text, std::optional<std::string_view> structure_text,
                    const ParseOptions& opts) {
    Corpus c;
    c.sequences = parse_sequences(sequence_text, opts);
    if (structure_text) c.structures = parse_structures(*structure_text, c.sequences);
    return c;
}

Corpus load_corpus(const std::filesystem::path& sequences,
                   const std::optional<std::filesystem::path>& structures,
                   const ParseOptions& opts) {
    Corpus c;
    try {
        c.sequences = parse_sequences(read_text_file(sequences), opts);
    } catch (const ParseError& e) {
        throw ParseError(sequences.string(), e);
    }
    if (structures) {
        try {
            c.structures = parse_structures(read_text_file(*structures), c.sequences);
        } catch (const ParseError& e) {
            throw ParseError(structures->string(), e);
        }
    }
    return c;
}

} // namespace psomotif
