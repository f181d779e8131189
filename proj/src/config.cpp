#include "psomotif/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "psomotif/error.hpp"

namespace psomotif {

std::string_view to_string(Engine e) noexcept { return e == Engine::kmeans ? "kmeans" : "pso-kmeans"; }

Engine parse_engine(std::string_view s) {
    if (s == "kmeans") return Engine::kmeans;
    if (s == "pso-kmeans") return Engine::pso_kmeans;
    throw ValidationError("unknown engine '" + std::string(s) + "' (kmeans|pso-kmeans)");
}

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::string bad(std::string_view key, std::string_view value, std::string_view want) {
    return "config '" + std::string(key) + "': '" + std::string(value) + "' is not " + std::string(want);
}

std::uint64_t to_uint(std::string_view key, std::string_view raw) {
    auto v = trim(raw);
    std::uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || p != v.data() + v.size())
        throw ValidationError(bad(key, raw, "a non-negative integer"));
    return out;
}

double to_real(std::string_view key, std::string_view raw) {
    auto v = trim(raw);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        throw ValidationError(bad(key, raw, "a number"));
    }
    if (used != v.size() || !std::isfinite(out)) throw ValidationError(bad(key, raw, "a finite number"));
    return out;
}

bool to_bool(std::string_view key, std::string_view raw) {
    auto v = trim(raw);
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw ValidationError(bad(key, raw, "a boolean"));
}

std::optional<double> to_optional_real(std::string_view key, std::string_view raw) {
    auto v = trim(raw);
    if (v.empty() || v == "none" || v == "auto") return std::nullopt;
    return to_real(key, v);
}

std::vector<double> to_reals(std::string_view key, std::string_view raw) {
    std::vector<double> out;
    std::string v = trim(raw);
    if (!v.empty() && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
    std::size_t start = 0;
    while (start <= v.size()) {
        auto comma = v.find(',', start);
        auto piece = v.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(to_real(key, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "sequences", "structures", "window-size", "window-mode", "normalization", "relax-alphabet",
        "distance", "engine", "k", "kmeans-max-iter", "centroid-update", "kmeans-init", "particle-init",
        "particles", "iterations", "inertia", "c1", "c2", "v-max", "v-max-fraction", "patience", "refine",
        "k-rows", "k-cols", "bicluster-particles", "bicluster-iterations", "bicluster-inertia", "lambda", "velocity-clamp", "min-rows", "min-cols",
        "thresholds", "saa-threshold", "logo-correction", "seed", "trace"};
    return keys;
}

void RunConfig::set(std::string_view raw_key, std::string_view value) {
    std::string key = trim(raw_key);
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string v = trim(value);

    if (key == "sequences") sequences = v;
    else if (key == "structures") structures = v;
    else if (key == "window-size") window_size = to_uint(key, v);
    else if (key == "window-mode") window_mode = parse_window_mode(v);
    else if (key == "normalization") normalization = parse_normalization(v);
    else if (key == "relax-alphabet") relax_alphabet = to_bool(key, v);
    else if (key == "distance") { distance_by_name(v); distance = v; }
    else if (key == "engine") engine = parse_engine(v);
    else if (key == "k") k = to_uint(key, v);
    else if (key == "kmeans-max-iter") kmeans_max_iter = to_uint(key, v);
    else if (key == "centroid-update") centroid_update = parse_centroid_update(v);
    else if (key == "kmeans-init") kmeans_init = parse_kmeans_init(v);
    else if (key == "particle-init") particle_init = parse_kmeans_init(v);
    else if (key == "particles") particles = to_uint(key, v);
    else if (key == "iterations") iterations = to_uint(key, v);
    else if (key == "inertia") inertia = to_real(key, v);
    else if (key == "c1") c1 = to_real(key, v);
    else if (key == "c2") c2 = to_real(key, v);
    else if (key == "v-max") v_max = to_optional_real(key, v);
    else if (key == "v-max-fraction") v_max_fraction = to_real(key, v);
    else if (key == "patience") patience = to_uint(key, v);
    else if (key == "refine") refine = to_bool(key, v);
    else if (key == "k-rows") k_rows = to_uint(key, v);
    else if (key == "k-cols") k_cols = to_uint(key, v);
    else if (key == "bicluster-particles") bicluster_particles = to_uint(key, v);
    else if (key == "bicluster-iterations") bicluster_iterations = to_uint(key, v);
    else if (key == "bicluster-inertia") bicluster_inertia = to_real(key, v);
    else if (key == "min-rows") min_rows = to_uint(key, v);
    else if (key == "min-cols") min_cols = to_uint(key, v);
    else if (key == "lambda") lambda = to_optional_real(key, v);
    else if (key == "velocity-clamp") velocity_clamp = to_real(key, v);
    else if (key == "thresholds") thresholds = to_reals(key, v);
    else if (key == "saa-threshold") saa_threshold = to_real(key, v);
    else if (key == "logo-correction") logo_correction = to_bool(key, v);
    else if (key == "seed") seed = to_uint(key, v);
    else if (key == "trace") trace = to_bool(key, v);
    else throw ValidationError("unknown config key '" + std::string(raw_key) + "'");
}

void RunConfig::validate() const {
    auto check = [](bool ok, const std::string& what) {
        if (!ok) throw ValidationError("config: " + what);
    };
    check(window_size >= 1, "window-size must be positive");
    check(k >= 1, "k must be positive");
    check(kmeans_max_iter >= 1, "kmeans-max-iter must be positive");
    check(particles >= 1 && particles <= kMaxParticles, "particles must be in [1, 100]");
    check(iterations >= 1, "iterations must be positive");
    check(!v_max || *v_max > 0.0, "v-max must be positive");
    check(v_max_fraction > 0.0, "v-max-fraction must be positive");
    check(k_rows >= 1 && k_cols >= 1, "k-rows and k-cols must be positive");
    check(k_cols <= kNumAminoAcids, "k-cols cannot exceed the 20 amino-acid columns");
    check(bicluster_particles <= kMaxParticles, "bicluster-particles must be at most 100");
    check(bicluster_iterations >= 1, "bicluster-iterations must be positive");
    check(!lambda || *lambda >= 0.0, "lambda must be non-negative");
    check(velocity_clamp > 0.0, "velocity-clamp must be positive");
    check(min_rows >= 1 && min_cols >= 1, "min-rows and min-cols must be positive");
    check(!thresholds.empty(), "thresholds must not be empty");
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        check(thresholds[i] >= 0.0 && thresholds[i] <= 1.0, "thresholds must lie in [0, 1]");
        check(i == 0 || thresholds[i - 1] >= thresholds[i], "thresholds must be sorted descending");
    }
    check(saa_threshold >= 0.0 && saa_threshold < 1.0, "saa-threshold must lie in [0, 1)");
}

nlohmann::json RunConfig::to_json() const {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    return {
        {"sequences", sequences},
        {"structures", structures},
        {"window-size", window_size},
        {"window-mode", std::string(to_string(window_mode))},
        {"normalization", std::string(to_string(normalization))},
        {"relax-alphabet", relax_alphabet},
        {"distance", distance},
        {"engine", std::string(to_string(engine))},
        {"k", k},
        {"kmeans-max-iter", kmeans_max_iter},
        {"centroid-update", std::string(to_string(centroid_update))},
        {"kmeans-init", std::string(to_string(kmeans_init))},
        {"particle-init", std::string(to_string(particle_init))},
        {"particles", particles},
        {"iterations", iterations},
        {"inertia", inertia},
        {"c1", c1},
        {"c2", c2},
        {"v-max", opt(v_max)},
        {"v-max-fraction", v_max_fraction},
        {"patience", patience},
        {"refine", refine},
        {"k-rows", k_rows},
        {"k-cols", k_cols},
        {"bicluster-particles", bicluster_particles},
        {"bicluster-iterations", bicluster_iterations},
        {"bicluster-inertia", bicluster_inertia},
        {"lambda", opt(lambda)},
        {"velocity-clamp", velocity_clamp},
        {"min-rows", min_rows},
        {"min-cols", min_cols},
        {"thresholds", thresholds},
        {"saa-threshold", saa_threshold},
        {"logo-correction", logo_correction},
        {"seed", seed},
        {"trace", trace},
    };
}

KMeansConfig RunConfig::kmeans_config() const {
    return {k, kmeans_max_iter, seed, centroid_update, kmeans_init};
}

PsoKMeansConfig RunConfig::pso_kmeans_config() const {
    PsoKMeansConfig c;
    c.k = k;
    c.pso = {particles, iterations, inertia, c1, c2, v_max, seed, patience};
    c.v_max_fraction = v_max_fraction;
    c.init = particle_init;
    c.refine = refine;
    return c;
}

PsoKMeansConfig RunConfig::bicluster_seed_config() const {
    auto c = pso_kmeans_config();
    c.pso.seed = seed + 1;
    return c;
}

BiclusterConfig RunConfig::bicluster_config() const {
    BiclusterConfig c;
    c.pso = {bicluster_particles, bicluster_iterations, bicluster_inertia, c1, c2, std::nullopt, seed + 3, patience};
    c.lambda = lambda;
    c.velocity_clamp = velocity_clamp;
    c.min_rows = min_rows;
    c.min_cols = min_cols;
    return c;
}

} // namespace psomotif
