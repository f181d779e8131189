#include "doctest.h"

#include <algorithm>

#include "psomotif/error.hpp"
#include "psomotif/kmeans.hpp"
#include "psomotif/psokmeans.hpp"
#include "synthetic.hpp"

using namespace psomotif;

namespace {

Matrix duplicate_pairs() { return Matrix(4, 2, std::vector<double>{0, 0, 0, 0, 10, 10, 10, 10}); }

// Intra-cluster fitness of a single centroid at the componentwise mean.
double mean_centroid_fitness(const Matrix& data) {
    Matrix c(1, data.cols());
    for (std::size_t i = 0; i < data.rows(); ++i)
        for (std::size_t j = 0; j < data.cols(); ++j) c(0, j) += data(i, j) / static_cast<double>(data.rows());
    std::vector<std::size_t> asg(data.rows(), 0);
    return intra_cluster_fitness(data, asg, c);
}

} // namespace

TEST_CASE("assign_nearest breaks ties toward the lower index") {
    Matrix data(1, 1, std::vector<double>{5});
    Matrix cent(2, 1, std::vector<double>{4, 6});
    CHECK(assign_nearest(data, cent, cityblock_distance())[0] == 0);
}

TEST_CASE("centroid update keeps the previous centroid of an empty cluster") {
    Matrix data(3, 1, std::vector<double>{1, 2, 9});
    Matrix prev(2, 1, std::vector<double>{0, 100});
    std::vector<std::size_t> asg{0, 0, 0};
    auto mean = update_centroids(data, asg, prev, CentroidUpdate::mean);
    CHECK(mean(0, 0) == 4.0);
    CHECK(mean(1, 0) == 100.0);
    auto med = update_centroids(data, asg, prev, CentroidUpdate::median);
    CHECK(med(0, 0) == 2.0);
}

TEST_CASE("separated duplicate pairs are split with zero fitness for every seed") {
    auto data = duplicate_pairs();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (auto init : {KMeansInit::plusplus, KMeansInit::sample, KMeansInit::balanced}) {
            KMeansConfig cfg;
            cfg.k = 2;
            cfg.seed = seed;
            cfg.init = init;
            auto cs = kmeans_run(data, cfg);
            CHECK(cs.final_fitness == 0.0);
            CHECK(cs.assignment[0] == cs.assignment[1]);
            CHECK(cs.assignment[2] == cs.assignment[3]);
            CHECK(cs.assignment[0] != cs.assignment[2]);
        }
    }
}

TEST_CASE("k equal to the item count gives singleton clusters") {
    Matrix data(5, 1, std::vector<double>{1, 4, 9, 16, 25});
    KMeansConfig cfg;
    cfg.k = 5;
    auto cs = kmeans_run(data, cfg);
    CHECK(cs.final_fitness == 0.0);
    auto a = cs.assignment;
    std::sort(a.begin(), a.end());
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
}

TEST_CASE("k-means contract checks") {
    Matrix data(3, 1);
    KMeansConfig cfg;
    cfg.k = 4;
    CHECK_THROWS_AS(kmeans_run(data, cfg), ContractViolation);
    cfg.k = 0;
    CHECK_THROWS_AS(kmeans_run(data, cfg), ContractViolation);
}

TEST_CASE("k-means is deterministic for a seed and reports a consistent fitness") {
    auto blobs = synth::three_blobs(4);
    KMeansConfig cfg;
    cfg.k = 3;
    cfg.seed = 9;
    auto a = kmeans_run(blobs.data, cfg);
    auto b = kmeans_run(blobs.data, cfg);
    CHECK(a.assignment == b.assignment);
    CHECK(a.final_fitness == b.final_fitness);
    CHECK(a.final_fitness == doctest::Approx(intra_cluster_fitness(blobs.data, a.assignment, a.centroids)));
    CHECK(a.converged);
}

TEST_CASE("sample_items returns distinct items") {
    auto blobs = synth::three_blobs(1);
    for (auto init : {KMeansInit::plusplus, KMeansInit::sample}) {
        auto items = sample_items(blobs.data, 10, init, cityblock_distance(), 5);
        std::sort(items.begin(), items.end());
        CHECK(std::adjacent_find(items.begin(), items.end()) == items.end());
    }
}

TEST_CASE("centroid codec round-trips") {
    CentroidCodec codec(3, 2);
    Matrix c(3, 2, std::vector<double>{1, 2, 3, 4, 5, 6});
    auto pos = codec.encode(c);
    CHECK(pos.size() == codec.length());
    CHECK(codec.decode(pos) == c);
}

TEST_CASE("clustering objective penalizes empty clusters") {
    auto data = duplicate_pairs();
    ClusteringObjective obj(data, 2);
    // both centroids on the first pair: cluster 1 is empty
    std::vector<double> collapsed{0, 0, 0, 0};
    std::vector<double> split{0, 0, 10, 10};
    CHECK(obj(split) == 0.0);
    CHECK(obj(collapsed) > obj.spread() / 2.0 - 1e-12);
    CHECK(obj.spread() > 0.0);
}

TEST_CASE("PSO k-means on duplicate pairs reaches zero fitness") {
    auto data = duplicate_pairs();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PsoKMeansConfig cfg;
        cfg.k = 2;
        cfg.pso.seed = seed;
        auto cs = pso_kmeans(data, cfg);
        CHECK(cs.final_fitness == doctest::Approx(0.0));
        CHECK(cs.assignment[0] != cs.assignment[2]);
    }
}

TEST_CASE("PSO k-means with k=1 does no worse than the mean centroid") {
    auto blobs = synth::three_blobs(2);
    PsoKMeansConfig cfg;
    cfg.k = 1;
    cfg.pso.max_iter = 100;
    auto cs = pso_kmeans(blobs.data, cfg);
    CHECK(cs.final_fitness <= mean_centroid_fitness(blobs.data) + 1e-9);
}

TEST_CASE("PSO k-means gbest trace never increases and refinement never hurts") {
    auto data = synth::three_blobs_with_noise(3);
    PsoKMeansConfig cfg;
    cfg.k = 3;
    cfg.pso.seed = 7;
    auto r = pso_kmeans_run(data, cfg);
    for (std::size_t i = 1; i < r.swarm.trace.size(); ++i) CHECK(r.swarm.trace[i] <= r.swarm.trace[i - 1]);
    cfg.refine = true;
    auto refined = pso_kmeans(data, cfg);
    CHECK(refined.final_fitness <= r.clusters.final_fitness + 1e-12);
}

TEST_CASE("PSO k-means is deterministic for a seed") {
    auto data = synth::three_blobs_with_noise(5);
    PsoKMeansConfig cfg;
    cfg.k = 3;
    cfg.pso.seed = 42;
    auto a = pso_kmeans(data, cfg);
    auto b = pso_kmeans(data, cfg);
    CHECK(a.assignment == b.assignment);
    CHECK(a.centroids == b.centroids);
}
