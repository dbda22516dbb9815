#include <gtest/gtest.h>

#include <omp.h>

#include "fixtures.hpp"
#include "hytet/batch.hpp"
#include "hytet/oracle.hpp"
#include "hytet/sampling.hpp"

using namespace hytet;

namespace {

class ThreadCount {
public:
    explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadCount() { omp_set_num_threads(saved_); }

private:
    int saved_;
};

}  // namespace

TEST(MonteCarloDeterminism, IndependentOfThreadsAndChunk) {
    const VertexEmbedding emb =
        embed_vertices(edge_matrix_from_lengths(fixtures::kFrozen[0].lengths));
    const VolumeResult ref = volume_monte_carlo_serial(emb, {99, 100000, 65536});
    for (int threads : {1, 2, 4}) {
        ThreadCount tc(threads);
        for (std::uint64_t chunk : {1ULL, 4096ULL, 10000ULL, 1000000ULL}) {
            const VolumeResult r = volume_monte_carlo(emb, {99, 100000, chunk});
            EXPECT_EQ(r.value, ref.value) << threads << " " << chunk;
            EXPECT_EQ(r.error_estimate, ref.error_estimate);
        }
    }
}

TEST(MonteCarloDeterminism, SeedChangesEstimate) {
    const VertexEmbedding emb = embed_vertices(edge_matrix_from_lengths(EdgeLengths::regular(1.0)));
    EXPECT_NE(volume_monte_carlo(emb, {1, 10000, 65536}).value,
              volume_monte_carlo(emb, {2, 10000, 65536}).value);
}

TEST(Batch, ParallelMatchesSerial) {
    std::vector<EdgeLengths> inputs = random_tetrahedra(61, 24);
    inputs.push_back(fixtures::five_ones(1.7));
    const auto serial = volume_edges_batch_serial(inputs);
    ThreadCount tc(3);
    const auto parallel = volume_edges_batch(inputs);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].result.value, parallel[i].result.value);
        EXPECT_EQ(serial[i].error, parallel[i].error);
    }
    EXPECT_FALSE(serial.back().error.empty());
    EXPECT_TRUE(serial.front().error.empty());
}
