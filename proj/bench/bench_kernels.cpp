// Serial reference vs OpenMP kernels: Monte Carlo volume and batch edge
// integrals. Reports wall time and checks that both produce identical results.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hytet/batch.hpp"
#include "hytet/oracle.hpp"
#include "hytet/sampling.hpp"

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4'000'000;
    const std::size_t batch = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 200;
    std::printf("threads: %d\n", omp_get_max_threads());

    const hytet::EdgeLengths lengths(1.1, 0.9, 1.3, 1.2, 0.8, 1.0);
    const auto emb = hytet::embed_vertices(hytet::edge_matrix_from_lengths(lengths));
    const hytet::MonteCarloConfig cfg{42, samples, 65536};
    hytet::VolumeResult serial, parallel;
    const double ts = seconds([&] { serial = hytet::volume_monte_carlo_serial(emb, cfg); });
    const double tp = seconds([&] { parallel = hytet::volume_monte_carlo(emb, cfg); });
    const bool mc_same = serial.value == parallel.value &&
                         serial.error_estimate == parallel.error_estimate;
    std::printf("monte_carlo  samples=%llu serial=%.3fs parallel=%.3fs speedup=%.2f identical=%s\n",
                static_cast<unsigned long long>(samples), ts, tp, ts / tp, mc_same ? "yes" : "no");

    const auto inputs = hytet::random_tetrahedra(7, batch);
    std::vector<hytet::BatchEntry> bs, bp;
    const double bts = seconds([&] { bs = hytet::volume_edges_batch_serial(inputs); });
    const double btp = seconds([&] { bp = hytet::volume_edges_batch(inputs); });
    bool batch_same = bs.size() == bp.size();
    for (std::size_t i = 0; batch_same && i < bs.size(); ++i)
        batch_same = bs[i].result.value == bp[i].result.value && bs[i].error == bp[i].error;
    std::printf("batch_edges  inputs=%zu serial=%.3fs parallel=%.3fs speedup=%.2f identical=%s\n",
                batch, bts, btp, bts / btp, batch_same ? "yes" : "no");
    return mc_same && batch_same ? 0 : 1;
}
