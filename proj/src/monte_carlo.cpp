#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hytet/errors.hpp"
#include "hytet/oracle.hpp"

namespace hytet {

namespace {

using Vec3 = std::array<double, 3>;

// SplitMix64 output for position `index` of the stream selected by `seed`.
// Counter-based, so any sample can be generated without the ones before it.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64(seed, index) >> 11) * 0x1.0p-53;
}

struct Klein {
    std::array<Vec3, 4> x{};
    double volume = 0.0;
};

Klein klein_tetrahedron(const VertexEmbedding& emb) {
    Klein k;
    for (int i = 0; i < 4; ++i)
        for (int d = 0; d < 3; ++d) k.x[i][d] = emb.v[i][d + 1] / emb.v[i][0];
    Vec3 a{}, b{}, c{};
    for (int d = 0; d < 3; ++d) {
        a[d] = k.x[1][d] - k.x[0][d];
        b[d] = k.x[2][d] - k.x[0][d];
        c[d] = k.x[3][d] - k.x[0][d];
    }
    const double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
    k.volume = std::abs(det) / 6.0;
    return k;
}

struct BlockSum {
    double f = 0.0;
    double f2 = 0.0;
};

BlockSum run_block(const Klein& k, std::uint64_t seed, std::uint64_t first,
                   std::uint64_t count) {
    BlockSum s;
    for (std::uint64_t n = first; n < first + count; ++n) {
        std::array<double, 3> u{uniform01(seed, 3 * n), uniform01(seed, 3 * n + 1),
                                uniform01(seed, 3 * n + 2)};
        std::sort(u.begin(), u.end());
        const std::array<double, 4> w{u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};
        double r2 = 0.0;
        for (int d = 0; d < 3; ++d) {
            const double p = w[0] * k.x[0][d] + w[1] * k.x[1][d] + w[2] * k.x[2][d] +
                             w[3] * k.x[3][d];
            r2 += p * p;
        }
        const double g = 1.0 - r2;
        const double f = 1.0 / (g * g);
        s.f += f;
        s.f2 += f * f;
    }
    return s;
}

void check_config(const MonteCarloConfig& cfg) {
    if (cfg.samples == 0) throw DomainError("Monte Carlo needs at least one sample");
    if (cfg.chunk == 0) throw DomainError("Monte Carlo chunk must be positive");
}

VolumeResult finish(const Klein& k, const std::vector<BlockSum>& blocks, std::uint64_t n) {
    double sf = 0.0;
    double sf2 = 0.0;
    for (const BlockSum& b : blocks) {
        sf += b.f;
        sf2 += b.f2;
    }
    const double nd = static_cast<double>(n);
    const double mean = sf / nd;
    const double var = n > 1 ? std::max(0.0, (sf2 - nd * mean * mean) / (nd - 1.0)) : 0.0;
    VolumeResult r;
    r.route = VolumeRoute::monte_carlo;
    r.value = k.volume * mean;
    r.error_estimate = k.volume * std::sqrt(var / nd);
    r.evaluations = static_cast<std::size_t>(n);
    return r;
}

std::uint64_t block_count(std::uint64_t samples) {
    return (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
}

std::uint64_t block_size(std::uint64_t b, std::uint64_t samples) {
    return std::min(kMonteCarloBlock, samples - b * kMonteCarloBlock);
}

}  // namespace

VolumeResult volume_monte_carlo(const VertexEmbedding& emb, const MonteCarloConfig& cfg) {
    check_config(cfg);
    const Klein k = klein_tetrahedron(emb);
    const std::uint64_t nb = block_count(cfg.samples);
    std::vector<BlockSum> blocks(nb);
    const std::int64_t per_chunk =
        static_cast<std::int64_t>(std::max<std::uint64_t>(1, cfg.chunk / kMonteCarloBlock));
    const auto nbi = static_cast<std::int64_t>(nb);
#pragma omp parallel for schedule(dynamic, per_chunk)
    for (std::int64_t b = 0; b < nbi; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        blocks[ub] = run_block(k, cfg.seed, ub * kMonteCarloBlock, block_size(ub, cfg.samples));
    }
    return finish(k, blocks, cfg.samples);
}

VolumeResult volume_monte_carlo_serial(const VertexEmbedding& emb, const MonteCarloConfig& cfg) {
    check_config(cfg);
    const Klein k = klein_tetrahedron(emb);
    const std::uint64_t nb = block_count(cfg.samples);
    std::vector<BlockSum> blocks(nb);
    for (std::uint64_t b = 0; b < nb; ++b)
        blocks[b] = run_block(k, cfg.seed, b * kMonteCarloBlock, block_size(b, cfg.samples));
    return finish(k, blocks, cfg.samples);
}

}  // namespace hytet
