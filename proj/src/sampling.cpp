#include "hytet/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "hytet/existence.hpp"

namespace hytet {

EdgeLengths random_tetrahedron(std::mt19937_64& rng, const SamplingRange& range) {
    std::uniform_real_distribution<double> len(range.min_length, range.max_length);
    std::uniform_real_distribution<double> frac(range.u_min, range.u_max);
    auto face_ok = [&](double l12, double a, double b) {
        return a + b - l12 >= range.min_slack && l12 - std::abs(a - b) >= range.min_slack;
    };
    for (;;) {
        const double l12 = len(rng), l13 = len(rng), l14 = len(rng);
        const double l23 = len(rng), l24 = len(rng);
        if (!face_ok(l12, l13, l23) || !face_ok(l12, l14, l24)) continue;
        const L34Bounds b = l34_bounds(l12, l13, l14, l23, l24);
        const double l34 = b.l1 + frac(rng) * (b.l2 - b.l1);
        return {l12, l13, l14, l23, l24, l34};
    }
}

std::vector<EdgeLengths> random_tetrahedra(std::uint64_t seed, std::size_t count,
                                           const SamplingRange& range) {
    std::mt19937_64 rng(seed);
    std::vector<EdgeLengths> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_tetrahedron(rng, range));
    return out;
}

}  // namespace hytet
