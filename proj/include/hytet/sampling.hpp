#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hytet/core.hpp"

namespace hytet {

struct SamplingRange {
    double min_length = 0.2;
    double max_length = 2.5;
    /// l34 = l1 + u (l2 - l1) with u drawn from [u_min, u_max].
    double u_min = 0.1;
    double u_max = 0.9;
    /// Minimum triangle-inequality slack for the faces through edge 1-2.
    double min_slack = 0.02;
};

/// One valid, non-degenerate tetrahedron: l12..l24 uniform in the range
/// subject to both face inequalities, then l34 strictly inside [l1, l2].
EdgeLengths random_tetrahedron(std::mt19937_64& rng, const SamplingRange& range = {});

/// `count` tetrahedra from a generator seeded with `seed`.
std::vector<EdgeLengths> random_tetrahedra(std::uint64_t seed, std::size_t count,
                                           const SamplingRange& range = {});

}  // namespace hytet
