#pragma once

#include <array>
#include <cstdint>

#include "hytet/angles.hpp"
#include "hytet/core.hpp"
#include "hytet/volume.hpp"

namespace hytet {

/// Minkowski 4-vector (x0; x1, x2, x3) under the form -x0 y0 + x1 y1 + x2 y2 + x3 y3.
using Vec4 = std::array<double, 4>;

double minkowski(const Vec4& u, const Vec4& v);

/// Vertices on the upper sheet of the hyperboloid <v, v> = -1 with
/// <vi, vj> = -ch l_ij. gram_resid is the largest deviation from -E.
struct VertexEmbedding {
    std::array<Vec4, 4> v{};
    double gram_resid = 0.0;
};

/// Lower-triangular factorisation of -E: v1 = (1, 0, 0, 0) and vertex k
/// only uses coordinates 0..k. Throws DegenerateEmbeddingError when a
/// squared pivot is within 1e-10 of zero (flat configuration) and
/// NotRealizableError when one is negative.
VertexEmbedding embed_vertices(const EdgeMatrix& e);

/// Dihedral angles from coordinates: face angles at a vertex of each edge
/// from the tangent vectors, then the spherical law of cosines on the
/// vertex link.
DihedralAngles dihedral_angles_geometric(const VertexEmbedding& emb);

struct MonteCarloConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    /// Samples per parallel work item. Does not affect the result.
    std::uint64_t chunk = 65536;
};

/// Samples are reduced in fixed blocks of this size, block sums in index
/// order, so the estimate depends only on (seed, samples).
inline constexpr std::uint64_t kMonteCarloBlock = 4096;

/// Volume estimate in the Klein model: the Euclidean volume of the
/// projected tetrahedron times the mean of (1 - |x|^2)^-2 over uniform
/// barycentric samples. error_estimate is one standard error. Runs the
/// blocks in parallel with OpenMP.
VolumeResult volume_monte_carlo(const VertexEmbedding& emb, const MonteCarloConfig& cfg);

/// Single-threaded reference for volume_monte_carlo; returns bit-identical
/// results.
VolumeResult volume_monte_carlo_serial(const VertexEmbedding& emb, const MonteCarloConfig& cfg);

/// Euclidean tetrahedron volume sqrt(CM / 288) from the Cayley-Menger
/// determinant of the squared lengths. Throws NotRealizableError when the
/// determinant is negative beyond rounding.
double euclidean_volume_cm(const EdgeLengths& lengths);

/// Lobachevsky function -int_0^x log|2 sin u| du, computed as Cl2(2x) / 2
/// after reduction to (-pi/2, pi/2] with the Clausen power series.
double lobachevsky(double x);

/// Partial Fourier sum sum_{n=1}^{terms} sin(2 n x) / (2 n^2). Converges
/// slowly; only used to cross-check lobachevsky.
double lobachevsky_fourier(double x, std::uint64_t terms);

/// 3 Lambda(pi/3), the volume of the regular ideal tetrahedron.
double ideal_regular_volume();

}  // namespace hytet
