#pragma once

#include <cstddef>
#include <string_view>

#include "hytet/angles.hpp"
#include "hytet/core.hpp"
#include "hytet/quadrature.hpp"

namespace hytet {

enum class VolumeRoute { edge_integral, sforza, regular, monte_carlo };

std::string_view to_string(VolumeRoute route);

struct VolumeDiagnostics {
    /// Flat or collapsed input; the value is 0 by construction.
    bool degenerate = false;
    /// A small negative quadrature result was clamped to 0.
    bool clamped_negative = false;
    /// l34 sits on the lower bound l1 (edge route only).
    bool at_lower_endpoint = false;
    /// det E at l34 = l1 and at the actual l34 (edge route only).
    double delta_at_l1 = 0.0;
    double delta_at_l34 = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    /// Root of det G(t) = 0 used as the Sforza lower limit.
    double sforza_root = 0.0;
};

struct VolumeResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    VolumeRoute route = VolumeRoute::edge_integral;
    VolumeDiagnostics diagnostics;
};

/// dV/dl34 with l34 replaced by t, evaluated term by term from the
/// cofactors of E:
///   (1/2) [ -t A / (-D)^(3/2) - sh t B / sqrt(-D) ]
///   A = c14 (c11 c23 - c12 c13) / c11 + c24 (c13 c22 - c12 c23) / c22
///   B = (l24 sh l24 c14 + l23 sh l23 c13) / c11
///     + (l13 sh l13 c23 + l14 sh l14 c24) / c22 + l12 sh l12
/// Throws DomainError when D >= 0 (t outside (l1, l2)) and
/// NotATetrahedronError when c11 or c22 is not positive.
double volume_derivative(const EdgeLengths& lengths, double t);

/// Volume as the integral of volume_derivative from l1 to l34. The
/// substitution t = l1 + (l2 - l1) sin^2(phi) removes the inverse square
/// root endpoint behaviour before tanh-sinh quadrature. Throws
/// NonexistentTetrahedronError when the lengths are not realizable.
VolumeResult volume_edges(const EdgeLengths& lengths, const QuadratureConfig& cfg = {});

/// Integral of volume_derivative over [t_from, t_to] inside [l1, l2] for
/// the five fixed lengths of `lengths` (its l34 is ignored).
VolumeResult integrate_derivative(const EdgeLengths& lengths, double t_from, double t_to,
                                  const QuadratureConfig& cfg = {});

/// Regular tetrahedron with edge a, from the edge integrand specialised to
/// equal lengths:
///   V = (1/2) int_0^a (A - B) / (C sqrt(D)) dt,  c = ch a, x = ch t
///   A = 2 t c^2 sqrt((c - 1)(x - 1))
///   B = a (1 - 4c + 2c^2 + x) sqrt((c + 1)(x + 1))
///   C = 1 - 2c^2 + x
///   D = 4c^2 - c - 1 - x - c x
VolumeResult volume_regular(double a, const QuadratureConfig& cfg = {});

/// Integrand of volume_regular at t (exposed for comparison tests).
double regular_integrand(double a, double t);

/// Volume from the dihedral angles:
///   V = (1/4) int_{t0}^{th34} log[(c(t) - sqrt(-det G(t)) sin t) /
///                                 (c(t) + sqrt(-det G(t)) sin t)] dt
/// where G(t) is the Gram matrix with -cos t on the edge-34 entry, c(t) is
/// its cofactor on the edge-12 entry, and t0 is the first root of
/// det G(t) = 0 above th34. Throws InconsistentAnglesError when
/// det G(th34) > 0 or no root is bracketed in (th34, pi).
VolumeResult volume_sforza(const DihedralAngles& angles, const QuadratureConfig& cfg = {});

/// Quadrature settings used for finite-difference checks.
inline constexpr QuadratureConfig kTightQuadrature{1e-15, 1e-15, 15};

/// |dV/dl34 + (1/2) sum l_ij dth_ij/dl34| with both derivatives replaced by
/// central difference quotients of step h in l34. Throws PreconditionError
/// for degenerate input or when l34 +- h leaves (l1, l2).
double schlafli_residual(const EdgeLengths& lengths, double h,
                         const QuadratureConfig& cfg = kTightQuadrature);

}  // namespace hytet
