#pragma once

namespace hytet {

/// Numerical thresholds shared by every module. Values are fixed; callers
/// that need different quadrature accuracy pass a QuadratureConfig instead.
struct Tolerances {
    /// A slack within boundary_rel * (1 + magnitude) of zero is a flat
    /// (degenerate) configuration rather than a failure.
    double boundary_rel = 1e-12;
    /// Square-root arguments in [-sqrt_clamp * scale, 0) are clamped to zero.
    double sqrt_clamp = 1e-10;
    /// |cos| in (1, 1 + arccos_clamp] is clamped and flagged degenerate.
    double arccos_clamp = 1e-12;
    /// Agreement required between the independent ch(l1) expressions.
    double bound_agreement = 1e-12;
    /// Minimum pivot of the Minkowski factorization of -E.
    double embed_pivot = 1e-10;
    /// |det G(theta34)| below this is treated as an already-flat Gram matrix.
    double gram_flat = 1e-14;
    /// Bisection width for the Sforza root of det G(t) = 0.
    double root_width = 1e-14;
    /// Grid used to bracket the Sforza root.
    int root_grid = 256;
};

inline constexpr Tolerances kTol{};

}  // namespace hytet
