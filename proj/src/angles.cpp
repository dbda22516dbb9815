#include "hytet/angles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hytet/config.hpp"
#include "hytet/errors.hpp"

namespace hytet {

namespace {

// Diagonal cofactors within this fraction of the largest cofactor are
// treated as exact zeros (collapsed face opposite that vertex).
constexpr double kZeroBand = 1e-24;

}  // namespace

DihedralAngles dihedral_angles(const CofactorSet& cs) {
    double scale = 0.0;
    for (const auto& row : cs.c)
        for (double v : row) scale = std::max(scale, std::abs(v));
    if (!(scale > 0.0)) throw NotATetrahedronError("all cofactors vanish");

    std::array<double, 4> diag{};
    bool collapsed = false;
    for (int i = 0; i < 4; ++i) {
        const double d = cs.c[i][i];
        if (!std::isfinite(d) || d < -kZeroBand * scale) {
            std::ostringstream msg;
            msg << "diagonal cofactor c" << i + 1 << i + 1 << " = " << d
                << " is not positive";
            throw NotATetrahedronError(msg.str());
        }
        diag[i] = std::max(d, 0.0);
        if (diag[i] <= kZeroBand * scale) collapsed = true;
    }

    DihedralAngles out;
    out.degenerate = collapsed;
    for (std::size_t e = 0; e < kEdgeCount; ++e) {
        // Cofactor on the complementary pair gives the angle along edge e.
        const auto [i, j] = kEdgeVertices[opposite_edge(static_cast<int>(e))];
        const double denom = std::sqrt(diag[i] * diag[j]);
        if (!(denom > 0.0)) {
            out.th[e] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        double cosv = -cs.c[i][j] / denom;
        if (std::abs(cosv) > 1.0) {
            if (std::abs(cosv) > 1.0 + kTol.arccos_clamp) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "cosine of dihedral angle on " << kEdgeNames[e] << " is " << cosv;
                throw NumericalInconsistencyError(msg.str());
            }
            cosv = std::clamp(cosv, -1.0, 1.0);
            out.degenerate = true;
        }
        out.th[e] = std::acos(cosv);
    }
    return out;
}

DihedralAngles dihedral_angles(const EdgeLengths& lengths) {
    return dihedral_angles(cofactors(lengths));
}

GramMatrix gram_from_angles(const DihedralAngles& angles) {
    GramMatrix out;
    for (int r = 0; r < 4; ++r) {
        out.g[r][r] = 1.0;
        for (int s = 0; s < 4; ++s) {
            if (r == s) continue;
            const int e = kGramEdge[r][s];
            const double th = angles.th[e];
            if (!(th >= 0.0 && th <= std::numbers::pi)) {
                std::ostringstream msg;
                msg << "dihedral angle on " << kEdgeNames[e] << " = " << th
                    << " is outside [0, pi]";
                throw DomainError(msg.str());
            }
            out.g[r][s] = -std::cos(th);
        }
    }
    return out;
}

Mat4 cofactor_matrix(const Mat4& m) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::array<std::array<double, 3>, 3> sub{};
            for (int r = 0, rr = 0; r < 4; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < 4; ++c) {
                    if (c == j) continue;
                    sub[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            const double minor = det3(sub);
            out[i][j] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return out;
}

double det4(const Mat4& m) {
    const Mat4 c = cofactor_matrix(m);
    double d = 0.0;
    for (int j = 0; j < 4; ++j) d += m[0][j] * c[0][j];
    return d;
}

}  // namespace hytet
