#include <algorithm>
#include <cmath>
#include <sstream>

#include "hytet/config.hpp"
#include "hytet/errors.hpp"
#include "hytet/oracle.hpp"

namespace hytet {

namespace {

// Angle between two tangent vectors, 2 atan2(|a - b|, |a + b|) on unit
// vectors, which stays accurate near 0 and pi.
double tangent_angle(const Vec4& a, const Vec4& b) {
    const double na = std::sqrt(std::max(minkowski(a, a), 0.0));
    const double nb = std::sqrt(std::max(minkowski(b, b), 0.0));
    Vec4 diff{}, sum{};
    for (int k = 0; k < 4; ++k) {
        diff[k] = a[k] / na - b[k] / nb;
        sum[k] = a[k] / na + b[k] / nb;
    }
    return 2.0 * std::atan2(std::sqrt(std::max(minkowski(diff, diff), 0.0)),
                            std::sqrt(std::max(minkowski(sum, sum), 0.0)));
}

// Projection of p onto the tangent space at the hyperboloid point v.
Vec4 tangent(const Vec4& p, const Vec4& v) {
    const double s = minkowski(p, v);
    Vec4 u{};
    for (int k = 0; k < 4; ++k) u[k] = p[k] + s * v[k];
    return u;
}

}  // namespace

double minkowski(const Vec4& u, const Vec4& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

VertexEmbedding embed_vertices(const EdgeMatrix& e) {
    VertexEmbedding out;
    out.v[0] = {1.0, 0.0, 0.0, 0.0};
    for (int k = 1; k < 4; ++k) {
        Vec4& vk = out.v[k];
        vk = {};
        vk[0] = e.e[0][k];
        for (int j = 1; j < k; ++j) {
            const Vec4& vj = out.v[j];
            double s = -e.e[j][k] + vj[0] * vk[0];
            for (int m = 1; m < j; ++m) s -= vj[m] * vk[m];
            vk[j] = s / vj[j];
        }
        double pivot2 = (vk[0] - 1.0) * (vk[0] + 1.0);
        for (int m = 1; m < k; ++m) pivot2 -= vk[m] * vk[m];
        if (std::abs(pivot2) <= kTol.embed_pivot) {
            std::ostringstream msg;
            msg << "flat configuration: vertex " << k + 1
                << " lies in the span of the previous vertices (rank " << k << ")";
            throw DegenerateEmbeddingError(msg.str(), k);
        }
        if (pivot2 < 0.0) throw NotRealizableError("-E does not have signature (1,3)");
        vk[k] = std::sqrt(pivot2);
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const double target = i == j ? -1.0 : -e.e[i][j];
            out.gram_resid = std::max(out.gram_resid,
                                      std::abs(minkowski(out.v[i], out.v[j]) - target));
        }
    }
    return out;
}

DihedralAngles dihedral_angles_geometric(const VertexEmbedding& emb) {
    DihedralAngles out;
    for (std::size_t e = 0; e < kEdgeCount; ++e) {
        const auto [i, j] = kEdgeVertices[e];
        const auto [k, l] = kEdgeVertices[opposite_edge(static_cast<int>(e))];
        const Vec4& v = emb.v[j];
        const Vec4 ui = tangent(emb.v[i], v);
        const Vec4 uk = tangent(emb.v[k], v);
        const Vec4 ul = tangent(emb.v[l], v);
        const double kji = tangent_angle(uk, ui);
        const double lji = tangent_angle(ul, ui);
        const double kjl = tangent_angle(uk, ul);
        const double denom = std::sin(kji) * std::sin(lji);
        if (!(denom > 0.0))
            throw DegenerateEmbeddingError("face angle of 0 or pi at a vertex", 3);
        const double cosv = (std::cos(kjl) - std::cos(kji) * std::cos(lji)) / denom;
        out.th[e] = std::acos(std::clamp(cosv, -1.0, 1.0));
    }
    return out;
}

}  // namespace hytet
