#include "hytet/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "double_double.hpp"
#include "hytet/errors.hpp"

namespace hytet {

namespace {

using detail::DoubleDouble;

void check_length(double v, std::size_t idx) {
    if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("edge length " + std::string(kEdgeNames[idx]) +
                          " must be finite and nonnegative, got " +
                          std::to_string(v));
    }
}

// Rows/columns of a 4x4 matrix that survive deleting index k.
constexpr std::array<std::array<int, 3>, 4> kKeep{
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

using Sub3 = std::array<std::array<double, 3>, 3>;

Sub3 submatrix(const Mat4& m, int row, int col) {
    Sub3 out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r][c] = m[kKeep[row][r]][kKeep[col][c]];
    return out;
}

DoubleDouble det3_dd(const Sub3& a) {
    auto prod3 = [](double x, double y, double z) {
        return detail::two_prod(x, y) * z;
    };
    DoubleDouble d = prod3(a[0][0], a[1][1], a[2][2]);
    d += prod3(a[0][1], a[1][2], a[2][0]);
    d += prod3(a[0][2], a[1][0], a[2][1]);
    d += -prod3(a[0][2], a[1][1], a[2][0]);
    d += -prod3(a[0][0], a[1][2], a[2][1]);
    d += -prod3(a[0][1], a[1][0], a[2][2]);
    return d;
}

// Sum of all entries of adj(a), i.e. the sum of all signed 2x2 cofactors.
DoubleDouble adjugate_sum_dd(const Sub3& a) {
    DoubleDouble sum;
    for (int p = 0; p < 3; ++p) {
        const int r0 = p == 0 ? 1 : 0;
        const int r1 = p == 2 ? 1 : 2;
        for (int q = 0; q < 3; ++q) {
            const int c0 = q == 0 ? 1 : 0;
            const int c1 = q == 2 ? 1 : 2;
            DoubleDouble minor = detail::two_prod(a[r0][c0], a[r1][c1]) -
                                 detail::two_prod(a[r0][c1], a[r1][c0]);
            sum += ((p + q) % 2 == 0) ? minor : -minor;
        }
    }
    return sum;
}

}  // namespace

EdgeLengths::EdgeLengths(double l12, double l13, double l14, double l23,
                         double l24, double l34)
    : EdgeLengths(std::array<double, kEdgeCount>{l12, l13, l14, l23, l24, l34}) {}

EdgeLengths::EdgeLengths(const std::array<double, kEdgeCount>& values)
    : l_(values) {
    for (std::size_t i = 0; i < kEdgeCount; ++i) check_length(l_[i], i);
}

EdgeLengths EdgeLengths::regular(double a) { return {a, a, a, a, a, a}; }

EdgeLengths EdgeLengths::with_l34(double t) const {
    auto v = l_;
    v[5] = t;
    return EdgeLengths(v);
}

EdgeLengths relabel(const EdgeLengths& lengths, const Permutation& perm) {
    std::array<double, kEdgeCount> v{};
    for (std::size_t e = 0; e < kEdgeCount; ++e) {
        const auto [i, j] = kEdgeVertices[e];
        v[e] = lengths.between(perm[i], perm[j]);
    }
    return EdgeLengths(v);
}

std::array<Permutation, 24> all_permutations() {
    std::array<Permutation, 24> out{};
    Permutation p{0, 1, 2, 3};
    std::size_t k = 0;
    do {
        out[k++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Mat4 permute(const Mat4& m, const Permutation& perm) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = m[perm[i]][perm[j]];
    return out;
}

double JacobiResiduals::max_absolute() const {
    return *std::max_element(residuals.begin(), residuals.end());
}

double JacobiResiduals::max_relative() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < kCount; ++k)
        worst = std::max(worst, residuals[k] / std::max(1.0, std::abs(lhs[k])));
    return worst;
}

EdgeMatrix edge_matrix_from_lengths(const EdgeLengths& lengths) {
    EdgeMatrix m;
    for (int i = 0; i < 4; ++i) m.e[i][i] = 1.0;
    for (std::size_t k = 0; k < kEdgeCount; ++k) {
        const auto [i, j] = kEdgeVertices[k];
        check_length(lengths[k], k);
        m.e[i][j] = m.e[j][i] = std::cosh(lengths[k]);
    }
    return m;
}

double det3(const Sub3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

CofactorSet cofactors(const EdgeMatrix& m) {
    CofactorSet out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double minor = det3(submatrix(m.e, i, j));
            out.c[i][j] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    out.delta = 0.0;
    for (int j = 0; j < 4; ++j) out.delta += m.e[0][j] * out.c[0][j];
    return out;
}

CofactorSet cofactors(const EdgeLengths& lengths) {
    // E = J + 2S with J the all-ones matrix and s_ij = sh^2(l_ij/2), so
    // det(J + 2M) = det(2M) + 1^T adj(2M) 1 for every square submatrix M.
    Mat4 s{};
    for (std::size_t k = 0; k < kEdgeCount; ++k) {
        const auto [i, j] = kEdgeVertices[k];
        const double h = std::sinh(0.5 * lengths[k]);
        s[i][j] = s[j][i] = h * h;
    }
    CofactorSet out;
    std::array<std::array<DoubleDouble, 4>, 4> cof_s{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Sub3 sub = submatrix(s, i, j);
            const DoubleDouble det_sub = det3_dd(sub);
            const DoubleDouble minor = det_sub * 8.0 + adjugate_sum_dd(sub) * 4.0;
            const bool even = (i + j) % 2 == 0;
            out.c[i][j] = even ? minor.value() : -minor.value();
            cof_s[i][j] = even ? det_sub : -det_sub;
        }
    }
    DoubleDouble det_s;
    DoubleDouble adj_sum;
    for (int j = 0; j < 4; ++j) det_s += cof_s[0][j] * s[0][j];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) adj_sum += cof_s[i][j];
    out.delta = (det_s * 16.0 + adj_sum * 8.0).value();
    return out;
}

JacobiResiduals jacobi_residuals(const EdgeMatrix& m, const CofactorSet& cs) {
    // 1-based accessors keep the identities readable.
    auto c = [&](int i, int j) { return cs.c[i - 1][j - 1]; };
    auto ch = [&](int i, int j) { return m.e[i - 1][j - 1]; };
    auto sh2 = [&](int i, int j) { return ch(i, j) * ch(i, j) - 1.0; };
    const double d = cs.delta;

    const std::array<std::pair<double, double>, JacobiResiduals::kCount> ids{{
        {c(1, 1) * c(2, 2) - c(1, 2) * c(1, 2), -d * sh2(3, 4)},
        {c(1, 1) * c(3, 3) - c(1, 3) * c(1, 3), -d * sh2(2, 4)},
        {c(2, 2) * c(3, 3) - c(2, 3) * c(2, 3), -d * sh2(1, 4)},
        {c(3, 3) * c(4, 4) - c(3, 4) * c(3, 4), -d * sh2(1, 2)},
        {c(2, 2) * c(4, 4) - c(2, 4) * c(2, 4), -d * sh2(1, 3)},
        {c(1, 1) * c(4, 4) - c(1, 4) * c(1, 4), -d * sh2(2, 3)},
        {c(1, 4) * c(2, 3) - c(1, 2) * c(3, 4),
         d * (ch(1, 4) * ch(2, 3) - ch(1, 2) * ch(3, 4))},
        {c(1, 3) * c(2, 4) - c(1, 2) * c(3, 4),
         d * (ch(1, 3) * ch(2, 4) - ch(1, 2) * ch(3, 4))},
        {c(1, 3) * c(4, 4) - c(1, 4) * c(3, 4), -d * (ch(1, 3) - ch(1, 2) * ch(2, 3))},
        {c(1, 3) * c(1, 4) - c(1, 1) * c(3, 4), d * (ch(3, 4) - ch(2, 3) * ch(2, 4))},
        {c(3, 3) * c(1, 4) - c(3, 4) * c(1, 3), -d * (ch(1, 4) - ch(1, 2) * ch(2, 4))},
        {c(2, 3) * c(2, 4) - c(3, 4) * c(2, 2), d * (ch(3, 4) - ch(1, 3) * ch(1, 4))},
        {c(2, 3) * c(4, 4) - c(2, 4) * c(3, 4), -d * (ch(2, 3) - ch(1, 2) * ch(1, 3))},
        {c(3, 3) * c(2, 4) - c(3, 4) * c(2, 3), -d * (ch(2, 4) - ch(1, 2) * ch(1, 4))},
    }};

    JacobiResiduals out;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        out.lhs[k] = ids[k].first;
        out.residuals[k] = std::abs(ids[k].first - ids[k].second);
    }
    return out;
}

}  // namespace hytet
