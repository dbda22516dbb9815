#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "hytet/errors.hpp"
#include "hytet/oracle.hpp"

namespace hytet {

namespace {

constexpr int kClausenTerms = 40;

// zeta(2k) / (k (2k + 1) (2 pi)^(2k)) for k = 1..kClausenTerms.
const std::array<double, kClausenTerms>& clausen_coefficients() {
    static const std::array<double, kClausenTerms> coeffs = [] {
        std::array<double, kClausenTerms> c{};
        const double two_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
        double scale = 1.0;
        for (int k = 1; k <= kClausenTerms; ++k) {
            scale /= two_pi2;
            c[k - 1] = boost::math::zeta(2.0 * k) / (k * (2.0 * k + 1.0)) * scale;
        }
        return c;
    }();
    return coeffs;
}

// Cl2(theta) for |theta| <= pi.
double clausen2(double theta) {
    if (theta == 0.0) return 0.0;
    const auto& c = clausen_coefficients();
    const double t2 = theta * theta;
    double power = theta;
    double sum = 0.0;
    for (int k = 0; k < kClausenTerms; ++k) {
        power *= t2;
        const double term = c[k] * power;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return theta - theta * std::log(std::abs(theta)) + sum;
}

double det5(std::array<std::array<double, 5>, 5> a) {
    double det = 1.0;
    for (int col = 0; col < 5; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 5; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

double lobachevsky(double x) {
    if (!std::isfinite(x)) throw DomainError("lobachevsky argument must be finite");
    // Lambda is odd and pi-periodic.
    const double pi = std::numbers::pi;
    double r = std::remainder(x, pi);
    if (r == -0.5 * pi) r = 0.5 * pi;
    return 0.5 * clausen2(2.0 * r);
}

double lobachevsky_fourier(double x, std::uint64_t terms) {
    double sum = 0.0;
    for (std::uint64_t n = terms; n >= 1; --n) {
        const double nd = static_cast<double>(n);
        sum += std::sin(2.0 * nd * x) / (2.0 * nd * nd);
    }
    return sum;
}

double ideal_regular_volume() { return 3.0 * lobachevsky(std::numbers::pi / 3.0); }

double euclidean_volume_cm(const EdgeLengths& lengths) {
    std::array<std::array<double, 5>, 5> m{};
    double scale = 0.0;
    for (int i = 1; i < 5; ++i) m[0][i] = m[i][0] = 1.0;
    for (std::size_t e = 0; e < kEdgeCount; ++e) {
        const auto [i, j] = kEdgeVertices[e];
        const double d2 = lengths[e] * lengths[e];
        m[i + 1][j + 1] = m[j + 1][i + 1] = d2;
        scale = std::max(scale, d2);
    }
    const double cm = det5(m);
    const double tol = 1e-12 * scale * scale * scale;
    if (cm < -tol) throw NotRealizableError("lengths are not Euclidean-realizable");
    return std::sqrt(std::max(cm, 0.0) / 288.0);
}

}  // namespace hytet
