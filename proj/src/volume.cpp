#include "hytet/volume.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hytet/config.hpp"
#include "hytet/errors.hpp"
#include "hytet/existence.hpp"

namespace hytet {

namespace {

// sinh(q) / q
double shc(double q) { return q == 0.0 ? 1.0 : std::sinh(q) / q; }

// Edge-route integrand with the five fixed lengths cached. The theta34 term
// uses the Jacobi reductions
//   c11 c23 - c12 c13 = D (ch l24 ch t - ch l23)
//   c13 c22 - c12 c23 = D (ch l14 ch t - ch l13)
// so no cofactor product is divided by the vanishing determinant, and
//   -D = sh^2 l12 (ch t - ch l1)(ch l2 - ch t)
// is taken in factored form.
class EdgeIntegrand {
public:
    EdgeIntegrand(const EdgeLengths& lengths, double l1, double l2)
        : lengths_(lengths), l1_(l1), l2_(l2), w_(l2 - l1) {
        sh12_ = std::sinh(lengths.l12());
        ch13_ = std::cosh(lengths.l13());
        ch14_ = std::cosh(lengths.l14());
        ch23_ = std::cosh(lengths.l23());
        ch24_ = std::cosh(lengths.l24());
        for (std::size_t e = 0; e < kEdgeCount; ++e)
            wsh_[e] = lengths[e] * std::sinh(lengths[e]);
    }

    double w() const { return w_; }

    // t A / D - sh t B, i.e. 2 sqrt(-D) dV/dt.
    double bracket(double t) const {
        const CofactorSet cs = cofactors(lengths_.with_l34(t));
        const double c11 = cs(0, 0);
        const double c22 = cs(1, 1);
        if (!(c11 > 0.0) || !(c22 > 0.0)) {
            // Only reachable where triangle 2-3-4 or 1-3-4 is itself flat at
            // t = l1 = 0; the integrand weight there is zero.
            if (t - l1_ < 1e-8) return 0.0;
            throw NotATetrahedronError("diagonal cofactor vanished inside (l1, l2)");
        }
        const double c13 = cs(0, 2), c14 = cs(0, 3), c23 = cs(1, 2), c24 = cs(1, 3);
        const double cht = std::cosh(t);
        const double a_over_d =
            c14 * (ch24_ * cht - ch23_) / c11 + c24 * (ch14_ * cht - ch13_) / c22;
        const double b = (wsh_[4] * c14 + wsh_[3] * c13) / c11 +
                         (wsh_[1] * c23 + wsh_[2] * c24) / c22 + wsh_[0];
        return t * a_over_d - std::sinh(t) * b;
    }

    // dV/dt dt / dphi under t = l1 + w sin^2 phi.
    double operator()(double phi) const {
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        const double q = 0.5 * w_ * s * s;
        const double qc = 0.5 * w_ * c * c;
        const double t = l1_ + 2.0 * q;
        const double lower = std::sinh(0.5 * (t + l1_));
        if (lower == 0.0) return 0.0;
        const double denom =
            sh12_ * std::sqrt(lower * std::sinh(0.5 * (l2_ + t)) * shc(q) * shc(qc));
        const double value = bracket(t) / denom;
        if (!std::isfinite(value)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "edge integrand is not finite at t = " << t;
            throw NumericalInconsistencyError(msg.str());
        }
        return value;
    }

    double phi_of(double t) const {
        const double r = std::clamp((t - l1_) / w_, 0.0, 1.0);
        return std::asin(std::sqrt(r));
    }

private:
    EdgeLengths lengths_;
    double l1_, l2_, w_;
    double sh12_ = 0.0, ch13_ = 0.0, ch14_ = 0.0, ch23_ = 0.0, ch24_ = 0.0;
    std::array<double, kEdgeCount> wsh_{};
};

L34Bounds bounds_or_throw(const EdgeLengths& lengths) {
    const ExistenceReport rep = exists(lengths);
    if (!rep.tri_123_ok || !rep.tri_124_ok) require_exists(rep);
    return *rep.bounds;
}

bool flat_pair(const EdgeLengths& lengths, const L34Bounds& b) {
    return lengths.l12() == 0.0 || b.l2 - b.l1 <= kTol.boundary_rel * (1.0 + b.l2);
}

VolumeResult clamp_nonnegative(VolumeResult r, const QuadratureConfig& cfg) {
    if (r.value < 0.0) {
        if (r.value < -(cfg.abs_tol + r.error_estimate)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "volume quadrature returned " << r.value;
            throw NumericalInconsistencyError(msg.str());
        }
        r.value = 0.0;
        r.diagnostics.clamped_negative = true;
    }
    return r;
}

}  // namespace

std::string_view to_string(VolumeRoute route) {
    switch (route) {
        case VolumeRoute::edge_integral: return "edge_integral";
        case VolumeRoute::sforza: return "sforza";
        case VolumeRoute::regular: return "regular";
        case VolumeRoute::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

double volume_derivative(const EdgeLengths& lengths, double t) {
    const EdgeLengths at = lengths.with_l34(t);
    const CofactorSet cs = cofactors(at);
    const double d = cs.delta;
    if (!(d < 0.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "det E = " << d << " at t = " << t << " is not negative";
        throw DomainError(msg.str());
    }
    auto c = [&](int i, int j) { return cs(i - 1, j - 1); };
    if (!(c(1, 1) > 0.0) || !(c(2, 2) > 0.0))
        throw NotATetrahedronError("c11 or c22 is not positive");
    auto lsh = [&](double l) { return l * std::sinh(l); };

    const double a = c(1, 4) * (c(1, 1) * c(2, 3) - c(1, 2) * c(1, 3)) / c(1, 1) +
                     c(2, 4) * (c(1, 3) * c(2, 2) - c(1, 2) * c(2, 3)) / c(2, 2);
    const double b =
        (lsh(at.l24()) * c(1, 4) + lsh(at.l23()) * c(1, 3)) / c(1, 1) +
        (lsh(at.l13()) * c(2, 3) + lsh(at.l14()) * c(2, 4)) / c(2, 2) + lsh(at.l12());
    const double md = -d;
    return 0.5 * (-t * a / (md * std::sqrt(md)) - std::sinh(t) * b / std::sqrt(md));
}

VolumeResult integrate_derivative(const EdgeLengths& lengths, double t_from, double t_to,
                                  const QuadratureConfig& cfg) {
    validate(cfg);
    const L34Bounds b = bounds_or_throw(lengths);
    VolumeResult r;
    r.diagnostics.l1 = b.l1;
    r.diagnostics.l2 = b.l2;
    if (flat_pair(lengths, b)) {
        r.diagnostics.degenerate = true;
        return r;
    }
    const double slack = kTol.boundary_rel * (1.0 + b.l2);
    if (t_from < b.l1 - slack || t_to < b.l1 - slack || t_from > b.l2 + slack ||
        t_to > b.l2 + slack) {
        throw DomainError("integration limits outside [l1, l2]");
    }
    const EdgeIntegrand f(lengths, b.l1, b.l2);
    const QuadratureResult q = integrate_tanh_sinh(
        [&f](double phi) { return f(phi); }, f.phi_of(t_from), f.phi_of(t_to), cfg);
    r.value = q.value;
    r.error_estimate = q.error_estimate;
    r.evaluations = q.evaluations;
    return r;
}

VolumeResult volume_edges(const EdgeLengths& lengths, const QuadratureConfig& cfg) {
    validate(cfg);
    const ExistenceReport rep = exists(lengths);
    require_exists(rep);
    const L34Bounds& b = *rep.bounds;

    VolumeResult r;
    r.route = VolumeRoute::edge_integral;
    r.diagnostics.l1 = b.l1;
    r.diagnostics.l2 = b.l2;
    if (flat_pair(lengths, b)) {
        r.diagnostics.degenerate = true;
        return r;
    }
    r.diagnostics.delta_at_l1 = cofactors(lengths.with_l34(b.l1)).delta;
    r.diagnostics.delta_at_l34 = cofactors(lengths).delta;
    if (lengths.l34() - b.l1 <= kTol.boundary_rel * (1.0 + b.l2)) {
        r.diagnostics.degenerate = true;
        r.diagnostics.at_lower_endpoint = true;
        return r;
    }

    VolumeResult q = integrate_derivative(lengths, b.l1, std::min(lengths.l34(), b.l2), cfg);
    r.value = q.value;
    r.error_estimate = q.error_estimate;
    r.evaluations = q.evaluations;
    r.diagnostics.degenerate = rep.degenerate;
    return clamp_nonnegative(r, cfg);
}

double regular_integrand(double a, double t) {
    // c = 1 + u, x = 1 + v keeps every factor free of cancellation.
    const double ha = std::sinh(0.5 * a);
    const double ht = std::sinh(0.5 * t);
    const double u = 2.0 * ha * ha;
    const double v = 2.0 * ht * ht;
    const double c = 1.0 + u;
    const double big_a = 2.0 * t * c * c * std::sqrt(u * v);
    const double big_b = a * (2.0 * u * u + v) * std::sqrt((2.0 + u) * (2.0 + v));
    const double big_c = v - 4.0 * u - 2.0 * u * u;
    const double big_d = 6.0 * u + 4.0 * u * u - 2.0 * v - u * v;
    return 0.5 * (big_a - big_b) / (big_c * std::sqrt(big_d));
}

VolumeResult volume_regular(double a, const QuadratureConfig& cfg) {
    validate(cfg);
    if (!std::isfinite(a) || a < 0.0) throw DomainError("regular edge length must be >= 0");
    VolumeResult r;
    r.route = VolumeRoute::regular;
    if (a == 0.0) {
        r.diagnostics.degenerate = true;
        return r;
    }
    const QuadratureResult q =
        integrate_tanh_sinh([a](double t) { return regular_integrand(a, t); }, 0.0, a, cfg);
    r.value = q.value;
    r.error_estimate = q.error_estimate;
    r.evaluations = q.evaluations;
    return clamp_nonnegative(r, cfg);
}

VolumeResult volume_sforza(const DihedralAngles& angles, const QuadratureConfig& cfg) {
    validate(cfg);
    const GramMatrix g0 = gram_from_angles(angles);
    const double th34 = angles.th34();
    auto gram_at = [&g0](double t) {
        Mat4 g = g0.g;
        g[2][3] = g[3][2] = -std::cos(t);
        return g;
    };
    auto det_at = [&](double t) { return det4(gram_at(t)); };

    VolumeResult r;
    r.route = VolumeRoute::sforza;
    const double d0 = det_at(th34);
    if (std::abs(d0) <= kTol.gram_flat) {
        r.diagnostics.degenerate = true;
        r.diagnostics.sforza_root = th34;
        return r;
    }
    if (d0 > 0.0) {
        std::ostringstream msg;
        msg << "det G(theta34) = " << d0 << " is positive";
        throw InconsistentAnglesError(msg.str());
    }

    const int n = kTol.root_grid;
    const double span = std::numbers::pi - th34;
    double lo = th34;
    double hi = th34;
    bool found = false;
    for (int k = 1; k <= n; ++k) {
        const double t = th34 + span * k / n;
        if (det_at(t) >= 0.0) {
            hi = t;
            found = true;
            break;
        }
        lo = t;
    }
    if (!found) throw InconsistentAnglesError("no root of det G(t) = 0 above theta34");
    while (hi - lo > kTol.root_width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (det_at(mid) < 0.0 ? lo : hi) = mid;
    }
    const double t0 = lo;
    r.diagnostics.sforza_root = t0;

    auto integrand = [&](double t) {
        const Mat4 g = gram_at(t);
        const double c = cofactor_matrix(g)[0][1];
        const double s = std::sqrt(std::max(-det4(g), 0.0)) * std::sin(t);
        const double v = std::log((c - s) / (c + s));
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "angle-route integrand is not finite at t = " << t;
            throw InconsistentAnglesError(msg.str());
        }
        return v;
    };
    const QuadratureResult q = integrate_tanh_sinh(integrand, th34, t0, cfg);
    r.value = -0.25 * q.value;
    r.error_estimate = 0.25 * q.error_estimate;
    r.evaluations = q.evaluations;
    return clamp_nonnegative(r, cfg);
}

double schlafli_residual(const EdgeLengths& lengths, double h, const QuadratureConfig& cfg) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("step h must be positive");
    const ExistenceReport rep = exists(lengths);
    require_exists(rep);
    if (rep.degenerate) throw PreconditionError("Schlafli check needs a non-degenerate tetrahedron");
    const double t = lengths.l34();
    if (t - h <= rep.bounds->l1 || t + h >= rep.bounds->l2)
        throw PreconditionError("l34 +- h leaves (l1, l2)");

    const EdgeLengths up = lengths.with_l34(t + h);
    const EdgeLengths down = lengths.with_l34(t - h);
    const double dv = (volume_edges(up, cfg).value - volume_edges(down, cfg).value) / (2.0 * h);
    const DihedralAngles th_up = dihedral_angles(up);
    const DihedralAngles th_down = dihedral_angles(down);
    double sum = 0.0;
    for (std::size_t e = 0; e < kEdgeCount; ++e)
        sum += lengths[e] * (th_up[e] - th_down[e]) / (2.0 * h);
    return std::abs(dv + 0.5 * sum);
}

}  // namespace hytet
