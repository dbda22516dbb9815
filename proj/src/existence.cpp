#include "hytet/existence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hytet/config.hpp"
#include "hytet/errors.hpp"

namespace hytet {

namespace {

bool near_zero(double slack, double magnitude) {
    return std::abs(slack) <= kTol.boundary_rel * (1.0 + magnitude);
}

TriangleCheck check_face(double l12, double la, double lb) {
    TriangleCheck t;
    t.slack_upper = la + lb - l12;
    t.slack_lower = l12 - std::abs(la - lb);
    const double mag = std::max({l12, la, lb});
    const double tol = kTol.boundary_rel * (1.0 + mag);
    t.ok = t.slack_upper >= -tol && t.slack_lower >= -tol;
    t.degenerate = near_zero(t.slack_upper, mag) || near_zero(t.slack_lower, mag);
    return t;
}

// Angle at vertex 1 of the triangle with sides l12, la adjacent and lb
// opposite, from the hyperbolic half-angle formulas.
double vertex_angle(double l12, double la, double lb) {
    const double s = 0.5 * (l12 + la + lb);
    const double sa = std::max(0.0, s - lb);   // opposite side
    const double s1 = std::max(0.0, s - l12);
    const double s2 = std::max(0.0, s - la);
    const double sin_half = std::sqrt(std::sinh(s1) * std::sinh(s2));
    const double cos_half = std::sqrt(std::sinh(s) * std::sinh(sa));
    return 2.0 * std::atan2(sin_half, cos_half);
}

// Third side of the triangle with sides l13, l14 enclosing angle psi:
// ch l - 1 = 2 sh^2((l13-l14)/2) + 2 sh l13 sh l14 sin^2(psi/2).
double side_from_angle(double l13, double l14, double psi) {
    const double d = std::sinh(0.5 * (l13 - l14));
    const double h = std::sin(0.5 * psi);
    return 2.0 * std::asinh(std::sqrt(d * d + std::sinh(l13) * std::sinh(l14) * h * h));
}

// (ch(la + l12) - ch lb)(ch lb - ch(la - l12)), each factor as a product of
// sinh of half-slacks so that it stays accurate near a flat triangle.
struct SqrtArg {
    double value;
    double scale;
};

SqrtArg face_product(double l12, double la, double lb) {
    const double f1 = 2.0 * std::sinh(0.5 * (la + l12 + lb)) * std::sinh(0.5 * (la + l12 - lb));
    const double f2 = 2.0 * std::sinh(0.5 * (lb + la - l12)) * std::sinh(0.5 * (lb - la + l12));
    return {f1 * f2, std::cosh(la + l12) * std::cosh(lb)};
}

double checked_sqrt(const SqrtArg& arg, bool& clamped) {
    if (arg.value >= 0.0) return std::sqrt(arg.value);
    if (arg.value >= -kTol.sqrt_clamp * arg.scale) {
        clamped = true;
        return 0.0;
    }
    std::ostringstream msg;
    msg << "square-root argument " << arg.value << " is negative beyond tolerance";
    throw NumericalInconsistencyError(msg.str());
}

}  // namespace

std::vector<std::string> ExistenceReport::failed_conditions() const {
    std::vector<std::string> out;
    if (!tri_123_ok) out.emplace_back("(i) l13 + l23 >= l12 >= |l13 - l23|");
    if (!tri_124_ok) out.emplace_back("(ii) l14 + l24 >= l12 >= |l14 - l24|");
    if (tri_123_ok && tri_124_ok && !l34_in_range)
        out.emplace_back("(iii) l1 <= l34 <= l2");
    return out;
}

TriangleChecks triangle_checks(const EdgeLengths& lengths) {
    return {check_face(lengths.l12(), lengths.l13(), lengths.l23()),
            check_face(lengths.l12(), lengths.l14(), lengths.l24())};
}

double cosh_l1_volume_display(double l12, double l13, double l14, double l23,
                              double l24) {
    // Both root arguments (ch l23 - ch(l13 + l12))(ch l23 - ch(l13 - l12))
    // are <= 0 on valid faces; the product of the two principal roots is
    // then -sqrt|x3| sqrt|x4|.
    bool clamped = false;
    const double csch2 = 1.0 / (std::sinh(l12) * std::sinh(l12));
    const double r3 = checked_sqrt(face_product(l12, l13, l23), clamped);
    const double r4 = checked_sqrt(face_product(l12, l14, l24), clamped);
    const double root_product = -r3 * r4;
    const double a = std::cosh(l13) * std::cosh(l12) - std::cosh(l23);
    const double b = std::cosh(l14) * std::cosh(l12) - std::cosh(l24);
    return std::cosh(l13) * std::cosh(l14) - csch2 * (a * b - root_product);
}

L34Bounds l34_bounds(double l12, double l13, double l14, double l23, double l24) {
    if (!(l12 > 0.0) || !std::isfinite(l12))
        throw DomainError("l34 bounds need 0 < l12 < inf");
    const TriangleCheck t3 = check_face(l12, l13, l23);
    const TriangleCheck t4 = check_face(l12, l14, l24);
    if (!t3.ok || !t4.ok) {
        throw PreconditionError(std::string("face triangle inequality violated: ") +
                                (!t3.ok ? "(i)" : "(ii)"));
    }

    L34Bounds b;
    const double csch2 = 1.0 / (std::sinh(l12) * std::sinh(l12));
    const double p3 = checked_sqrt(face_product(l12, l13, l23), b.sqrt_clamped);
    const double p4 = checked_sqrt(face_product(l12, l14, l24), b.sqrt_clamped);
    const double a = std::cosh(l13) * std::cosh(l12) - std::cosh(l23);
    const double c = std::cosh(l14) * std::cosh(l12) - std::cosh(l24);
    const double cc = std::cosh(l13) * std::cosh(l14);
    const double t2 = csch2 * a * c;
    b.C = cc - t2;
    b.S = csch2 * p3 * p4;

    const double angle3 = vertex_angle(l12, l13, l23);
    const double angle4 = vertex_angle(l12, l14, l24);
    b.l1 = side_from_angle(l13, l14, std::abs(angle4 - angle3));
    b.l2 = side_from_angle(l13, l14, angle3 + angle4);
    if (t3.degenerate || t4.degenerate) b.l2 = std::max(b.l1, b.l2);

    const double scale = cc + std::abs(t2) + b.S;
    const double tol = kTol.bound_agreement * scale;
    const double display = cosh_l1_volume_display(l12, l13, l14, l23, l24);
    if (std::abs(std::cosh(b.l1) - (b.C - b.S)) > tol ||
        std::abs(std::cosh(b.l2) - (b.C + b.S)) > tol ||
        std::abs(display - (b.C - b.S)) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "l34 bound expressions disagree: ch l1 = " << std::cosh(b.l1)
            << ", C - S = " << b.C - b.S << ", display form = " << display
            << ", ch l2 = " << std::cosh(b.l2) << ", C + S = " << b.C + b.S;
        throw NumericalInconsistencyError(msg.str());
    }
    return b;
}

ExistenceReport exists(const EdgeLengths& lengths) {
    ExistenceReport r;
    const TriangleChecks tc = triangle_checks(lengths);
    r.tri_123_ok = tc.face123.ok;
    r.tri_124_ok = tc.face124.ok;
    r.slacks.face123_upper = tc.face123.slack_upper;
    r.slacks.face123_lower = tc.face123.slack_lower;
    r.slacks.face124_upper = tc.face124.slack_upper;
    r.slacks.face124_lower = tc.face124.slack_lower;
    r.degenerate = tc.face123.degenerate || tc.face124.degenerate;
    if (!r.tri_123_ok || !r.tri_124_ok) return r;

    L34Bounds b;
    if (lengths.l12() > 0.0) {
        b = l34_bounds(lengths.l12(), lengths.l13(), lengths.l14(), lengths.l23(),
                       lengths.l24());
    } else {
        // Vertices 1 and 2 coincide: only triangle 1-3-4 constrains l34.
        b.C = std::cosh(lengths.l13()) * std::cosh(lengths.l14());
        b.S = std::sinh(lengths.l13()) * std::sinh(lengths.l14());
        b.l1 = std::abs(lengths.l13() - lengths.l14());
        b.l2 = lengths.l13() + lengths.l14();
        r.degenerate = true;
    }
    r.bounds = b;

    const double l34 = lengths.l34();
    r.slacks.l34_lower = l34 - b.l1;
    r.slacks.l34_upper = b.l2 - l34;
    const double tol = kTol.boundary_rel * (1.0 + b.l2);
    r.l34_in_range = r.slacks.l34_lower >= -tol && r.slacks.l34_upper >= -tol;
    if (near_zero(r.slacks.l34_lower, b.l2) || near_zero(r.slacks.l34_upper, b.l2))
        r.degenerate = true;
    return r;
}

void require_exists(const ExistenceReport& report) {
    if (report.exists()) return;
    std::string msg = "tetrahedron does not exist; failed:";
    for (const auto& f : report.failed_conditions()) msg += " " + f + ";";
    throw NonexistentTetrahedronError(msg, report);
}

}  // namespace hytet
