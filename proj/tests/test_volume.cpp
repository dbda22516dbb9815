#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "hytet/errors.hpp"
#include "hytet/existence.hpp"
#include "hytet/oracle.hpp"
#include "hytet/sampling.hpp"
#include "hytet/volume.hpp"

using namespace hytet;

TEST(VolumeEdges, FrozenValues) {
    for (const auto& f : fixtures::kFrozen) {
        const VolumeResult r = volume_edges(f.lengths);
        EXPECT_NEAR(r.value, f.volume, 1e-12);
        EXPECT_EQ(r.route, VolumeRoute::edge_integral);
        EXPECT_GT(r.evaluations, 0u);
        EXPECT_LT(r.error_estimate, 1e-9);
    }
}

TEST(VolumeEdges, RegularOne) {
    EXPECT_NEAR(volume_edges(EdgeLengths::regular(1.0)).value, fixtures::kRegularVolume1, 1e-13);
}

TEST(VolumeEdges, CollapsedEdgeGivesZero) {
    const VolumeResult r = volume_edges(fixtures::five_ones(0.0));
    EXPECT_EQ(r.value, 0.0);
    EXPECT_TRUE(r.diagnostics.degenerate);
    EXPECT_TRUE(r.diagnostics.at_lower_endpoint);
}

TEST(VolumeEdges, SmallRegularMatchesEuclidean) {
    const double v = volume_edges(EdgeLengths::regular(0.1)).value;
    const double e = std::numbers::sqrt2 / 12.0 * 1e-3;
    EXPECT_LT(std::abs(v / e - 1.0), 0.01);
    EXPECT_NEAR(v, euclidean_volume_cm(EdgeLengths::regular(0.1)), 0.01 * e);
}

TEST(VolumeEdges, NonexistentThrowsWithReport) {
    try {
        volume_edges(fixtures::five_ones(1.7));
        FAIL() << "expected an exception";
    } catch (const NonexistentTetrahedronError& e) {
        EXPECT_FALSE(e.report().l34_in_range);
    }
}

TEST(VolumeEdges, InvariantUnderRelabeling) {
    const auto& f = fixtures::kFrozen[1];
    for (const Permutation& p : all_permutations())
        EXPECT_NEAR(volume_edges(relabel(f.lengths, p)).value, f.volume, 1e-11);
}

TEST(VolumeEdges, BoundedByIdealRegular) {
    for (const EdgeLengths& l : random_tetrahedra(41, 20)) {
        const double v = volume_edges(l).value;
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, fixtures::kIdealRegular + 1e-6);
    }
}

TEST(VolumeEdges, RejectsBadQuadratureConfig) {
    EXPECT_THROW(volume_edges(EdgeLengths::regular(1.0), {0.0, 1e-10, 12}), DomainError);
    EXPECT_THROW(volume_edges(EdgeLengths::regular(1.0), {1e-10, 1e-10, 2}), DomainError);
}

TEST(VolumeDerivative, MatchesFiniteDifference) {
    const EdgeLengths l = fixtures::five_ones(1.0);
    const double h = 1e-5;
    const double fd = (volume_edges(l.with_l34(1.0 + h), kTightQuadrature).value -
                       volume_edges(l.with_l34(1.0 - h), kTightQuadrature).value) /
                      (2 * h);
    EXPECT_LT(fixtures::rel(volume_derivative(l, 1.0), fd), 1e-6);
    const auto& f = fixtures::kFrozen[0];
    const double fd2 = (volume_edges(f.lengths.with_l34(1.0 + h), kTightQuadrature).value -
                        volume_edges(f.lengths.with_l34(1.0 - h), kTightQuadrature).value) /
                       (2 * h);
    EXPECT_LT(fixtures::rel(volume_derivative(f.lengths, 1.0), fd2), 1e-6);
}

TEST(VolumeDerivative, FullIntervalIntegratesToZero) {
    const EdgeLengths l = fixtures::five_ones(1.0);
    const L34Bounds b = *exists(l).bounds;
    EXPECT_LT(std::abs(integrate_derivative(l, b.l1, b.l2).value), 1e-6);
    for (const EdgeLengths& r : random_tetrahedra(42, 5)) {
        const L34Bounds br = *exists(r).bounds;
        EXPECT_LT(std::abs(integrate_derivative(r, br.l1, br.l2).value), 1e-6);
    }
}

TEST(VolumeDerivative, ChangesSignAtInteriorMaximum) {
    const EdgeLengths l = fixtures::five_ones(1.0);
    const L34Bounds b = *exists(l).bounds;
    double lo = b.l1 + 1e-3, hi = b.l2 - 1e-3;
    ASSERT_GT(volume_derivative(l, lo), 0.0);
    ASSERT_LT(volume_derivative(l, hi), 0.0);
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (volume_derivative(l, mid) > 0.0 ? lo : hi) = mid;
    }
    const double vmax = volume_edges(l.with_l34(lo)).value;
    EXPECT_GE(vmax, volume_edges(l.with_l34(lo - 1e-2)).value);
    EXPECT_GE(vmax, volume_edges(l.with_l34(lo + 1e-2)).value);
}

TEST(VolumeDerivative, OutsideDomainThrows) {
    EXPECT_THROW(volume_derivative(fixtures::five_ones(1.0), 1.7), DomainError);
}

TEST(VolumeDerivative, StableIntegrandMatchesLiteralForm) {
    // integrate_derivative over a short interval equals the midpoint value
    // of the literal formula times the width, to second order.
    const auto& f = fixtures::kFrozen[2];
    const double t = f.lengths.l34(), h = 1e-4;
    const double integral = integrate_derivative(f.lengths, t - h, t + h, kTightQuadrature).value;
    EXPECT_NEAR(integral / (2 * h), volume_derivative(f.lengths, t), 1e-7);
}

TEST(VolumeRegular, Values) {
    EXPECT_EQ(volume_regular(0.0).value, 0.0);
    EXPECT_NEAR(volume_regular(1.0).value, fixtures::kRegularVolume1, 1e-13);
    EXPECT_NEAR(volume_regular(1.0).value, volume_edges(EdgeLengths::regular(1.0)).value, 1e-8);
    EXPECT_NEAR(volume_regular(10.0).value, fixtures::kIdealRegular, 1e-3);
    EXPECT_NEAR(volume_regular(10.0).value, 1.01407666530659, 1e-12);
    EXPECT_THROW(volume_regular(-1.0), DomainError);
}

TEST(VolumeRegular, IntegrandIsSpecialisedEdgeIntegrand) {
    for (double a : {0.3, 1.0, 2.5}) {
        for (double frac : {0.2, 0.5, 0.9}) {
            const double t = frac * a;
            EXPECT_LT(fixtures::rel(regular_integrand(a, t),
                                    volume_derivative(EdgeLengths::regular(a), t)),
                      1e-10);
        }
    }
}

TEST(VolumeSforza, FrozenValues) {
    for (const auto& f : fixtures::kFrozen) {
        const VolumeResult r = volume_sforza(dihedral_angles(f.lengths));
        EXPECT_NEAR(r.value, f.volume, 1e-12);
        EXPECT_GT(r.diagnostics.sforza_root, f.angles[5]);
    }
}

TEST(VolumeSforza, RegularMatchesEdgeRoute) {
    DihedralAngles a;
    const double c = std::cosh(1.0);
    a.th.fill(std::acos(c / (2 * c + 1)));
    EXPECT_NEAR(volume_sforza(a).value, volume_edges(EdgeLengths::regular(1.0)).value, 1e-6);
}

TEST(VolumeSforza, EuclideanAnglesGiveZero) {
    DihedralAngles a;
    a.th.fill(std::acos(1.0 / 3.0));
    const VolumeResult r = volume_sforza(a);
    EXPECT_EQ(r.value, 0.0);
    EXPECT_TRUE(r.diagnostics.degenerate);
}

TEST(VolumeSforza, StartingAtRootGivesZero) {
    DihedralAngles a = dihedral_angles(fixtures::kFrozen[0].lengths);
    a.th[5] = volume_sforza(a).diagnostics.sforza_root;
    EXPECT_LT(volume_sforza(a).value, 1e-12);
}

TEST(VolumeSforza, PositiveDeterminantRejected) {
    DihedralAngles a;
    a.th.fill(std::numbers::pi / 2);
    EXPECT_THROW(volume_sforza(a), InconsistentAnglesError);
}

TEST(Schlafli, ResidualSmallAndSecondOrder) {
    EXPECT_LT(schlafli_residual(fixtures::five_ones(1.0), 1e-5), 1e-8);
    EXPECT_LT(schlafli_residual(fixtures::five_ones(1.3), 1e-5), 1e-8);
    const EdgeLengths l = fixtures::kFrozen[0].lengths;
    const double ratio = schlafli_residual(l, 1e-3) / schlafli_residual(l, 1e-4);
    EXPECT_GT(ratio, 100.0 / 3.0);
    EXPECT_LT(ratio, 300.0);
}

TEST(Schlafli, DegenerateInputRejected) {
    EXPECT_THROW(schlafli_residual(fixtures::five_ones(0.0), 1e-5), PreconditionError);
    EXPECT_THROW(schlafli_residual(fixtures::five_ones(1e-6), 1e-5), PreconditionError);
}

TEST(VolumeRoute, Names) {
    EXPECT_EQ(to_string(VolumeRoute::edge_integral), "edge_integral");
    EXPECT_EQ(to_string(VolumeRoute::monte_carlo), "monte_carlo");
}
