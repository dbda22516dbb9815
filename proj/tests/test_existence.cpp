#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hytet/errors.hpp"
#include "hytet/existence.hpp"
#include "hytet/sampling.hpp"

using namespace hytet;

TEST(Existence, AllOnes) {
    const ExistenceReport r = exists(EdgeLengths::regular(1.0));
    ASSERT_TRUE(r.exists());
    EXPECT_FALSE(r.degenerate);
    ASSERT_TRUE(r.bounds);
    EXPECT_EQ(r.bounds->l1, 0.0);
    EXPECT_NEAR(r.bounds->l2, fixtures::kFiveOnesL2, 1e-14);
    const double c = std::cosh(1.0);
    EXPECT_NEAR(std::cosh(r.bounds->l2), (4 * c * c - c - 1) / (c + 1), 1e-14);
    EXPECT_NEAR(r.bounds->C - r.bounds->S, 1.0, 1e-14);
    EXPECT_TRUE(r.failed_conditions().empty());
}

TEST(Existence, CollapsedEdgeAtLowerBoundIsDegenerate) {
    const ExistenceReport r = exists(fixtures::five_ones(0.0));
    EXPECT_TRUE(r.exists());
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.slacks.l34_lower, 0.0);
}

TEST(Existence, FaceInequalityFailureNamesCondition) {
    const ExistenceReport r = exists({3, 1, 1, 1, 1, 1});
    EXPECT_FALSE(r.exists());
    EXPECT_FALSE(r.tri_123_ok);
    ASSERT_FALSE(r.failed_conditions().empty());
    EXPECT_EQ(r.failed_conditions().front().substr(0, 3), "(i)");
    EXPECT_THROW(require_exists(r), NonexistentTetrahedronError);
    try {
        require_exists(r);
    } catch (const NonexistentTetrahedronError& e) {
        EXPECT_FALSE(e.report().tri_123_ok);
    }
}

TEST(Existence, SixthEdgeOutsideRangeFailsThirdCondition) {
    const ExistenceReport r = exists(fixtures::five_ones(1.7));
    EXPECT_TRUE(r.tri_123_ok);
    EXPECT_TRUE(r.tri_124_ok);
    EXPECT_FALSE(r.l34_in_range);
    ASSERT_EQ(r.failed_conditions().size(), 1u);
    EXPECT_EQ(r.failed_conditions()[0].substr(0, 5), "(iii)");
}

TEST(Existence, UpperBoundIsDegenerate) {
    const ExistenceReport r = exists(fixtures::five_ones(fixtures::kFiveOnesL2));
    EXPECT_TRUE(r.exists());
    EXPECT_TRUE(r.degenerate);
}

TEST(Existence, CoincidentFirstPair) {
    const ExistenceReport r = exists({0, 1.2, 0.7, 1.2, 0.7, 1.0});
    EXPECT_TRUE(r.exists());
    EXPECT_TRUE(r.degenerate);
    EXPECT_NEAR(r.bounds->l1, 0.5, 1e-15);
    EXPECT_NEAR(r.bounds->l2, 1.9, 1e-15);
}

TEST(L34Bounds, Preconditions) {
    EXPECT_THROW(l34_bounds(0.0, 1, 1, 1, 1), DomainError);
    EXPECT_THROW(l34_bounds(3.0, 1, 1, 1, 1), PreconditionError);
}

TEST(L34Bounds, FlatFaceDoesNotThrow) {
    // l13 + l23 = l12 exactly: face 1-2-3 is a segment.
    const L34Bounds b = l34_bounds(2.0, 1.25, 1.1, 0.75, 1.3);
    EXPECT_NEAR(b.l1, b.l2, 1e-7);
}

TEST(L34Bounds, BoundsAreRootsOfDeterminant) {
    for (const EdgeLengths& l : random_tetrahedra(21, 30)) {
        const L34Bounds b = l34_bounds(l.l12(), l.l13(), l.l14(), l.l23(), l.l24());
        EXPECT_LT(b.l1, b.l2);
        const double scale = std::abs(cofactors(l).delta) + 1.0;
        EXPECT_LT(std::abs(cofactors(l.with_l34(b.l1)).delta), 1e-12 * scale);
        EXPECT_LT(std::abs(cofactors(l.with_l34(b.l2)).delta), 1e-10 * scale);
        const double display = cosh_l1_volume_display(l.l12(), l.l13(), l.l14(), l.l23(), l.l24());
        EXPECT_NEAR(display, b.C - b.S, 1e-12 * (b.C + b.S));
    }
}

TEST(TriangleChecks, SlackValues) {
    const TriangleChecks t = triangle_checks({1.0, 0.4, 0.8, 0.8, 0.5, 1.0});
    EXPECT_TRUE(t.face123.ok);
    EXPECT_NEAR(t.face123.slack_upper, 0.2, 1e-15);
    EXPECT_NEAR(t.face123.slack_lower, 0.6, 1e-15);
    EXPECT_TRUE(t.face124.ok);
}
