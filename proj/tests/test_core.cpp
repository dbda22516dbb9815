#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "fixtures.hpp"
#include "hytet/core.hpp"
#include "hytet/errors.hpp"
#include "hytet/sampling.hpp"

using namespace hytet;

namespace {

// Regular tetrahedron, c = ch a: delta = (1-c)^3 (1+3c), c_ii = (1-c)^2 (1+2c),
// c_ij = -c (1-c)^2. 1 - c is taken as -2 sh^2(a/2).
struct RegularClosedForm {
    double delta, diag, off;
};

RegularClosedForm regular_closed_form(double a) {
    const double h = std::sinh(0.5 * a);
    const double omc = -2.0 * h * h;
    const double c = std::cosh(a);
    return {omc * omc * omc * (1.0 + 3.0 * c), omc * omc * (1.0 + 2.0 * c), -c * omc * omc};
}

}  // namespace

TEST(EdgeLengths, RejectsNegativeAndNonFinite) {
    EXPECT_THROW(EdgeLengths(1, 1, 1, 1, 1, -0.5), DomainError);
    EXPECT_THROW(EdgeLengths(1, std::nan(""), 1, 1, 1, 1), DomainError);
    EXPECT_THROW(EdgeLengths(1, 1, 1, std::numeric_limits<double>::infinity(), 1, 1), DomainError);
    EXPECT_NO_THROW(EdgeLengths(1, 1, 1, 1, 1, 0));
}

TEST(EdgeLengths, AccessorsFollowEdgeOrder) {
    const EdgeLengths l(1, 2, 3, 4, 5, 6);
    EXPECT_EQ(l.l12(), 1);
    EXPECT_EQ(l.l34(), 6);
    EXPECT_EQ(l.between(3, 1), 5);
    EXPECT_EQ(l[Edge::e23], 4);
    EXPECT_EQ(l.with_l34(9).l34(), 9);
}

TEST(Permutations, AllDistinctAndRelabelIdentity) {
    const auto perms = all_permutations();
    std::set<Permutation> unique(perms.begin(), perms.end());
    EXPECT_EQ(unique.size(), 24u);
    const EdgeLengths l(1, 2, 3, 4, 5, 6);
    EXPECT_EQ(relabel(l, {0, 1, 2, 3}), l);
    const EdgeLengths swapped = relabel(l, {1, 0, 2, 3});
    EXPECT_EQ(swapped.l13(), l.l23());
    EXPECT_EQ(swapped.l34(), l.l34());
}

TEST(Cofactors, RegularClosedFormAtOne) {
    const auto ref = regular_closed_form(1.0);
    const EdgeLengths l = EdgeLengths::regular(1.0);
    for (const CofactorSet& cs : {cofactors(l), cofactors(edge_matrix_from_lengths(l))}) {
        EXPECT_LT(fixtures::rel(cs.delta, ref.delta), 1e-12);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const double want = i == j ? ref.diag : ref.off;
                EXPECT_LT(fixtures::rel(cs(i, j), want), 1e-12) << i << j;
            }
        }
    }
}

TEST(Cofactors, PreciseFormKeepsRelativeAccuracyOnTinyTetrahedra) {
    for (double a : {1e-2, 1e-4, 1e-6}) {
        const auto ref = regular_closed_form(a);
        const CofactorSet cs = cofactors(EdgeLengths::regular(a));
        EXPECT_LT(fixtures::rel(cs.delta, ref.delta), 1e-10) << a;
        EXPECT_LT(fixtures::rel(cs(0, 0), ref.diag), 1e-10) << a;
        EXPECT_LT(fixtures::rel(cs(1, 3), ref.off), 1e-10) << a;
    }
}

TEST(Cofactors, NaiveAndPreciseAgreeOnModerateInput) {
    for (const auto& f : fixtures::kFrozen) {
        const CofactorSet a = cofactors(f.lengths);
        const CofactorSet b = cofactors(edge_matrix_from_lengths(f.lengths));
        double scale = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(a(i, j)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) EXPECT_NEAR(a(i, j), b(i, j), 1e-12 * scale);
        EXPECT_NEAR(a.delta, b.delta, 1e-12 * scale);
    }
}

TEST(Cofactors, EquivariantUnderRelabeling) {
    const EdgeLengths l = fixtures::kFrozen[0].lengths;
    const CofactorSet base = cofactors(l);
    for (const Permutation& p : all_permutations()) {
        const CofactorSet moved = cofactors(relabel(l, p));
        const Mat4 expect = permute(base.c, p);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) EXPECT_NEAR(moved(i, j), expect[i][j], 1e-12);
        EXPECT_NEAR(moved.delta, base.delta, 1e-12);
    }
}

TEST(Cofactors, DiagonalPositiveDeterminantNegative) {
    for (const EdgeLengths& l : random_tetrahedra(11, 50)) {
        const CofactorSet cs = cofactors(l);
        for (int i = 0; i < 4; ++i) EXPECT_GT(cs(i, i), 0.0);
        EXPECT_LT(cs.delta, 0.0);
    }
}

TEST(Jacobi, AllFourteenIdentitiesHold) {
    for (const EdgeLengths& l : random_tetrahedra(12, 50)) {
        const EdgeMatrix m = edge_matrix_from_lengths(l);
        EXPECT_LT(jacobi_residuals(m, cofactors(m)).max_relative(), 1e-10);
        EXPECT_LT(jacobi_residuals(m, cofactors(l)).max_relative(), 1e-10);
    }
}

TEST(Jacobi, DiagonalIdentityMatchesDeterminantTimesSinh) {
    // c11 c22 - c12^2 = -D sh^2 l34 (first identity).
    const EdgeLengths l = fixtures::kFrozen[1].lengths;
    const EdgeMatrix m = edge_matrix_from_lengths(l);
    const CofactorSet cs = cofactors(m);
    const double lhs = cs(0, 0) * cs(1, 1) - cs(0, 1) * cs(0, 1);
    EXPECT_NEAR(lhs, -cs.delta * std::sinh(l.l34()) * std::sinh(l.l34()), 1e-12);
    EXPECT_NEAR(jacobi_residuals(m, cs).residuals[0], 0.0, 1e-12);
}
