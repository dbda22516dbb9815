#pragma once

#include <array>
#include <cstddef>

#include "hytet/core.hpp"

namespace hytet {

/// Dihedral angles in radians, stored in edge order l12..l34. An angle that
/// is undefined on a collapsed configuration is NaN and `degenerate` is set.
struct DihedralAngles {
    std::array<double, kEdgeCount> th{};
    bool degenerate = false;

    double th12() const { return th[0]; }
    double th13() const { return th[1]; }
    double th14() const { return th[2]; }
    double th23() const { return th[3]; }
    double th24() const { return th[4]; }
    double th34() const { return th[5]; }

    double operator[](std::size_t e) const { return th[e]; }
    double operator[](Edge e) const { return th[static_cast<int>(e)]; }
};

/// Gram matrix of the face normals. Rows and columns are the faces
/// 124, 123, 234, 134; entry (r, s) is -cos of the angle along the edge the
/// two faces share, so (0,1) is edge 12 and (2,3) is edge 34.
struct GramMatrix {
    Mat4 g{};
};

/// Edge shared by faces r and s (r != s) in the GramMatrix ordering.
inline constexpr std::array<std::array<int, 4>, 4> kGramEdge{
    {{-1, 0, 4, 2}, {0, -1, 3, 1}, {4, 3, -1, 5}, {2, 1, 5, -1}}};

/// Cofactor cosine rule: cos(theta_kl) = -c_ij / sqrt(c_ii c_jj) where {k,l}
/// is the pair of vertices complementary to {i,j}. Throws
/// NotATetrahedronError when a diagonal cofactor is negative and
/// NumericalInconsistencyError when |cos| exceeds 1 + 1e-12.
DihedralAngles dihedral_angles(const CofactorSet& c);

/// Convenience: precise cofactors of the lengths, then dihedral_angles.
DihedralAngles dihedral_angles(const EdgeLengths& lengths);

/// Throws DomainError for an angle outside [0, pi].
GramMatrix gram_from_angles(const DihedralAngles& angles);

double det4(const Mat4& m);

/// Signed cofactors of a 4x4 matrix.
Mat4 cofactor_matrix(const Mat4& m);

}  // namespace hytet
