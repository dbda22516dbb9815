#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

namespace hytet {

// Vertices are numbered 1..4 in documentation and 0..3 in code. Edge ij
// (i < j, 1-based) is stored at the index below; the order matches the field
// order l12, l13, l14, l23, l24, l34.
enum class Edge : int { e12 = 0, e13, e14, e23, e24, e34 };

inline constexpr std::size_t kEdgeCount = 6;

inline constexpr std::array<std::pair<int, int>, kEdgeCount> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr std::array<std::string_view, kEdgeCount> kEdgeNames{
    "l12", "l13", "l14", "l23", "l24", "l34"};

/// Index of the edge joining 0-based vertices i and j (i != j).
constexpr int edge_index(int i, int j) {
    if (i > j) std::swap(i, j);
    constexpr int table[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[i][j];
}

/// Index of the edge that shares no vertex with edge `e`.
constexpr int opposite_edge(int e) { return 5 - e; }

/// Vertex relabeling: new vertex k is old vertex perm[k].
using Permutation = std::array<int, 4>;

/// Six edge lengths of a tetrahedron in H^3. Construction only checks that
/// each value is finite and nonnegative; realizability is the existence
/// module's job.
class EdgeLengths {
public:
    EdgeLengths() = default;
    EdgeLengths(double l12, double l13, double l14, double l23, double l24,
                double l34);
    explicit EdgeLengths(const std::array<double, kEdgeCount>& values);

    static EdgeLengths regular(double a);

    double l12() const { return l_[0]; }
    double l13() const { return l_[1]; }
    double l14() const { return l_[2]; }
    double l23() const { return l_[3]; }
    double l24() const { return l_[4]; }
    double l34() const { return l_[5]; }

    double operator[](Edge e) const { return l_[static_cast<int>(e)]; }
    double operator[](std::size_t idx) const { return l_[idx]; }
    double between(int i, int j) const { return l_[edge_index(i, j)]; }

    const std::array<double, kEdgeCount>& values() const { return l_; }

    /// Same lengths with l34 replaced by t.
    EdgeLengths with_l34(double t) const;

    friend bool operator==(const EdgeLengths&, const EdgeLengths&) = default;

private:
    std::array<double, kEdgeCount> l_{};
};

EdgeLengths relabel(const EdgeLengths& lengths, const Permutation& perm);

/// All 24 permutations of {0,1,2,3} in lexicographic order.
std::array<Permutation, 24> all_permutations();

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 permute(const Mat4& m, const Permutation& perm);

/// E(T): unit diagonal, ch(l_ij) off the diagonal.
struct EdgeMatrix {
    Mat4 e{};
};

/// Signed cofactors c_ij = (-1)^(i+j) M_ij and the determinant.
struct CofactorSet {
    Mat4 c{};
    double delta = 0.0;

    double operator()(int i, int j) const { return c[i][j]; }
};

/// One residual per identity obtained from the 2x2 Jacobi relation on E,
/// in the order
///   c11c22-c12^2, c11c33-c13^2, c22c33-c23^2, c33c44-c34^2, c22c44-c24^2,
///   c11c44-c14^2, c14c23-c12c34, c13c24-c12c34, c13c44-c14c34,
///   c13c14-c11c34, c33c14-c34c13, c23c24-c34c22, c23c44-c24c34,
///   c33c24-c34c23.
struct JacobiResiduals {
    static constexpr std::size_t kCount = 14;
    std::array<double, kCount> residuals{};
    std::array<double, kCount> lhs{};

    double max_absolute() const;
    /// max_k residual_k / max(1, |lhs_k|)
    double max_relative() const;
};

EdgeMatrix edge_matrix_from_lengths(const EdgeLengths& lengths);

/// Cofactors by direct 3x3 minor expansion of the given matrix entries.
CofactorSet cofactors(const EdgeMatrix& m);

/// Cofactors computed from E = J + 2S, s_ij = sh^2(l_ij / 2), with the
/// matrix determinant lemma in double-double arithmetic. Accurate when a
/// minor is tiny relative to its entries (vertices about to coincide, small
/// tetrahedra), where cofactors(EdgeMatrix) loses every digit.
CofactorSet cofactors(const EdgeLengths& lengths);

JacobiResiduals jacobi_residuals(const EdgeMatrix& m, const CofactorSet& c);

/// Determinant of a 3x3 matrix given row-major.
double det3(const std::array<std::array<double, 3>, 3>& a);

}  // namespace hytet
