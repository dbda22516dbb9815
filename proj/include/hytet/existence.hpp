#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hytet/core.hpp"
#include "hytet/errors.hpp"

namespace hytet {

/// Triangle inequality l_a + l_b >= l_c >= |l_a - l_b| for one face through
/// edge 1-2, with signed distances to both boundaries.
struct TriangleCheck {
    bool ok = false;
    bool degenerate = false;
    double slack_upper = 0.0;  ///< l_a + l_b - l12
    double slack_lower = 0.0;  ///< l12 - |l_a - l_b|
};

struct TriangleChecks {
    TriangleCheck face123;  ///< l13 + l23 >= l12 >= |l13 - l23|
    TriangleCheck face124;  ///< l14 + l24 >= l12 >= |l14 - l24|
};

/// Admissible interval [l1, l2] for l34 once the faces 1-2-3 and 1-2-4 are
/// fixed: ch l1 = C - S (dihedral angle at 1-2 folded to 0), ch l2 = C + S
/// (opened to pi).
struct L34Bounds {
    double C = 0.0;
    double S = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    /// A square-root argument was slightly negative and clamped to zero.
    bool sqrt_clamped = false;
};

struct ExistenceSlacks {
    double face123_upper = 0.0;
    double face123_lower = 0.0;
    double face124_upper = 0.0;
    double face124_lower = 0.0;
    double l34_lower = 0.0;  ///< l34 - l1
    double l34_upper = 0.0;  ///< l2 - l34
};

struct ExistenceReport {
    bool tri_123_ok = false;
    bool tri_124_ok = false;
    std::optional<L34Bounds> bounds;
    bool l34_in_range = false;
    bool degenerate = false;
    ExistenceSlacks slacks;

    bool exists() const { return tri_123_ok && tri_124_ok && l34_in_range; }
    /// Human-readable names of the violated conditions, empty if exists().
    std::vector<std::string> failed_conditions() const;
};

TriangleChecks triangle_checks(const EdgeLengths& lengths);

/// Bounds for l34 given the other five lengths. Requires l12 > 0 and both
/// face triangle inequalities.
L34Bounds l34_bounds(double l12, double l13, double l14, double l23, double l24);

/// ch l1 as displayed in the edge-length volume formula (same quantities
/// as C - S, regrouped). Used as a runtime cross-check.
double cosh_l1_volume_display(double l12, double l13, double l14, double l23,
                              double l24);

ExistenceReport exists(const EdgeLengths& lengths);

/// Raised when an operation needs a realizable tetrahedron; carries the
/// full report.
class NonexistentTetrahedronError : public PreconditionError {
public:
    NonexistentTetrahedronError(const std::string& what, ExistenceReport report)
        : PreconditionError(what), report_(std::move(report)) {}
    const ExistenceReport& report() const noexcept { return report_; }

private:
    ExistenceReport report_;
};

/// Throws NonexistentTetrahedronError naming the failed conditions unless the report
/// says the tetrahedron exists.
void require_exists(const ExistenceReport& report);

}  // namespace hytet
