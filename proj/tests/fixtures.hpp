#pragma once

#include <array>
#include <cmath>

#include "hytet/core.hpp"

namespace fixtures {

// Reference values computed independently at 30 digits (angle route with
// arbitrary-precision cofactors, determinants and quadrature).
struct Frozen {
    hytet::EdgeLengths lengths;
    double volume;
    std::array<double, 6> angles;
};

inline const std::array<Frozen, 3> kFrozen{{
    {{1.1, 0.9, 1.3, 1.2, 0.8, 1.0},
     0.057099838340317217,
     {0.63942205184681753, 0.46558181519929364, 2.2188146753739556, 2.2615924064462701,
      0.50835954627160805, 0.682199782919132}},
    {{0.5, 1.5, 1.2, 1.3, 0.9, 1.1},
     0.051982360677726933,
     {0.84776207524303547, 0.93160585695943082, 1.59577426707144, 1.9390653336789053,
      1.4348973965510119, 0.34447053565145433}},
    {{2.0, 1.8, 2.2, 1.5, 2.4, 2.1},
     0.3523243762983913,
     {1.1513753563992117, 1.4136920327772999, 0.75870111911789112, 0.93791294782501965,
      1.2589986959119598, 1.2041610792194646}},
}};

inline constexpr double kRegularVolume1 = 0.0905979253777242;
inline constexpr double kRegularAngle1 = 1.1835546602180563;
inline constexpr double kFiveOnesL2 = 1.6680504579626613;
inline constexpr double kIdealRegular = 1.0149416064096536;

inline hytet::EdgeLengths five_ones(double l34) { return {1, 1, 1, 1, 1, l34}; }

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace fixtures
