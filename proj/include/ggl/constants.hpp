#pragma once

#include <cmath>

namespace ggl {

// Pointwise exponent of the Gelfond product bound:
//   |prod_{r<2Q} (1 - e^{2 pi i alpha 2^r})| <= (2/sqrt 3) 2^{2Q lambda},
// lambda = ln 3 / ln 4.
inline constexpr double kGelfondLambda = 0.7924812503605780907;

// L1-norm exponent: int_0^1 |prod_{r<2Q} (1 - e^{2 pi i alpha 2^r})| dalpha
// <= 2^{Q theta0}, theta0 = log2 sqrt(2 + sqrt 2).
inline const double kThetaZero = std::log2(2.0 + std::sqrt(2.0)) / 2.0;

// Decay constant of the residue-class coefficient mass: c = 1/2 - theta0/2.
inline const double kClassDecayC = 0.5 - kThetaZero / 2.0;

}  // namespace ggl
