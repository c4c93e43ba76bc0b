#pragma once

namespace qbmm::constants {

// Search defaults.
inline constexpr double kDefaultCRep = 3.0;
inline constexpr double kDefaultFailureExponent = 2.0;

// Frozen calibration constants. The bmm envelope (c_fit, k_logignore) comes from
// an envelope regression on the n in {8,16} calibration sweep (see README,
// `fit --calibrate`); the graph-collision constants are the maximum observed
// envelope ratios on the n = 16 seeded sweep, with headroom. Larger-n runs
// are checked against these values out of sample, never refitted.
inline constexpr double kCostBoundCFit = 6.0;   // placeholder until calibration
inline constexpr double kCostBoundKLog = 3.0;   // placeholder until calibration
inline constexpr double kAllGcEnvelopeC = 2.0;  // placeholder until calibration
inline constexpr double kHasGcEnvelopeC = 2.0;  // placeholder until calibration

}  // namespace qbmm::constants
