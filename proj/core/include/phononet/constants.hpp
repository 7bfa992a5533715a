#pragma once

namespace phononet {

// CODATA 2018
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace phononet
