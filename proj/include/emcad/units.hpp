#pragma once

#include <numbers>

namespace emcad {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kMu0 = 4.0e-7 * kPi;  // H/m

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace emcad
