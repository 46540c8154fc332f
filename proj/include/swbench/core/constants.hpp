#pragma once

namespace swb {

// Fixed on purpose: catalog outputs must not depend on a runtime setting.
inline constexpr double kGravity = 9.81;

// Heights at or below this are treated as dry (h flushed to 0, u forced to 0).
inline constexpr double kDryThreshold = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace swb
