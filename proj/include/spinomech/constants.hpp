#pragma once

namespace spinomech {

// CODATA / SI-exact values.
inline constexpr double k_boltzmann = 1.380649e-23;            // J/K
inline constexpr double hbar = 1.054571817e-34;                // J*s
inline constexpr double speed_of_light = 2.99792458e8;         // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double two_pi = 6.28318530717958647692;

}  // namespace spinomech
