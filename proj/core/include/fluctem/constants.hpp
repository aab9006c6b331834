#pragma once

#include <string_view>

namespace fluctem {

inline constexpr std::string_view version = "0.1.0";

/// Unit-system constants. All formulas are written in Gaussian form with
/// hbar, c and k_B kept symbolic, so the same code serves natural units
/// (the default, hbar = c = k_B = 1) and SI inputs (rad/s, metres, kelvin).
struct Constants {
    double hbar = 1.0;
    double c = 1.0;
    double k_B = 1.0;
};

inline constexpr Constants natural_units{};
inline constexpr Constants si_units{1.054571817e-34, 2.99792458e8, 1.380649e-23};

} // namespace fluctem
