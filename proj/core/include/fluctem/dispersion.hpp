#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fluctem/kinematics.hpp"

namespace fluctem {

/// Frequency-independent response value.
struct ConstantDispersion {
    Complex value{1.0, 0.0};
};

/// eps(omega) = 1 - wp^2 / (omega (omega + i gamma)). Passive for gamma >= 0.
struct DrudeDispersion {
    double plasma_frequency = 0.0;
    double collision_rate = 0.0;
};

/// Piecewise-linear interpolation of sampled values over an increasing
/// omega grid; queries outside the grid are range errors.
struct TabulatedDispersion {
    std::vector<double> omega;
    std::vector<Complex> value;
};

using Dispersion =
    std::variant<ConstantDispersion, DrudeDispersion, TabulatedDispersion>;

Complex evaluate(const Dispersion& d, double omega);

/// Loads a "omega,re,im" CSV (header required, omega strictly increasing).
TabulatedDispersion load_dispersion_csv(const std::string& path);

} // namespace fluctem
