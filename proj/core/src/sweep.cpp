#include "fluctem/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace fluctem {

std::vector<double> build_grid(const GridSpec& spec) {
    if (spec.count < 1)
        throw std::invalid_argument("build_grid: count must be >= 1");
    if (!std::isfinite(spec.min) || !std::isfinite(spec.max))
        throw std::invalid_argument("build_grid: bounds must be finite");
    if (spec.count == 1) return {spec.min};
    if (!(spec.min < spec.max))
        throw std::invalid_argument("build_grid: min must be below max");
    if (spec.scale == GridScale::Log && !(spec.min > 0.0))
        throw std::invalid_argument("build_grid: log scale needs min > 0");

    std::vector<double> grid(static_cast<std::size_t>(spec.count));
    const double n1 = spec.count - 1;
    for (int i = 0; i < spec.count; ++i) {
        const double u = i / n1;
        grid[static_cast<std::size_t>(i)] =
            spec.scale == GridScale::Linear
                ? spec.min + (spec.max - spec.min) * u
                : spec.min * std::pow(spec.max / spec.min, u);
    }
    grid.front() = spec.min;
    grid.back() = spec.max; // land on the endpoints exactly
    return grid;
}

} // namespace fluctem
