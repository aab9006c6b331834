#include "fluctem/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fluctem/errors.hpp"

namespace fluctem {

Complex evaluate(const Dispersion& d, double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("dispersion: omega must be positive");
    return std::visit(
        [omega](const auto& model) -> Complex {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, ConstantDispersion>) {
                return model.value;
            } else if constexpr (std::is_same_v<M, DrudeDispersion>) {
                const double wp = model.plasma_frequency;
                const Complex denom = omega * Complex(omega, model.collision_rate);
                return 1.0 - wp * wp / denom;
            } else {
                const auto& t = model;
                if (t.omega.size() < 2)
                    throw std::invalid_argument(
                        "tabulated dispersion: need at least two samples");
                if (omega < t.omega.front() || omega > t.omega.back())
                    throw std::out_of_range(
                        "tabulated dispersion: omega outside sampled range");
                auto it = std::upper_bound(t.omega.begin(), t.omega.end(), omega);
                std::size_t i = static_cast<std::size_t>(it - t.omega.begin());
                if (i == t.omega.size()) --i;
                if (i > 0) --i;
                const double w0 = t.omega[i], w1 = t.omega[i + 1];
                const double u = (omega - w0) / (w1 - w0);
                return (1.0 - u) * t.value[i] + u * t.value[i + 1];
            }
        },
        d);
}

TabulatedDispersion load_dispersion_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("dispersion: cannot open '" + path + "'");
    TabulatedDispersion t;
    std::string line;
    long lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line.find_first_not_of("0123456789+-.eE, \t") != std::string::npos)
                continue; // header row
        }
        std::istringstream ss(line);
        double w, re, im;
        char c1, c2;
        if (!(ss >> w >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
            throw ParseError("dispersion: malformed row '" + line + "'", lineno);
        if (!t.omega.empty() && w <= t.omega.back())
            throw ParseError("dispersion: omega must be strictly increasing",
                             lineno);
        t.omega.push_back(w);
        t.value.emplace_back(re, im);
    }
    if (t.omega.size() < 2)
        throw std::runtime_error("dispersion: '" + path +
                                 "' holds fewer than two samples");
    return t;
}

} // namespace fluctem
