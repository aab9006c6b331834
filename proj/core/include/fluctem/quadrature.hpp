#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "fluctem/errors.hpp"

namespace fluctem {

/// Budget and tolerances for all adaptive integrals in the library.
struct QuadSpec {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_panels = 4000;
    int max_azimuth_nodes = 4096; // cap for the periodic trapezoid rule
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae (positive half, decreasing) and weights.
inline constexpr double kXgk[7] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714, // centre
};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327, // centre
};

inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(const std::complex<double>& v) { return std::abs(v); }
template <class Derived>
double quad_norm(const Eigen::MatrixBase<Derived>& m) {
    return m.norm();
}

} // namespace detail

template <class T>
struct QuadResult {
    T value;
    double error = 0.0; // accumulated error estimate
    int panels = 0;
};

namespace detail {

template <class T>
struct QuadPanel {
    double a, b;
    T value;
    double error;
};

template <class F>
auto gk15_panel(F& f, double a, double b)
    -> QuadPanel<std::decay_t<std::invoke_result_t<F&, double>>> {
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        T f1 = f(c - h * kXgk[i]);
        T f2 = f(c + h * kXgk[i]);
        T sum = f1 + f2;
        resk += kWgk[i] * sum;
        if (i % 2 == 1) resg += kWg[(i - 1) / 2] * sum;
    }
    resk *= h;
    resg *= h;
    return {a, b, resk, quad_norm(T(resk - resg))};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b] for scalar-, complex- or
/// matrix-valued integrands (error measured in the Frobenius norm). Nodes are
/// strictly interior, so integrable endpoint features (after the caller's
/// variable substitution) need no special casing. Panels are accumulated in
/// left-to-right interval order, making the result deterministic for a given
/// panel set. Throws QuadratureError if the panel budget is exhausted before
/// max(abs_tol, rel_tol * ||I||) is reached.
template <class F>
auto integrate_gk15(F&& f, double a, double b, const QuadSpec& spec = {})
    -> QuadResult<std::decay_t<std::invoke_result_t<F&, double>>> {
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    std::vector<detail::QuadPanel<T>> panels;
    panels.reserve(64);
    panels.push_back(detail::gk15_panel(f, a, b));

    auto total = [&panels]() {
        // sort-free deterministic sum: panels are kept ordered by interval
        T v = panels.front().value;
        double e = panels.front().error;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            v += panels[i].value;
            e += panels[i].error;
        }
        return std::pair<T, double>(v, e);
    };

    while (true) {
        auto [value, error] = total();
        const double target = std::max(spec.abs_tol,
                                       spec.rel_tol * detail::quad_norm(value));
        if (error <= target || error == 0.0)
            return {value, error, static_cast<int>(panels.size())};
        if (static_cast<int>(panels.size()) >= spec.max_panels)
            throw QuadratureError("integrate_gk15: panel budget exhausted", error);
        // split the worst panel; ties resolve to the leftmost
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        const double pa = panels[worst].a, pb = panels[worst].b;
        const double mid = 0.5 * (pa + pb);
        if (mid <= pa || mid >= pb)
            throw QuadratureError("integrate_gk15: interval too small to split",
                                  error);
        auto left = detail::gk15_panel(f, pa, mid);
        auto right = detail::gk15_panel(f, mid, pb);
        panels[worst] = left;
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                      right);
    }
}

/// Periodic trapezoid rule over [0, 2pi) with node doubling until two
/// successive refinements agree to rel_tol (spectrally accurate for the
/// smooth periodic integrands used here). Returns the refined value.
template <class F>
auto integrate_periodic(F&& f, const QuadSpec& spec = {}, int initial_nodes = 16)
    -> std::decay_t<std::invoke_result_t<F&, double>> {
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    constexpr double two_pi = 6.283185307179586476925286766559;
    int n = std::max(4, initial_nodes);
    auto eval = [&](int nodes) {
        T acc = f(0.0);
        for (int j = 1; j < nodes; ++j) acc += f(two_pi * j / nodes);
        return T((two_pi / nodes) * acc);
    };
    T coarse = eval(n);
    while (true) {
        if (2 * n > spec.max_azimuth_nodes)
            throw QuadratureError("integrate_periodic: azimuth node cap reached",
                                  detail::quad_norm(coarse));
        T fine = eval(2 * n);
        const double diff = detail::quad_norm(T(fine - coarse));
        const double scale = std::max(detail::quad_norm(fine), 1e-300);
        if (diff <= std::max(spec.abs_tol, 0.1 * spec.rel_tol * scale))
            return fine;
        coarse = fine;
        n *= 2;
    }
}

} // namespace fluctem
