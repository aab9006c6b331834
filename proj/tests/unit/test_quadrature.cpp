#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "fluctem/errors.hpp"
#include "fluctem/kinematics.hpp"
#include "fluctem/quadrature.hpp"

using namespace fluctem;

TEST_SUITE("quadrature") {

TEST_CASE("single panel integrates low-degree polynomials exactly") {
    const auto cubic = integrate_gk15([](double x) { return x * x * x; }, 0.0, 1.0);
    CHECK(cubic.value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(cubic.panels == 1);

    const auto deg13 = integrate_gk15(
        [](double x) { return 14.0 * std::pow(x, 13.0); }, 0.0, 1.0);
    CHECK(deg13.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("smooth transcendental integrands") {
    const auto sine = integrate_gk15([](double x) { return std::sin(x); }, 0.0,
                                     std::numbers::pi);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(sine.error < 1e-10);

    const auto gauss = integrate_gk15(
        [](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(gauss.value ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("adaptive refinement resolves integrable endpoint singularities") {
    QuadSpec spec;
    spec.rel_tol = 1e-10;
    const auto root = integrate_gk15(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
    CHECK(root.value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(root.panels > 5); // must actually have subdivided

    const auto logsing =
        integrate_gk15([](double x) { return std::log(x); }, 0.0, 1.0, spec);
    CHECK(logsing.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("panel budget exhaustion raises a numerical error") {
    QuadSpec spec;
    spec.rel_tol = 1e-14;
    spec.max_panels = 3;
    CHECK_THROWS_AS(integrate_gk15([](double x) { return std::sin(1000.0 * x); },
                                   0.0, 1.0, spec),
                    QuadratureError);
}

TEST_CASE("complex- and matrix-valued integrands") {
    const auto cplx = integrate_gk15(
        [](double x) { return std::exp(Complex(0.0, x)); }, 0.0, 1.0);
    CHECK(std::abs(cplx.value - Complex(std::sin(1.0), 1.0 - std::cos(1.0))) <
          1e-13);

    const auto mat = integrate_gk15(
        [](double x) {
            Eigen::Matrix2d m;
            m << x, x * x, std::cos(x), 1.0;
            return m;
        },
        0.0, 2.0);
    CHECK(mat.value(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(mat.value(0, 1) == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    CHECK(mat.value(1, 0) == doctest::Approx(std::sin(2.0)).epsilon(1e-13));
    CHECK(mat.value(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("periodic trapezoid rule converges geometrically") {
    // closed form: integral over one period of 1/(2 + cos phi) = 2 pi / sqrt(3)
    const double closed_form = 2.0 * std::numbers::pi / std::sqrt(3.0);
    const double value = integrate_periodic(
        [](double phi) { return 1.0 / (2.0 + std::cos(phi)); }, QuadSpec{});
    CHECK(value == doctest::Approx(closed_form).epsilon(1e-12));

    // matrix-valued periodic integrand
    const Eigen::Matrix2cd m = integrate_periodic(
        [](double phi) {
            Eigen::Matrix2cd v;
            v << std::cos(phi) * std::cos(phi), std::exp(Complex(0.0, phi)),
                std::sin(phi), Complex(1.0, 0.0);
            return v;
        },
        QuadSpec{});
    CHECK(std::abs(m(0, 0) - Complex(std::numbers::pi, 0.0)) < 1e-12);
    CHECK(std::abs(m(0, 1)) < 1e-12); // oscillatory mean vanishes
    CHECK(std::abs(m(1, 0)) < 1e-12);
    CHECK(std::abs(m(1, 1) - Complex(2.0 * std::numbers::pi, 0.0)) < 1e-12);
}

TEST_CASE("results are deterministic across repeated evaluation") {
    auto f = [](double x) { return std::exp(-x) * std::cos(11.0 * x); };
    const auto a = integrate_gk15(f, 0.0, 9.0);
    const auto b = integrate_gk15(f, 0.0, 9.0);
    CHECK(a.value == b.value); // bitwise
    CHECK(a.error == b.error);
    CHECK(a.panels == b.panels);
}

} // TEST_SUITE
