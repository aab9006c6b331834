#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fluctem/kinematics.hpp"

using namespace fluctem;

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

TEST_SUITE("kinematics") {

TEST_CASE("branch_sqrt stays in the closed upper half-plane") {
    CHECK(branch_sqrt({4.0, 0.0}) == Complex(2.0, 0.0));
    CHECK(branch_sqrt({-1.0, 0.0}) == Complex(0.0, 1.0));
    CHECK(branch_sqrt({-4.0, 0.0}) == Complex(0.0, 2.0));
    CHECK(branch_sqrt({0.0, 0.0}) == Complex(0.0, 0.0));

    // (1 + 2i)^2 = -3 + 4i
    const Complex upper = branch_sqrt({-3.0, 4.0});
    CHECK(std::abs(upper - Complex(1.0, 2.0)) < 1e-15);

    // the conjugate argument folds to the second quadrant, not the fourth:
    // decaying waves in passive media need Im >= 0
    const Complex lower = branch_sqrt({-3.0, -4.0});
    CHECK(std::abs(lower - Complex(-1.0, 2.0)) < 1e-15);

    // squaring always recovers the argument
    for (const Complex z : {Complex(0.3, -2.0), Complex(-5.0, 0.1),
                            Complex(7.0, 7.0), Complex(-0.25, -1e-8)}) {
        const Complex w = branch_sqrt(z);
        CHECK(w.imag() >= 0.0);
        CHECK(std::abs(w * w - z) <= 1e-14 * std::abs(z));
    }
}

TEST_CASE("longitudinal wavenumber on both bands") {
    CHECK(longitudinal_wavenumber(2.0, 0.0) == Complex(2.0, 0.0));
    CHECK(longitudinal_wavenumber(5.0, 3.0) == Complex(4.0, 0.0));
    // omega = 1, kperp = 2: kz = i sqrt(3)
    const Complex ew = longitudinal_wavenumber(1.0, 2.0);
    CHECK(ew.real() == 0.0);
    CHECK(ew.imag() == doctest::Approx(kSqrt3).epsilon(1e-15));
    // exactly on the light cone
    CHECK(longitudinal_wavenumber(1.0, 1.0) == Complex(0.0, 0.0));
}

TEST_CASE("longitudinal wavenumber respects the unit system") {
    Constants pc;
    pc.c = 2.0;
    // k0 = omega / c = 2, kperp = 1 -> kz = sqrt(3)
    const Complex kz = longitudinal_wavenumber(4.0, 1.0, pc);
    CHECK(kz.real() == doctest::Approx(kSqrt3).epsilon(1e-15));
    CHECK(kz.imag() == 0.0);
}

TEST_CASE("longitudinal wavenumber rejects bad arguments") {
    CHECK_THROWS_AS(longitudinal_wavenumber(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(longitudinal_wavenumber(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(longitudinal_wavenumber(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("make_mode classifies the bands") {
    const Mode pw = make_mode(5.0, {3.0, 0.0});
    CHECK(pw.kind == ModeKind::PW);
    CHECK(pw.kz == Complex(4.0, 0.0));
    CHECK(pw.k0 == 5.0);
    CHECK(pw.kperp_mag() == 3.0);

    const Mode ew = make_mode(1.0, {1.2, 1.6}); // |kperp| = 2
    CHECK(ew.kind == ModeKind::EW);
    CHECK(ew.kz.real() == 0.0);
    CHECK(ew.kz.imag() == doctest::Approx(kSqrt3).epsilon(1e-15));

    const Mode grazing = make_mode(1.0, {0.6, 0.8});
    CHECK(grazing.kind == ModeKind::Grazing);
    CHECK(grazing.kz == Complex(0.0, 0.0));
}

TEST_CASE("kz^2 + kperp^2 = (omega/c)^2 on both bands") {
    for (const double kp : {0.0, 0.4, 0.99, 1.01, 3.0, 40.0}) {
        const Mode m = make_mode(1.0, {kp, 0.0});
        const Complex lhs = m.kz * m.kz + Complex(kp * kp, 0.0);
        CHECK(std::abs(lhs - Complex(1.0, 0.0)) < 1e-12 * std::max(1.0, kp * kp));
    }
}

TEST_CASE("polarization basis is a right-handed orthonormal triad") {
    const Mode m = make_mode(2.0, {0.9, -1.2});
    const PolarizationBasis b = polarization_basis(m);
    CHECK(b.e_perp.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.khat_perp.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(b.e_perp.dot(b.khat_perp)) < 1e-15);
    CHECK(b.e_perp.z() == 0.0);
    CHECK(b.khat_perp.z() == 0.0);
    // e_perp = zhat x khat_perp
    const Eigen::Vector3d cross =
        Eigen::Vector3d::UnitZ().cross(b.khat_perp);
    CHECK((b.e_perp - cross).norm() < 1e-15);
    // full wavevectors: kperp +/- kz zhat, and k . k = k0^2 (complex square)
    CHECK(b.k_in.z() == m.kz);
    CHECK(b.k_out.z() == -m.kz);
    const Complex k_dot_k =
        b.k_in.x() * b.k_in.x() + b.k_in.y() * b.k_in.y() + b.k_in.z() * b.k_in.z();
    CHECK(std::abs(k_dot_k - Complex(m.k0 * m.k0, 0.0)) < 1e-12);
}

TEST_CASE("polarization basis degenerate direction at kperp = 0") {
    const Mode m = make_mode(1.0, {0.0, 0.0});
    const PolarizationBasis b = polarization_basis(m);
    CHECK(b.khat_perp == Eigen::Vector3d::UnitX());
    CHECK(b.e_perp == Eigen::Vector3d::UnitY());
}

TEST_CASE("polarization basis co-rotates with kperp") {
    const double alpha = 0.7;
    Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
    rot.topLeftCorner<2, 2>() << std::cos(alpha), -std::sin(alpha),
        std::sin(alpha), std::cos(alpha);
    const Eigen::Vector2d k(1.3, -0.4);
    const Eigen::Vector2d k_rot = rot.topLeftCorner<2, 2>() * k;
    const PolarizationBasis b0 = polarization_basis(make_mode(3.0, k));
    const PolarizationBasis b1 = polarization_basis(make_mode(3.0, k_rot));
    CHECK((b1.khat_perp - rot * b0.khat_perp).norm() < 1e-14);
    CHECK((b1.e_perp - rot * b0.e_perp).norm() < 1e-14);
}

TEST_CASE("transverse map: diagonal, reciprocal phases, band behaviour") {
    const double w = -0.4;
    SUBCASE("propagating") {
        const Mode m = make_mode(5.0, {3.0, 0.0}); // kz = 4
        const TransverseMap tm = transverse_map(m, w);
        CHECK(tm.w_in(0, 1) == Complex(0.0, 0.0));
        CHECK(tm.w_in(1, 0) == Complex(0.0, 0.0));
        // product of in and out maps: the phases cancel exactly
        const Eigen::Matrix2cd prod = tm.w_in * tm.w_out;
        const Complex chi = m.kz / m.k0;
        CHECK(std::abs(prod(0, 0) - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(prod(1, 1) + chi * chi) < 1e-15);
        // unit-modulus phases on the propagating band
        CHECK(std::abs(std::abs(tm.w_in(0, 0)) - 1.0) < 1e-15);
        CHECK(std::abs(std::abs(tm.w_out(0, 0)) - 1.0) < 1e-15);
    }
    SUBCASE("evanescent") {
        const Mode m = make_mode(1.0, {2.0, 0.0}); // kz = i sqrt(3)
        const TransverseMap tm = transverse_map(m, w);
        const double kappa = m.kz.imag();
        // outgoing components decay away from the surface, incoming grow
        CHECK(std::abs(tm.w_out(0, 0)) ==
              doctest::Approx(std::exp(kappa * w)).epsilon(1e-14));
        CHECK(std::abs(tm.w_in(0, 0)) ==
              doctest::Approx(std::exp(-kappa * w)).epsilon(1e-14));
    }
    SUBCASE("rejects the surface and the body side") {
        const Mode m = make_mode(5.0, {3.0, 0.0});
        CHECK_THROWS_AS(transverse_map(m, 0.0), std::domain_error);
        CHECK_THROWS_AS(transverse_map(m, 0.3), std::domain_error);
    }
}

} // TEST_SUITE
