#include "fluctem/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "fluctem/errors.hpp"
#include "fluctem/kinematics.hpp"

namespace fluctem {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Same light-cone-safe construction as the kernel quadratures: build modes
// from the band coordinate directly.
Mode band_mode(double omega, double k0, ModeKind kind, double q, double phi) {
    Mode m;
    m.omega = omega;
    m.k0 = k0;
    m.kind = kind;
    double kp = 0.0;
    if (kind == ModeKind::PW) {
        kp = std::sqrt(std::max(0.0, k0 - q) * (k0 + q));
        m.kz = Complex(q, 0.0);
    } else {
        kp = std::hypot(k0, q);
        m.kz = Complex(0.0, q);
    }
    m.kperp = kp * Eigen::Vector2d(std::cos(phi), std::sin(phi));
    return m;
}

using FieldMap = Eigen::Matrix<Complex, 3, 2>; // (s, p) amplitudes -> 3-vector

double trace_form(const FieldMap& a, const Eigen::Matrix2cd& c) {
    return (a * c * a.adjoint()).trace().real();
}

// Spectral weight tr M_E + tr M_B of one mode at height z, divided by the
// thermal factor (every correlator is linear in it). Columns of the field
// maps are the s- and p-amplitudes; the magnetic map swaps them:
// B of (alpha e_perp + beta e_p) is (alpha e_p - beta e_perp).
double unit_trace_weight(const ReflectionProvider& provider, const Mode& mode,
                         double z, const Constants& pc) {
    const ReflectionMatrix r = provider.reflection(mode);
    const PolarizationBasis basis = polarization_basis(mode);

    const Eigen::Vector3cd e_s = basis.e_perp.cast<Complex>();
    const Eigen::Vector3cd e_p_in =
        (-mode.kz * basis.khat_perp.cast<Complex>() +
         Complex(mode.kperp_mag()) * Eigen::Vector3cd::UnitZ()) /
        mode.k0;
    const Eigen::Vector3cd e_p_out =
        (mode.kz * basis.khat_perp.cast<Complex>() +
         Complex(mode.kperp_mag()) * Eigen::Vector3cd::UnitZ()) /
        mode.k0;

    const Complex phase_out = std::exp(Complex(0.0, -1.0) * mode.kz * z);

    FieldMap a_out;
    a_out.col(0) = e_s * phase_out;
    a_out.col(1) = e_p_out * phase_out;
    FieldMap b_out;
    b_out.col(0) = e_p_out * phase_out;
    b_out.col(1) = -e_s * phase_out;

    const ThermalState zero{};
    const double f = thermal_factor(mode.omega, zero, pc);

    if (mode.kind == ModeKind::EW) {
        // no incoming amplitude on the evanescent band; only the decaying
        // outgoing (surface-sourced) wave contributes
        const Eigen::Matrix2cd cs = c_surface_ew(r, mode, zero, pc).c;
        return (trace_form(a_out, cs) + trace_form(b_out, cs)) / f;
    }

    const Complex phase_in = std::exp(Complex(0.0, 1.0) * mode.kz * z);
    FieldMap a_in;
    a_in.col(0) = e_s * phase_in;
    a_in.col(1) = e_p_in * phase_in;
    FieldMap b_in;
    b_in.col(0) = e_p_in * phase_in;
    b_in.col(1) = -e_s * phase_in;

    const Eigen::Matrix2cd ci = c_infinity(mode, zero, pc).c;
    const Eigen::Matrix2cd cs = c_surface_pw(r, mode, zero, pc).c;

    const FieldMap a_tot = a_in + a_out * r;
    const FieldMap b_tot = b_in + b_out * r;

    return (trace_form(a_tot, ci) + trace_form(a_out, cs) +
            trace_form(b_tot, ci) + trace_form(b_out, cs)) /
           f;
}

// Azimuth-resolved radial integrand q * integral dphi (unit trace weight);
// collapses to 2 pi times one evaluation for in-plane isotropic providers.
template <class Weight>
QuadResult<double> band_density(double omega, double k0, ModeKind kind,
                                double lo, double hi, bool isotropic,
                                const QuadSpec& spec, Weight&& weight) {
    auto radial = [&](double q) -> double {
        if (isotropic)
            return q * kTwoPi * weight(band_mode(omega, k0, kind, q, 0.0));
        auto azimuth = [&](double phi) {
            return weight(band_mode(omega, k0, kind, q, phi));
        };
        return q * integrate_periodic(azimuth, spec);
    };
    return integrate_gk15(radial, lo, hi, spec);
}

} // namespace

EmissivityResult hemispherical_emissivity(const ReflectionProvider& provider,
                                          double omega, const QuadSpec& spec,
                                          const Constants& pc) {
    if (!(omega > 0.0))
        throw std::invalid_argument(
            "hemispherical_emissivity: omega must be positive");
    const double k0 = omega / pc.c;
    const bool iso = provider.in_plane_isotropic();

    auto absorbed = [&](const Mode& mode) {
        const ReflectionMatrix r = provider.reflection(mode);
        return 0.5 *
               (Eigen::Matrix2cd(Eigen::Matrix2cd::Identity() -
                                 r * r.adjoint()))
                   .trace()
                   .real();
    };
    auto radial = [&](double kz) -> double {
        if (iso) return kz * absorbed(band_mode(omega, k0, ModeKind::PW, kz, 0.0));
        auto azimuth = [&](double phi) {
            return absorbed(band_mode(omega, k0, ModeKind::PW, kz, phi));
        };
        return kz * integrate_periodic(azimuth, spec) / kTwoPi;
    };

    const QuadResult<double> integral = integrate_gk15(radial, 0.0, k0, spec);
    const double norm = 0.5 * k0 * k0; // value of the integral for R = 0
    return {integral.value / norm, integral.error / norm};
}

EnergyDensityResult energy_density_spectrum(const ReflectionProvider& provider,
                                            double omega, double z,
                                            const ThermalState& state,
                                            const QuadSpec& spec,
                                            const Constants& pc) {
    if (!(omega > 0.0))
        throw std::invalid_argument(
            "energy_density_spectrum: omega must be positive");
    if (!(z < 0.0))
        throw std::domain_error(
            "energy_density_spectrum: z must be strictly negative");

    const double k0 = omega / pc.c;
    const bool iso = provider.in_plane_isotropic();
    const double kappa_max = 0.5 * std::log(1e16) / std::abs(z);

    auto weight = [&](const Mode& mode) {
        return unit_trace_weight(provider, mode, z, pc);
    };

    const QuadResult<double> pw_integral =
        band_density(omega, k0, ModeKind::PW, 0.0, k0, iso, spec, weight);
    const QuadResult<double> ew_integral = band_density(
        omega, k0, ModeKind::EW, 0.0, kappa_max, iso, spec, weight);
    // analytic tail estimate: the integrand beyond the cut keeps decaying
    // as e^{-2 kappa |z|}, so the remaining mass is about the edge value
    // over the decay rate
    double tail = 0.0;
    if (kappa_max > 0.0) {
        const double edge =
            kappa_max * kTwoPi *
            std::abs(weight(band_mode(omega, k0, ModeKind::EW, kappa_max, 0.0)));
        tail = edge / (2.0 * std::abs(z));
    }

    const double f = thermal_factor(omega, state, pc);
    const double zero_point_f = 0.5 * pc.hbar * omega;
    const double measure = 1.0 / (kTwoPi * kTwoPi)     // d^2 kperp/(2 pi)^2
                           / (2.0 * kTwoPi * kTwoPi);  // 1/(8 pi^2) Planck anchor

    EnergyDensityResult out;
    out.pw = f * measure * pw_integral.value;
    out.ew = f * measure * ew_integral.value;
    out.total = out.pw + out.ew;
    out.zero_point =
        zero_point_f * measure * (pw_integral.value + ew_integral.value);
    out.thermal = out.total - out.zero_point;
    out.quad_error =
        f * measure * (pw_integral.error + ew_integral.error + tail);
    return out;
}

} // namespace fluctem
