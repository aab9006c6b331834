#include "fluctem/correlators.hpp"

#include <cmath>
#include <stdexcept>

#include "fluctem/errors.hpp"

namespace fluctem {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_off_cone(const Mode& mode, const char* who) {
    if (mode.kind == ModeKind::Grazing)
        throw GrazingModeError(std::string(who) + ": undefined at kz = 0");
}

// 2 pi omega / c^2 expressed through the cached k0 = omega/c
double mode_prefactor(const Mode& mode) {
    return kTwoPi * mode.k0 * mode.k0 / mode.omega;
}

Eigen::Matrix2cd hermitize(const Eigen::Matrix2cd& m) {
    return 0.5 * (m + m.adjoint());
}

} // namespace

double thermal_factor(double omega, const ThermalState& state, const Constants& pc) {
    if (!(omega > 0.0))
        throw std::invalid_argument("thermal_factor: omega must be positive");
    if (state.temperature < 0.0)
        throw std::invalid_argument("thermal_factor: temperature must be >= 0");
    const double zero_point = 0.5 * pc.hbar * omega;
    if (state.temperature == 0.0) return zero_point;
    const double x = zero_point / (pc.k_B * state.temperature);
    return zero_point / std::tanh(x);
}

CorrelatorMatrix c_infinity(const Mode& mode, const ThermalState& state,
                            const Constants& pc) {
    require_off_cone(mode, "c_infinity");
    const double re_inv_kz =
        mode.kind == ModeKind::PW ? 1.0 / mode.kz.real() : 0.0;
    const double weight =
        thermal_factor(mode.omega, state, pc) * mode_prefactor(mode) * re_inv_kz;
    return {weight * Eigen::Matrix2cd::Identity(), mode,
            CorrelatorKind::InfinityInfinity};
}

CorrelatorMatrix c_cross(const Mode& mode) {
    require_off_cone(mode, "c_cross");
    return {Eigen::Matrix2cd::Zero(), mode, CorrelatorKind::Cross};
}

CorrelatorMatrix c_surface_pw(const ReflectionMatrix& r, const Mode& mode,
                              const ThermalState& state, const Constants& pc) {
    require_off_cone(mode, "c_surface_pw");
    if (mode.kind != ModeKind::PW)
        throw std::domain_error("c_surface_pw: mode is not propagating");
    const double weight =
        thermal_factor(mode.omega, state, pc) * mode_prefactor(mode) /
        mode.kz.real();
    const Eigen::Matrix2cd h =
        hermitize(Eigen::Matrix2cd::Identity() - r * r.adjoint());
    return {weight * h, mode, CorrelatorKind::SurfaceSurface};
}

CorrelatorMatrix c_surface_ew(const ReflectionMatrix& r, const Mode& mode,
                              const ThermalState& state, const Constants& pc) {
    require_off_cone(mode, "c_surface_ew");
    if (mode.kind != ModeKind::EW)
        throw std::domain_error("c_surface_ew: mode is not evanescent");
    const double weight =
        thermal_factor(mode.omega, state, pc) * mode_prefactor(mode) /
        mode.kz.imag();
    const Complex minus_i(0.0, -1.0);
    const Eigen::Matrix2cd h = hermitize(minus_i * (r - r.adjoint()));
    return {weight * h, mode, CorrelatorKind::SurfaceSurface};
}

Eigen::Matrix2cd mode_spectral_matrix(const ReflectionProvider& provider,
                                      const Mode& mode, const ThermalState& state,
                                      double w, const Constants& pc) {
    require_off_cone(mode, "mode_spectral_matrix");
    const TransverseMap tm = transverse_map(mode, w);
    const ReflectionMatrix r = provider.reflection(mode);
    Eigen::Matrix2cd m;
    if (mode.kind == ModeKind::PW) {
        const Eigen::Matrix2cd v = tm.w_in + tm.w_out * r;
        m = v * c_infinity(mode, state, pc).c * v.adjoint() +
            tm.w_out * c_surface_pw(r, mode, state, pc).c * tm.w_out.adjoint();
    } else {
        // incoming-wave correlator vanishes identically on the EW band
        m = tm.w_out * c_surface_ew(r, mode, state, pc).c * tm.w_out.adjoint();
    }
    return hermitize(m);
}

} // namespace fluctem
