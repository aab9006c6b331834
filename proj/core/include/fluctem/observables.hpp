#pragma once

#include "fluctem/constants.hpp"
#include "fluctem/correlators.hpp"
#include "fluctem/materials.hpp"
#include "fluctem/quadrature.hpp"

namespace fluctem {

struct EmissivityResult {
    double value = 0.0;
    double quad_error = 0.0;
};

/// Hemispherical spectral emissivity at frequency omega:
///   integral_0^k0 dkz kz tr(1 - R R^dagger)/2  /  (k0^2 / 2),
/// i.e. the polarization-averaged directional emissivity 1 - |r|^2
/// weighted by the projected solid angle (the kz measure is the cos(theta)
/// flux factor). Normalized so a black surface (R = 0) gives exactly 1 and
/// a perfect mirror exactly 0; in [0, 1] for any passive surface. The
/// thermal occupation factor cancels in the ratio. For providers that are
/// not in-plane isotropic the integrand is additionally averaged over
/// azimuth.
EmissivityResult hemispherical_emissivity(const ReflectionProvider& provider,
                                          double omega,
                                          const QuadSpec& spec = {},
                                          const Constants& pc = {});

/// Spectral energy density u(omega, z) at height z < 0 and its
/// decomposition. pw + ew == total and zero_point + thermal == total hold
/// exactly by construction.
struct EnergyDensityResult {
    double total = 0.0;      // full spectral energy density
    double pw = 0.0;         // propagating-band contribution
    double ew = 0.0;         // evanescent-band contribution
    double zero_point = 0.0; // T-independent part (per-mode weight hbar omega / 2)
    double thermal = 0.0;    // total - zero_point; Planck spectrum for R = 0
    double quad_error = 0.0;
};

/// Spectral energy density of the fluctuating field at height z < 0:
///   u(omega, z) = (1/(8 pi^2)) integral d^2 kperp / (2 pi)^2
///                 [ tr M_E(omega, kperp, z) + tr M_B(omega, kperp, z) ],
/// where M_E and M_B are the spectral matrices of the full 3-component
/// electric and magnetic fields of each mode (magnetic columns are the
/// s <-> p duals of the electric ones). The constant is fixed by the black
/// surface limit: for R = 0 the thermal part equals the Planck energy
/// density (omega^2 / pi^2 c^3) hbar omega / (e^{hbar omega/k_B T} - 1)
/// independently of z. The evanescent band is truncated where the field
/// decay e^{-2 |kz| |z|} reaches 1e-16, with a tail estimate folded into
/// quad_error.
EnergyDensityResult energy_density_spectrum(const ReflectionProvider& provider,
                                            double omega, double z,
                                            const ThermalState& state,
                                            const QuadSpec& spec = {},
                                            const Constants& pc = {});

} // namespace fluctem
