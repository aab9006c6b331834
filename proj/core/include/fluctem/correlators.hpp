#pragma once

#include <Eigen/Dense>

#include "fluctem/constants.hpp"
#include "fluctem/kinematics.hpp"
#include "fluctem/materials.hpp"

namespace fluctem {

struct ThermalState {
    double temperature = 0.0; // absolute; 0 selects the zero-point limit
};

/// F(omega, T) = (hbar omega / 2) coth(hbar omega / 2 k_B T); the T -> 0
/// limit hbar omega / 2 is taken analytically. Classical limit k_B T for
/// hbar omega << k_B T.
double thermal_factor(double omega, const ThermalState& state,
                      const Constants& pc = {});

enum class CorrelatorKind { InfinityInfinity, SurfaceSurface, Cross };

/// Spectral amplitude correlator of one mode, in the (s, p) basis:
/// <a_lambda a_mu^*> = (2 pi)^3 c_{lambda mu} delta(omega - omega')
/// delta^2(kperp - kperp'). Hermitean by construction.
struct CorrelatorMatrix {
    Eigen::Matrix2cd c;
    Mode mode;
    CorrelatorKind kind = CorrelatorKind::Cross;
};

/// Incoming-wave correlator F (2 pi omega / c^2) Re(1/kz) * Id: isotropic
/// black-body weight on the propagating band, exactly zero on the
/// evanescent band. Rejects Grazing modes.
CorrelatorMatrix c_infinity(const Mode& mode, const ThermalState& state,
                            const Constants& pc = {});

/// Incoming and surface-sourced amplitudes are uncorrelated.
CorrelatorMatrix c_cross(const Mode& mode);

/// Surface-wave correlator on the propagating band:
/// (2 pi omega / (c^2 kz)) F (1 - R R^dagger). Zero for a perfect mirror,
/// equal to c_infinity's weight for a black surface.
CorrelatorMatrix c_surface_pw(const ReflectionMatrix& r, const Mode& mode,
                              const ThermalState& state, const Constants& pc = {});

/// Surface-wave correlator on the evanescent band:
/// -i (2 pi omega / (c^2 |kz|)) F (R - R^dagger). Vanishes iff R is
/// hermitean: a surface is evanescent-dark exactly when its reflection
/// matrix is hermitean on the EW band.
CorrelatorMatrix c_surface_ew(const ReflectionMatrix& r, const Mode& mode,
                              const ThermalState& state, const Constants& pc = {});

/// Spectral matrix of the transverse field components at height w < 0 in the
/// local (e_perp, khat_perp) basis:
///   M = (w_in + w_out R) C_inf (w_in + w_out R)^dagger
///       + w_out C_surf w_out^dagger,
/// with C_inf dropped analytically on the evanescent band (it vanishes
/// there, and the incoming phases would otherwise overflow). Hermitean PSD
/// for passive providers.
Eigen::Matrix2cd mode_spectral_matrix(const ReflectionProvider& provider,
                                      const Mode& mode, const ThermalState& state,
                                      double w, const Constants& pc = {});

} // namespace fluctem
