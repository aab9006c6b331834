#pragma once

#include <complex>

#include <Eigen/Dense>

#include "fluctem/constants.hpp"

namespace fluctem {

using Complex = std::complex<double>;

/// Band classification of a surface mode: propagating (real kz > 0),
/// evanescent (kz = i*kappa, kappa > 0), or exactly on the light cone.
enum class ModeKind { PW, EW, Grazing };

/// One (omega, kperp) point of the surface mode continuum. kz always sits
/// on the branch Re kz >= 0, Im kz >= 0; k0 = omega/c is cached so that
/// downstream formulas need no unit constants of their own.
struct Mode {
    double omega = 0.0;
    Eigen::Vector2d kperp = Eigen::Vector2d::Zero();
    Complex kz{0.0, 0.0};
    double k0 = 0.0;
    ModeKind kind = ModeKind::Grazing;

    double kperp_mag() const { return kperp.norm(); }
};

/// Complex square root restricted to the closed first quadrant
/// (Re >= 0 and Im >= 0): the decay/outgoing branch for passive media.
Complex branch_sqrt(Complex z);

/// kz(omega, |kperp|) = sqrt(omega^2/c^2 - kperp^2) on the first-quadrant
/// branch: real on the propagating band, purely imaginary on the
/// evanescent band, zero exactly on the light cone.
Complex longitudinal_wavenumber(double omega, double kperp_mag,
                                const Constants& pc = {});

/// Builds a classified Mode. omega must be positive.
Mode make_mode(double omega, const Eigen::Vector2d& kperp,
               const Constants& pc = {});

/// Right-handed mode triad. e_perp = zhat x khat_perp is the s-polarization
/// direction, shared by the incoming and outgoing waves; k_in/k_out are the
/// full (complex) wavevectors kperp +/- kz*zhat. The in-plane direction
/// degenerates at kperp = 0, where khat_perp is fixed to xhat.
struct PolarizationBasis {
    Eigen::Vector3d e_perp;
    Eigen::Vector3d khat_perp;
    Eigen::Vector3cd k_in;
    Eigen::Vector3cd k_out;
};

PolarizationBasis polarization_basis(const Mode& mode);

/// Diagonal maps from (s, p) wave amplitudes to transverse field components
/// in the (e_perp, khat_perp) basis, evaluated at height w < 0:
///   w_in  = diag(e^{i kz w},  -(c kz/omega) e^{i kz w})   (incoming wave)
///   w_out = diag(e^{-i kz w}, +(c kz/omega) e^{-i kz w})  (outgoing wave)
/// On the evanescent band w_out decays like e^{-|kz||w|} and w_in grows
/// correspondingly (only ever multiplied by amplitudes sourced at infinity).
struct TransverseMap {
    Eigen::Matrix2cd w_in;
    Eigen::Matrix2cd w_out;
};

TransverseMap transverse_map(const Mode& mode, double w);

} // namespace fluctem
