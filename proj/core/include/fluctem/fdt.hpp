#pragma once

#include <Eigen/Dense>

#include "fluctem/constants.hpp"
#include "fluctem/correlators.hpp"
#include "fluctem/kinematics.hpp"
#include "fluctem/materials.hpp"
#include "fluctem/quadrature.hpp"

namespace fluctem {

/// k-integrated retarded field kernel over in-plane Cartesian components
/// (i, j = x, y): the linear-response tensor relating a transverse source
/// dipole on the plane z = w < 0 to the transverse field it produces a
/// lateral offset delta_x away on the same plane.
///
/// The evanescent-band vacuum terms are anti-hermitean, purely reactive,
/// and divergent under the k integral; they cancel identically in every
/// hermitean (dissipative) combination this library consumes, so the
/// numerical integral keeps only the reflected evanescent terms. The two
/// band contributions are reported separately alongside their sum.
struct KernelTensor {
    Eigen::Matrix2cd t;            // pw + ew_reflected
    Eigen::Matrix2cd pw;           // propagating band, complete integrand
    Eigen::Matrix2cd ew_reflected; // evanescent band, reflected terms only
    double quad_error = 0.0;       // quadrature estimate plus truncation tail
};

/// k-integrated spectral density S_ij(omega; delta_x, w) of the transverse
/// fluctuating field between two points on the plane z = w, in in-plane
/// Cartesian components.
struct SpectralDensity {
    Eigen::Matrix2cd s;
    double quad_error = 0.0;
};

struct FdtOptions {
    /// Negative control for the dissipation identity: replaces the
    /// anti-hermitean combination (R - R^dagger) in the evanescent surface
    /// correlator with the hermitean one (R + R^dagger). The modewise
    /// residual then jumps from roundoff to O(1) on the evanescent band.
    bool corrupt_ew_correlator = false;
};

/// Braced tensor of the retarded kernel at one mode, rotated from the local
/// (e_perp, khat_perp) basis to Cartesian (x, y) components:
///   [ -(k0/kz)(1 + r_ss e2)   r_sp e2              ]
///   [ -r_ps e2                (kz/k0)(-1 + r_pp e2) ]   (local basis)
/// with e2 = exp(-2 i kz w) the round-trip phase down to the surface and
/// back. Carries no measure or prefactor. Rejects Grazing modes and w >= 0.
Eigen::Matrix2cd kernel_integrand(const ReflectionProvider& provider,
                                  const Mode& mode, double w);

/// Retarded kernel at lateral offset delta_x:
///   (1/(2 pi c)) [ integral_0^k0 dkz kz A_full(kz)
///                + integral_0^kmax dkappa kappa A_refl(kappa) ],
/// where A are azimuthal averages of kernel_integrand times
/// exp(i kperp . delta_x), the propagating band is parametrized by kz
/// (which absorbs the 1/kz of the s-polarized vacuum term into the
/// measure), and the evanescent band by kappa = |kz|, truncated where the
/// round-trip decay e^{-2 kappa |w|} reaches 1e-16 (a tail estimate is
/// folded into quad_error). Throws QuadratureError when the panel or
/// azimuth-node budget is exhausted.
KernelTensor retarded_kernel(const ReflectionProvider& provider, double omega,
                             const Eigen::Vector2d& delta_x, double w,
                             const QuadSpec& spec = {},
                             const Constants& pc = {});

/// Modewise dissipation identity: the spectral matrix of the transverse
/// field must equal -F(omega, T) (2 pi / c) (T_k + T_k^dagger) mode by
/// mode, where T_k is kernel_integrand. Returns
///   || M - rhs || / max(||M||, ||rhs||)
/// in Cartesian components (0 when both sides vanish, e.g. for a surface
/// that is dark on the evanescent band). Expected below 1e-10 for every
/// provider, any mode off the light cone, any temperature and any w < 0;
/// the corrupt_ew_correlator option breaks it by construction.
double fdt_residual_modewise(const ReflectionProvider& provider,
                             const Mode& mode, const ThermalState& state,
                             double w, const FdtOptions& options = {},
                             const Constants& pc = {});

/// k-integrated spectral density of the transverse field,
///   S_ij = integral d^2 kperp / (2 pi)^2  M_ij(kperp) e^{i kperp . delta_x},
/// using the same band parametrizations and evanescent truncation as
/// retarded_kernel.
SpectralDensity spectral_density_tensor(const ReflectionProvider& provider,
                                        double omega,
                                        const Eigen::Vector2d& delta_x,
                                        double w, const ThermalState& state,
                                        const QuadSpec& spec = {},
                                        const FdtOptions& options = {},
                                        const Constants& pc = {});

/// Integrated version of the modewise identity: compares
/// spectral_density_tensor against
///   -F(omega, T) [ E~_ij(delta_x, w) + conj(E~_ji(-delta_x, w)) ]
/// with both sides obtained by this module's own quadrature. Returns the
/// relative defect with the same symmetric normalization as the modewise
/// residual. Quadrature-limited: expect ~rel_tol, not roundoff.
double fdt_residual_realspace(const ReflectionProvider& provider, double omega,
                              const Eigen::Vector2d& delta_x, double w,
                              const ThermalState& state,
                              const QuadSpec& spec = {},
                              const Constants& pc = {});

} // namespace fluctem
