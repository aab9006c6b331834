#include "fluctem/fdt.hpp"

#include <cmath>
#include <stdexcept>

#include "fluctem/errors.hpp"

namespace fluctem {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Rotation from the local (e_perp, khat_perp) basis to Cartesian (x, y):
// columns are the in-plane basis vectors. Real, symmetric, orthogonal.
Eigen::Matrix2d basis_rotation(double cph, double sph) {
    Eigen::Matrix2d u;
    u << -sph, cph,
          cph, sph;
    return u;
}

Eigen::Matrix2d basis_rotation(const Eigen::Vector2d& kperp) {
    const double mag = kperp.norm();
    if (mag == 0.0) return basis_rotation(1.0, 0.0); // khat_perp -> xhat
    return basis_rotation(kperp.x() / mag, kperp.y() / mag);
}

// Builds a mode from its band coordinate (kz on the propagating band,
// kappa = |kz| on the evanescent band) without reclassification, so that
// roundoff next to the light cone can never produce a Grazing mode inside
// a quadrature loop.
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

// Braced kernel tensor at one mode in the local (e_perp, khat_perp) basis;
// include_vacuum selects whether the reflection-independent terms
// -(k0/kz) e_perp e_perp and -(kz/k0) khat khat are kept.
Eigen::Matrix2cd braced_tensor(const ReflectionMatrix& r, const Mode& mode,
                               double w, bool include_vacuum) {
    const Complex e2 = std::exp(Complex(0.0, -2.0) * mode.kz * w);
    const Complex chi = mode.kz / mode.k0;
    const double vac = include_vacuum ? 1.0 : 0.0;
    Eigen::Matrix2cd t;
    t(0, 0) = -(vac + r(0, 0) * e2) / chi;
    t(0, 1) = r(0, 1) * e2;
    t(1, 0) = -r(1, 0) * e2;
    t(1, 1) = chi * (r(1, 1) * e2 - vac);
    return t;
}

// One band of a k-plane integral: integral_lo^hi dq q * azimuthal average
// of u(phi) T_pol(mode(q, phi)) u(phi)^T e^{i kperp . delta_x}. For
// in-plane-isotropic providers the polarization-basis tensor is evaluated
// once per radius. On the evanescent band an analytic estimate of the
// truncated tail (integrand ~ e^{-2 kappa |w|}, remaining mass ~ value at
// the cut divided by the decay rate 2|w|) is added to the error.
template <class TensorAtMode>
QuadResult<Eigen::Matrix2cd> band_integral(double omega, double k0,
                                           ModeKind kind, double lo, double hi,
                                           const Eigen::Vector2d& delta_x,
                                           bool isotropic, double w,
                                           const QuadSpec& spec,
                                           TensorAtMode&& tensor_at_mode) {
    auto radial = [&](double q) -> Eigen::Matrix2cd {
        Eigen::Matrix2cd tpol_iso;
        double kp;
        {
            const Mode axis = band_mode(omega, k0, kind, q, 0.0);
            kp = axis.kperp_mag();
            if (isotropic) tpol_iso = tensor_at_mode(axis);
        }
        auto azimuth = [&](double phi) -> Eigen::Matrix2cd {
            const double cph = std::cos(phi);
            const double sph = std::sin(phi);
            const Eigen::Matrix2cd tpol =
                isotropic ? tpol_iso
                          : tensor_at_mode(band_mode(omega, k0, kind, q, phi));
            const Eigen::Matrix2d u = basis_rotation(cph, sph);
            const double phase =
                kp * (delta_x.x() * cph + delta_x.y() * sph);
            return Eigen::Matrix2cd(std::exp(Complex(0.0, phase)) *
                                    (u * tpol * u.transpose()));
        };
        return Eigen::Matrix2cd(q * integrate_periodic(azimuth, spec));
    };

    QuadResult<Eigen::Matrix2cd> res = integrate_gk15(radial, lo, hi, spec);
    if (kind == ModeKind::EW && hi > 0.0)
        res.error += detail::quad_norm(radial(hi)) / (2.0 * std::abs(w));
    return res;
}

void require_depth(double w, const char* where) {
    if (!(w < 0.0))
        throw std::domain_error(std::string(where) +
                                ": w must be strictly negative");
}

// Spectral matrix of the transverse field in the local basis, with the
// optional deliberately-broken evanescent correlator used as a negative
// control of the dissipation identity.
Eigen::Matrix2cd spectral_matrix_pol(const ReflectionProvider& provider,
                                     const Mode& mode, const ThermalState& state,
                                     double w, const FdtOptions& options,
                                     const Constants& pc) {
    if (!options.corrupt_ew_correlator || mode.kind != ModeKind::EW)
        return mode_spectral_matrix(provider, mode, state, w, pc);
    const ReflectionMatrix r = provider.reflection(mode);
    const double f = thermal_factor(mode.omega, state, pc);
    const double kappa = mode.kz.imag();
    // -i (2 pi omega / c^2 |kz|) F (R + R^dagger): hermitean combination in
    // place of the anti-hermitean one, breaking the identity by design.
    const Eigen::Matrix2cd c_bad = Complex(0.0, -kTwoPi * mode.k0 /
                                                    (pc.c * kappa)) *
                                   f * (r + r.adjoint());
    const TransverseMap tm = transverse_map(mode, w);
    return Eigen::Matrix2cd(tm.w_out * c_bad * tm.w_out.adjoint());
}

double evanescent_cut(double w) {
    // e^{-2 kappa |w|} = 1e-16 at the cut
    return 0.5 * std::log(1e16) / std::abs(w);
}

} // namespace

Eigen::Matrix2cd kernel_integrand(const ReflectionProvider& provider,
                                  const Mode& mode, double w) {
    require_depth(w, "kernel_integrand");
    if (mode.kind == ModeKind::Grazing)
        throw GrazingModeError("kernel_integrand: mode on the light cone");
    const ReflectionMatrix r = provider.reflection(mode);
    const Eigen::Matrix2d u = basis_rotation(mode.kperp);
    return Eigen::Matrix2cd(u * braced_tensor(r, mode, w, true) *
                            u.transpose());
}

KernelTensor retarded_kernel(const ReflectionProvider& provider, double omega,
                             const Eigen::Vector2d& delta_x, double w,
                             const QuadSpec& spec, const Constants& pc) {
    require_depth(w, "retarded_kernel");
    if (!(omega > 0.0))
        throw std::invalid_argument("retarded_kernel: omega must be positive");
    const double k0 = omega / pc.c;
    const bool iso = provider.in_plane_isotropic();

    auto full = [&](const Mode& m) {
        return braced_tensor(provider.reflection(m), m, w, true);
    };
    auto reflected = [&](const Mode& m) {
        return braced_tensor(provider.reflection(m), m, w, false);
    };

    const auto pw = band_integral(omega, k0, ModeKind::PW, 0.0, k0, delta_x,
                                  iso, w, spec, full);
    const auto ew = band_integral(omega, k0, ModeKind::EW, 0.0,
                                  evanescent_cut(w), delta_x, iso, w, spec,
                                  reflected);

    KernelTensor out;
    const double pref = 1.0 / (kTwoPi * pc.c);
    out.pw = pref * pw.value;
    out.ew_reflected = pref * ew.value;
    out.t = out.pw + out.ew_reflected;
    out.quad_error = pref * (pw.error + ew.error);
    return out;
}

double fdt_residual_modewise(const ReflectionProvider& provider,
                             const Mode& mode, const ThermalState& state,
                             double w, const FdtOptions& options,
                             const Constants& pc) {
    require_depth(w, "fdt_residual_modewise");
    if (mode.kind == ModeKind::Grazing)
        throw GrazingModeError("fdt_residual_modewise: mode on the light cone");
    const Eigen::Matrix2d u = basis_rotation(mode.kperp);
    const Eigen::Matrix2cd m =
        u * spectral_matrix_pol(provider, mode, state, w, options, pc) *
        u.transpose();
    const Eigen::Matrix2cd t = kernel_integrand(provider, mode, w);
    const double f = thermal_factor(mode.omega, state, pc);
    const Eigen::Matrix2cd rhs =
        -f * (kTwoPi / pc.c) * (t + t.adjoint()).eval();
    const double num = (m - rhs).norm();
    // Both sides can cancel to roundoff (e.g. any evanescent-dark surface),
    // where a purely mutual normalization degenerates to 0/0; the natural
    // scale of the identity before the dissipative cancellation is the
    // kernel tensor itself.
    const double den =
        std::max({m.norm(), rhs.norm(), f * (kTwoPi / pc.c) * t.norm()});
    return den == 0.0 ? 0.0 : num / den;
}

SpectralDensity spectral_density_tensor(const ReflectionProvider& provider,
                                        double omega,
                                        const Eigen::Vector2d& delta_x,
                                        double w, const ThermalState& state,
                                        const QuadSpec& spec,
                                        const FdtOptions& options,
                                        const Constants& pc) {
    require_depth(w, "spectral_density_tensor");
    if (!(omega > 0.0))
        throw std::invalid_argument(
            "spectral_density_tensor: omega must be positive");
    const double k0 = omega / pc.c;
    const bool iso = provider.in_plane_isotropic();

    auto m_pol = [&](const Mode& m) {
        return spectral_matrix_pol(provider, m, state, w, options, pc);
    };

    const auto pw = band_integral(omega, k0, ModeKind::PW, 0.0, k0, delta_x,
                                  iso, w, spec, m_pol);
    const auto ew = band_integral(omega, k0, ModeKind::EW, 0.0,
                                  evanescent_cut(w), delta_x, iso, w, spec,
                                  m_pol);

    SpectralDensity out;
    const double pref = 1.0 / (kTwoPi * kTwoPi);
    out.s = pref * (pw.value + ew.value);
    out.quad_error = pref * (pw.error + ew.error);
    return out;
}

double fdt_residual_realspace(const ReflectionProvider& provider, double omega,
                              const Eigen::Vector2d& delta_x, double w,
                              const ThermalState& state, const QuadSpec& spec,
                              const Constants& pc) {
    const SpectralDensity sd = spectral_density_tensor(
        provider, omega, delta_x, w, state, spec, FdtOptions{}, pc);
    const KernelTensor fwd =
        retarded_kernel(provider, omega, delta_x, w, spec, pc);
    const KernelTensor rev =
        retarded_kernel(provider, omega, -delta_x, w, spec, pc);
    const double f = thermal_factor(omega, state, pc);
    const Eigen::Matrix2cd rhs = -f * (fwd.t + rev.t.adjoint()).eval();
    const double num = (sd.s - rhs).norm();
    const double den = std::max(sd.s.norm(), rhs.norm());
    return den == 0.0 ? 0.0 : num / den;
}

} // namespace fluctem
