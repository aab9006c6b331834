#include "fluctem/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace fluctem {

Complex branch_sqrt(Complex z) {
    Complex w = std::sqrt(z);
    // principal sqrt has Re >= 0; fold the lower half-plane results (which
    // occur for arguments just below the negative real axis) up to Im >= 0.
    if (w.imag() < 0.0 || (w.imag() == 0.0 && w.real() < 0.0)) w = -w;
    // scrub signed zeros so exact comparisons against the bands behave
    if (w.real() == 0.0) w.real(0.0);
    if (w.imag() == 0.0) w.imag(0.0);
    return w;
}

Complex longitudinal_wavenumber(double omega, double kperp_mag, const Constants& pc) {
    if (!(omega > 0.0))
        throw std::invalid_argument("longitudinal_wavenumber: omega must be positive");
    if (kperp_mag < 0.0)
        throw std::invalid_argument("longitudinal_wavenumber: |kperp| must be nonnegative");
    const double k0 = omega / pc.c;
    const double q = (k0 - kperp_mag) * (k0 + kperp_mag); // k0^2 - kperp^2
    if (q > 0.0) return Complex(std::sqrt(q), 0.0);
    if (q < 0.0) return Complex(0.0, std::sqrt(-q));
    return Complex(0.0, 0.0);
}

Mode make_mode(double omega, const Eigen::Vector2d& kperp, const Constants& pc) {
    Mode m;
    m.omega = omega;
    m.kperp = kperp;
    m.kz = longitudinal_wavenumber(omega, kperp.norm(), pc);
    m.k0 = omega / pc.c;
    if (m.kz.real() > 0.0)
        m.kind = ModeKind::PW;
    else if (m.kz.imag() > 0.0)
        m.kind = ModeKind::EW;
    else
        m.kind = ModeKind::Grazing;
    return m;
}

PolarizationBasis polarization_basis(const Mode& mode) {
    PolarizationBasis b;
    const double kp = mode.kperp_mag();
    Eigen::Vector2d khat = kp > 0.0 ? Eigen::Vector2d(mode.kperp / kp)
                                    : Eigen::Vector2d(1.0, 0.0);
    b.khat_perp = Eigen::Vector3d(khat.x(), khat.y(), 0.0);
    b.e_perp = Eigen::Vector3d(-khat.y(), khat.x(), 0.0); // zhat x khat_perp
    b.k_in = Eigen::Vector3cd(Complex(mode.kperp.x(), 0.0),
                              Complex(mode.kperp.y(), 0.0), mode.kz);
    b.k_out = Eigen::Vector3cd(Complex(mode.kperp.x(), 0.0),
                               Complex(mode.kperp.y(), 0.0), -mode.kz);
    return b;
}

TransverseMap transverse_map(const Mode& mode, double w) {
    if (!(w < 0.0))
        throw std::domain_error("transverse_map: w must be negative (vacuum side)");
    const Complex i(0.0, 1.0);
    const Complex chi = mode.kz / mode.k0; // c kz / omega
    const Complex phase_in = std::exp(i * mode.kz * w);
    const Complex phase_out = std::exp(-i * mode.kz * w);
    TransverseMap tm;
    tm.w_in << phase_in, 0.0, 0.0, -chi * phase_in;
    tm.w_out << phase_out, 0.0, 0.0, chi * phase_out;
    return tm;
}

} // namespace fluctem
