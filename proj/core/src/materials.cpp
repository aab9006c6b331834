#include "fluctem/materials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fluctem/errors.hpp"

namespace fluctem {

namespace {

void require_off_cone(const Mode& mode, const char* who) {
    if (mode.kind == ModeKind::Grazing)
        throw GrazingModeError(std::string(who) +
                               ": reflection undefined at kz = 0");
}

// Longitudinal wavenumber inside a medium, first-quadrant branch.
Complex medium_kz(Complex eps, Complex mu, const Mode& mode) {
    const double kp = mode.kperp_mag();
    return branch_sqrt(eps * mu * (mode.k0 * mode.k0) - kp * kp);
}

struct InterfaceCoeffs {
    Complex s, p;
};

// Fresnel coefficients of the interface between media (eps1, mu1) above and
// (eps2, mu2) below, for a wave incident from medium 1.
InterfaceCoeffs interface_coeffs(Complex eps1, Complex mu1, Complex kz1,
                                 Complex eps2, Complex mu2, Complex kz2) {
    InterfaceCoeffs c;
    c.s = (mu2 * kz1 - mu1 * kz2) / (mu2 * kz1 + mu1 * kz2);
    c.p = (eps2 * kz1 - eps1 * kz2) / (eps2 * kz1 + eps1 * kz2);
    return c;
}

} // namespace

ReflectionMatrix fresnel_halfspace(Complex epsilon, Complex mu, const Mode& mode) {
    require_off_cone(mode, "fresnel_halfspace");
    const Complex kzm = medium_kz(epsilon, mu, mode);
    ReflectionMatrix r = ReflectionMatrix::Zero();
    r(0, 0) = (mu * mode.kz - kzm) / (mu * mode.kz + kzm);
    r(1, 1) = (epsilon * mode.kz - kzm) / (epsilon * mode.kz + kzm);
    return r;
}

ReflectionMatrix multilayer_reflection(const std::vector<EvaluatedLayer>& layers,
                                       Complex eps_substrate, Complex mu_substrate,
                                       const Mode& mode) {
    require_off_cone(mode, "multilayer_reflection");
    const std::size_t n = layers.size();

    // media 0..n+1: vacuum, layers, substrate
    std::vector<Complex> eps(n + 2), mu(n + 2), kz(n + 2);
    eps[0] = mu[0] = 1.0;
    kz[0] = mode.kz;
    for (std::size_t j = 0; j < n; ++j) {
        if (layers[j].thickness < 0.0)
            throw std::invalid_argument("multilayer: negative thickness in layer " +
                                        std::to_string(j + 1));
        eps[j + 1] = layers[j].epsilon;
        mu[j + 1] = layers[j].mu;
        kz[j + 1] = medium_kz(eps[j + 1], mu[j + 1], mode);
    }
    eps[n + 1] = eps_substrate;
    mu[n + 1] = mu_substrate;
    kz[n + 1] = medium_kz(eps_substrate, mu_substrate, mode);

    // bottom-up reflection-coefficient composition:
    //   r_j = (rho_j + r_{j+1} e^{2 i kz_{j+1} d_{j+1}})
    //         / (1 + rho_j r_{j+1} e^{2 i kz_{j+1} d_{j+1}})
    const Complex i(0.0, 1.0);
    auto bad = [](Complex v) { return !std::isfinite(v.real()) || !std::isfinite(v.imag()); };
    InterfaceCoeffs r = interface_coeffs(eps[n], mu[n], kz[n],
                                         eps[n + 1], mu[n + 1], kz[n + 1]);
    if (bad(r.s) || bad(r.p))
        throw std::runtime_error("multilayer: non-finite coefficient at the substrate interface");
    for (std::size_t j = n; j-- > 0;) {
        const Complex phase = std::exp(2.0 * i * kz[j + 1] * layers[j].thickness);
        const InterfaceCoeffs rho = interface_coeffs(eps[j], mu[j], kz[j],
                                                     eps[j + 1], mu[j + 1], kz[j + 1]);
        r.s = (rho.s + r.s * phase) / (1.0 + rho.s * r.s * phase);
        r.p = (rho.p + r.p * phase) / (1.0 + rho.p * r.p * phase);
        if (bad(r.s) || bad(r.p))
            throw std::runtime_error("multilayer: non-finite coefficient in layer " +
                                     std::to_string(j + 1));
    }

    ReflectionMatrix rm = ReflectionMatrix::Zero();
    rm(0, 0) = r.s;
    rm(1, 1) = r.p;
    return rm;
}

namespace {

// Shared tangential-matching solve for chiral half-spaces. The transmitted
// field is a superposition of two circular (Beltrami) eigenmodes
// sigma = +-1 with direction cosines chat_sigma = q_z,sigma / (n_sigma k0)
// and per-mode magnetic response H = -i sigma h_sigma E. Continuity of the
// tangential E and H components against the incident/reflected (s, p) waves
// gives a 2x2 linear system; its solution, expressed as reflection
// amplitudes, is:
//   A_sigma = c0 + h_sigma chat_sigma          (c0 = kz / k0)
//   B_sigma = h_sigma + chat_sigma / c0
//   D = -(A_+ B_- + A_- B_+)
//   r_ss = -1 - 2 c0 (B_+ + B_-) / D
//   r_sp = 2 i (A_- - A_+) / D
//   r_ps = 2 i (chat_+ B_- - chat_- B_+) / D
//   r_pp = 1 + 2 (chat_+ A_- + chat_- A_+) / (c0 D)
// At zero chirality both eigenmodes coincide and this reduces exactly to the
// isotropic half-space coefficients above.
ReflectionMatrix chiral_match(const Mode& mode, Complex n_plus, Complex n_minus,
                              Complex h_plus, Complex h_minus) {
    const Complex i(0.0, 1.0);
    const double k0 = mode.k0;
    const Complex c0 = mode.kz / k0;
    const double kp = mode.kperp_mag();

    const Complex qz_plus = branch_sqrt(n_plus * n_plus * k0 * k0 - kp * kp);
    const Complex qz_minus = branch_sqrt(n_minus * n_minus * k0 * k0 - kp * kp);
    const Complex chat_plus = qz_plus / (n_plus * k0);
    const Complex chat_minus = qz_minus / (n_minus * k0);

    const Complex A_plus = c0 + h_plus * chat_plus;
    const Complex A_minus = c0 + h_minus * chat_minus;
    const Complex B_plus = h_plus + chat_plus / c0;
    const Complex B_minus = h_minus + chat_minus / c0;
    const Complex D = -(A_plus * B_minus + A_minus * B_plus);

    ReflectionMatrix r;
    r(0, 0) = -1.0 - 2.0 * c0 * (B_plus + B_minus) / D;
    r(0, 1) = 2.0 * i * (A_minus - A_plus) / D;
    r(1, 0) = 2.0 * i * (chat_plus * B_minus - chat_minus * B_plus) / D;
    r(1, 1) = 1.0 + 2.0 * (chat_plus * A_minus + chat_minus * A_plus) / (c0 * D);
    return r;
}

} // namespace

ReflectionMatrix fedorov_reflection(Complex epsilon, Complex mu, double beta,
                                    const Mode& mode) {
    require_off_cone(mode, "fedorov_reflection");
    const Complex n_iso = std::sqrt(epsilon * mu);
    const Complex chi = beta * mode.k0 * n_iso;
    if (std::abs(chi) >= 1.0)
        throw std::domain_error(
            "fedorov_reflection: |beta| omega/c sqrt(eps mu) must be < 1");
    const Complex n_plus = n_iso / (1.0 - chi);
    const Complex n_minus = n_iso / (1.0 + chi);
    const Complex h = std::sqrt(epsilon / mu); // same impedance for both modes
    return chiral_match(mode, n_plus, n_minus, h, h);
}

ReflectionMatrix drude_born_reflection(Complex epsilon, double f, const Mode& mode) {
    require_off_cone(mode, "drude_born_reflection");
    const double ft = f * mode.k0;
    const Complex s = std::sqrt(ft * ft + 4.0 * epsilon);
    const Complex n_plus = 0.5 * (-ft + s);
    const Complex n_minus = 0.5 * (ft + s);
    if (n_plus.real() <= 0.0 || n_minus.real() <= 0.0)
        throw std::domain_error(
            "drude_born_reflection: eigenmodes not forward-propagating");
    // per-mode impedance: H = -i sigma n_sigma E
    return chiral_match(mode, n_plus, n_minus, n_plus, n_minus);
}

ReflectionMatrix VacuumProvider::reflection(const Mode& mode) const {
    require_off_cone(mode, "vacuum");
    return ReflectionMatrix::Zero();
}

ReflectionMatrix MirrorProvider::reflection(const Mode& mode) const {
    require_off_cone(mode, "mirror");
    ReflectionMatrix r = ReflectionMatrix::Zero();
    r(0, 0) = -1.0;
    r(1, 1) = 1.0;
    return r;
}

ReflectionMatrix FresnelHalfSpace::reflection(const Mode& mode) const {
    return fresnel_halfspace(evaluate(epsilon_, mode.omega),
                             evaluate(mu_, mode.omega), mode);
}

ReflectionMatrix Multilayer::reflection(const Mode& mode) const {
    std::vector<EvaluatedLayer> evaluated;
    evaluated.reserve(layers_.size());
    for (const auto& layer : layers_)
        evaluated.push_back({evaluate(layer.epsilon, mode.omega),
                             evaluate(layer.mu, mode.omega), layer.thickness});
    return multilayer_reflection(evaluated, evaluate(eps_substrate_, mode.omega),
                                 evaluate(mu_substrate_, mode.omega), mode);
}

ReflectionMatrix FedorovChiral::reflection(const Mode& mode) const {
    return fedorov_reflection(evaluate(epsilon_, mode.omega),
                              evaluate(mu_, mode.omega), beta_, mode);
}

ReflectionMatrix DrudeBornChiral::reflection(const Mode& mode) const {
    return drude_born_reflection(evaluate(epsilon_, mode.omega), f_, mode);
}

} // namespace fluctem
