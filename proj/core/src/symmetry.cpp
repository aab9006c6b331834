#include "fluctem/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "fluctem/errors.hpp"

namespace fluctem {

namespace {

double max_abs_entry(const Eigen::Matrix2cd& m) {
    return m.cwiseAbs().maxCoeff();
}

nlohmann::json mode_json(const Mode& m) {
    return {{"omega", m.omega},
            {"kperp", {m.kperp.x(), m.kperp.y()}},
            {"kz", {m.kz.real(), m.kz.imag()}},
            {"kind", m.kind == ModeKind::PW   ? "pw"
                     : m.kind == ModeKind::EW ? "ew"
                                              : "grazing"}};
}

} // namespace

OnsagerReport onsager_check(const ReflectionProvider& provider,
                            const std::vector<double>& omega_samples,
                            const std::vector<Eigen::Vector2d>& kperp_samples,
                            double tol, const Constants& pc) {
    if (omega_samples.empty() || kperp_samples.empty())
        throw std::invalid_argument("onsager_check: empty sample set");
    OnsagerReport rep;
    rep.tol = tol;
    rep.provider = provider.name();
    double worst = -1.0;
    for (double omega : omega_samples) {
        for (const auto& kperp : kperp_samples) {
            const Mode fwd = make_mode(omega, kperp, pc);
            const Mode rev = make_mode(omega, -kperp, pc);
            if (fwd.kind == ModeKind::Grazing)
                throw GrazingModeError("onsager_check: sample on the light cone");
            const ReflectionMatrix rf = provider.reflection(fwd);
            const ReflectionMatrix rr = provider.reflection(rev);
            const double d_ss = std::abs(rf(0, 0) - rr(0, 0));
            const double d_pp = std::abs(rf(1, 1) - rr(1, 1));
            const double d_sp = std::abs(rf(0, 1) + rr(1, 0));
            ++rep.samples;
            rep.max_violation_ss = std::max(rep.max_violation_ss, d_ss);
            rep.max_violation_pp = std::max(rep.max_violation_pp, d_pp);
            rep.max_violation_sp_ps = std::max(rep.max_violation_sp_ps, d_sp);
            const double d = std::max({d_ss, d_pp, d_sp});
            if (d > worst) {
                worst = d;
                rep.worst_mode = fwd;
            }
        }
    }
    rep.passed = std::max({rep.max_violation_ss, rep.max_violation_pp,
                           rep.max_violation_sp_ps}) <= tol;
    return rep;
}

CheckReport hermiticity_check(const ReflectionProvider& provider,
                              const std::vector<double>& omega_samples,
                              const std::vector<Eigen::Vector2d>& kperp_samples,
                              double tol, const Constants& pc) {
    CheckReport rep;
    rep.tol = tol;
    rep.provider = provider.name();
    rep.check = "hermiticity";
    double worst = -1.0;
    for (double omega : omega_samples) {
        for (const auto& kperp : kperp_samples) {
            const Mode mode = make_mode(omega, kperp, pc);
            if (mode.kind != ModeKind::EW) continue; // hermiticity is an EW statement
            const ReflectionMatrix r = provider.reflection(mode);
            const double d = max_abs_entry(r - r.adjoint());
            ++rep.samples;
            if (d > worst) {
                worst = d;
                rep.worst_mode = mode;
            }
            rep.max_violation = std::max(rep.max_violation, d);
        }
    }
    if (rep.samples == 0)
        throw std::invalid_argument(
            "hermiticity_check: no evanescent samples in the set");
    rep.passed = rep.max_violation <= tol;
    return rep;
}

CheckReport passivity_check(const ReflectionProvider& provider,
                            const std::vector<double>& omega_samples,
                            const std::vector<Eigen::Vector2d>& kperp_samples,
                            double tol, const Constants& pc) {
    CheckReport rep;
    rep.tol = tol;
    rep.provider = provider.name();
    rep.check = "passivity";
    double worst = -std::numeric_limits<double>::infinity();
    for (double omega : omega_samples) {
        for (const auto& kperp : kperp_samples) {
            const Mode mode = make_mode(omega, kperp, pc);
            if (mode.kind == ModeKind::Grazing)
                throw GrazingModeError("passivity_check: sample on the light cone");
            if (mode.kind != ModeKind::PW)
                throw std::invalid_argument(
                    "passivity_check: evanescent sample rejected (PW only)");
            const ReflectionMatrix r = provider.reflection(mode);
            Eigen::JacobiSVD<Eigen::Matrix2cd> svd(r);
            const double d = svd.singularValues()(0) - 1.0;
            ++rep.samples;
            if (d > worst) {
                worst = d;
                rep.worst_mode = mode;
            }
            rep.max_violation = std::max(rep.max_violation, d);
        }
    }
    rep.passed = rep.max_violation <= tol;
    return rep;
}

std::vector<double> default_omega_samples(double omega_ref) {
    if (!(omega_ref > 0.0))
        throw std::invalid_argument("default_omega_samples: omega_ref must be positive");
    // three decades, log-spaced, centred on omega_ref
    std::vector<double> out;
    const int n = 7;
    for (int i = 0; i < n; ++i)
        out.push_back(omega_ref *
                      std::pow(10.0, -1.5 + 3.0 * i / (n - 1)));
    return out;
}

std::vector<Eigen::Vector2d> default_kperp_samples(double omega,
                                                   const Constants& pc) {
    const double k0 = omega / pc.c;
    // PW fractions and EW multiples of the light cone; the +-k pairs needed
    // by onsager_check arrive through the opposite azimuths below.
    const double radii[] = {0.25 * k0, 0.5 * k0,  0.75 * k0, 0.95 * k0,
                            1.05 * k0, 1.5 * k0,  2.5 * k0,  5.0 * k0,
                            20.0 * k0};
    std::vector<Eigen::Vector2d> out;
    constexpr double pi = 3.141592653589793238462643383279;
    for (double r : radii)
        for (int j = 0; j < 8; ++j) {
            const double phi = pi * j / 4.0;
            out.emplace_back(r * std::cos(phi), r * std::sin(phi));
        }
    return out;
}

std::string to_json_string(const OnsagerReport& report) {
    nlohmann::json j{{"check", "onsager"},
                     {"provider", report.provider},
                     {"samples", report.samples},
                     {"max_violation_ss", report.max_violation_ss},
                     {"max_violation_pp", report.max_violation_pp},
                     {"max_violation_sp_ps", report.max_violation_sp_ps},
                     {"tol", report.tol},
                     {"passed", report.passed},
                     {"worst_mode", mode_json(report.worst_mode)}};
    return j.dump(2);
}

std::string to_json_string(const CheckReport& report) {
    nlohmann::json j{{"check", report.check},
                     {"provider", report.provider},
                     {"samples", report.samples},
                     {"max_violation", report.max_violation},
                     {"tol", report.tol},
                     {"passed", report.passed},
                     {"worst_mode", mode_json(report.worst_mode)}};
    return j.dump(2);
}

} // namespace fluctem
