#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fluctem/constants.hpp"
#include "fluctem/kinematics.hpp"
#include "fluctem/materials.hpp"

namespace fluctem {

/// Result of the reciprocity check r_ss(k) = r_ss(-k), r_pp(k) = r_pp(-k),
/// r_sp(k) = -r_ps(-k), with R(-k) evaluated in the basis of the reversed
/// mode. worst_mode is the sample with the largest of the three defects.
struct OnsagerReport {
    std::size_t samples = 0;
    double max_violation_ss = 0.0;
    double max_violation_pp = 0.0;
    double max_violation_sp_ps = 0.0;
    bool passed = false;
    Mode worst_mode;
    double tol = 0.0;
    std::string provider;
};

OnsagerReport onsager_check(const ReflectionProvider& provider,
                            const std::vector<double>& omega_samples,
                            const std::vector<Eigen::Vector2d>& kperp_samples,
                            double tol, const Constants& pc = {});

/// Shared shape of the single-defect reports below.
struct CheckReport {
    std::size_t samples = 0;
    double max_violation = 0.0;
    bool passed = false;
    Mode worst_mode;
    double tol = 0.0;
    std::string provider;
    std::string check;
};

/// sup of max|R - R^dagger| entries over the evanescent samples; a surface
/// is evanescent-dark iff this vanishes. Non-EW samples are skipped; at
/// least one EW sample is required.
CheckReport hermiticity_check(const ReflectionProvider& provider,
                              const std::vector<double>& omega_samples,
                              const std::vector<Eigen::Vector2d>& kperp_samples,
                              double tol, const Constants& pc = {});

/// sup of (largest singular value of R) - 1 over propagating samples;
/// positive values signal gain. EW samples are rejected (singular values of
/// an evanescent R are not energy ratios).
CheckReport passivity_check(const ReflectionProvider& provider,
                            const std::vector<double>& omega_samples,
                            const std::vector<Eigen::Vector2d>& kperp_samples,
                            double tol, const Constants& pc = {});

/// Default sampling: log-spaced omega over three decades around omega_ref.
std::vector<double> default_omega_samples(double omega_ref = 1.0);

/// Default kperp samples for one omega: both bands (fractions and multiples
/// of omega/c), 8 azimuths, with +-k pairs included.
std::vector<Eigen::Vector2d> default_kperp_samples(double omega,
                                                   const Constants& pc = {});

std::string to_json_string(const OnsagerReport& report);
std::string to_json_string(const CheckReport& report);

} // namespace fluctem
