#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fluctem/dispersion.hpp"
#include "fluctem/kinematics.hpp"

namespace fluctem {

/// 2x2 reflection matrix in the (s, p) amplitude basis: entry (lambda, mu)
/// maps an incident amplitude of polarization mu to a reflected amplitude of
/// polarization lambda, with both sets of amplitudes expressed in the local
/// (e_perp, khat_perp) mode basis. Row/column order is (s, p).
using ReflectionMatrix = Eigen::Matrix2cd;

/// Anything that can hand out a reflection matrix per mode. Providers are
/// immutable after construction and safe to share across threads. All
/// built-in providers are in-plane isotropic: their local-basis entries
/// depend on |kperp| only.
class ReflectionProvider {
public:
    virtual ~ReflectionProvider() = default;
    virtual ReflectionMatrix reflection(const Mode& mode) const = 0;
    virtual std::string name() const = 0;
    virtual bool in_plane_isotropic() const { return true; }
};

using ProviderPtr = std::shared_ptr<const ReflectionProvider>;

// ---- closed-form reflection kernels -------------------------------------
// All of these reject Grazing modes and use the first-quadrant branch for
// medium wavenumbers, so evanescent transmitted waves decay into the body.

/// Isotropic half-space:
///   r_ss = (mu kz - kzm) / (mu kz + kzm),
///   r_pp = (eps kz - kzm) / (eps kz + kzm),   kzm = sqrt(eps mu k0^2 - kperp^2).
/// Perfect-mirror limit eps -> infinity gives diag(-1, +1).
ReflectionMatrix fresnel_halfspace(Complex epsilon, Complex mu, const Mode& mode);

struct EvaluatedLayer {
    Complex epsilon{1.0, 0.0};
    Complex mu{1.0, 0.0};
    double thickness = 0.0;
};

/// Planar stack on a half-space substrate, built by reflection-coefficient
/// composition from the bottom up (scattering-style recursion; the layer
/// phase factors e^{2 i kz d} never exceed unit modulus, so thick absorbing
/// or evanescent layers cannot overflow). Layers are ordered from the vacuum
/// side down. Throws if a layer produces non-finite coefficients, naming it.
ReflectionMatrix multilayer_reflection(const std::vector<EvaluatedLayer>& layers,
                                       Complex eps_substrate, Complex mu_substrate,
                                       const Mode& mode);

/// Chiral half-space with D = eps (E + beta curl E), B = mu (H + beta curl H).
/// The two circular (Beltrami) eigenmodes have refractive indices
///   n_{+-} = sqrt(eps mu) / (1 -+ beta (omega/c) sqrt(eps mu)),
/// and tangential (E, H) matching at z = 0 yields the full 2x2 matrix with
/// r_sp = -r_ps (reciprocal). Requires |beta| (omega/c) |sqrt(eps mu)| < 1 so
/// both eigenmodes are forward.
ReflectionMatrix fedorov_reflection(Complex epsilon, Complex mu, double beta,
                                    const Mode& mode);

/// Chiral half-space with D = eps E - f curl E, B = H. Circular eigenmodes
///   n_{+-} = (-+ f omega/c + sqrt(f^2 omega^2/c^2 + 4 eps)) / 2
/// carry mode-dependent impedances, which breaks r_sp = -r_ps: this model
/// violates reciprocity and is shipped as a negative control.
ReflectionMatrix drude_born_reflection(Complex epsilon, double f, const Mode& mode);

// ---- providers -----------------------------------------------------------

class VacuumProvider final : public ReflectionProvider {
public:
    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "vacuum"; }
};

/// Perfect electric mirror, R = diag(-1, +1).
class MirrorProvider final : public ReflectionProvider {
public:
    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "mirror"; }
};

class FresnelHalfSpace final : public ReflectionProvider {
public:
    FresnelHalfSpace(Dispersion epsilon, Dispersion mu = ConstantDispersion{})
        : epsilon_(std::move(epsilon)), mu_(std::move(mu)) {}
    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "fresnel"; }

private:
    Dispersion epsilon_;
    Dispersion mu_;
};

struct LayerSpec {
    Dispersion epsilon;
    Dispersion mu = ConstantDispersion{};
    double thickness = 0.0;
};

class Multilayer final : public ReflectionProvider {
public:
    Multilayer(std::vector<LayerSpec> layers, Dispersion eps_substrate,
               Dispersion mu_substrate = ConstantDispersion{})
        : layers_(std::move(layers)),
          eps_substrate_(std::move(eps_substrate)),
          mu_substrate_(std::move(mu_substrate)) {}
    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "multilayer"; }

private:
    std::vector<LayerSpec> layers_;
    Dispersion eps_substrate_;
    Dispersion mu_substrate_;
};

class FedorovChiral final : public ReflectionProvider {
public:
    FedorovChiral(Dispersion epsilon, Dispersion mu, double beta)
        : epsilon_(std::move(epsilon)), mu_(std::move(mu)), beta_(beta) {}
    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "fedorov"; }

private:
    Dispersion epsilon_;
    Dispersion mu_;
    double beta_;
};

class DrudeBornChiral final : public ReflectionProvider {
public:
    DrudeBornChiral(Dispersion epsilon, double f)
        : epsilon_(std::move(epsilon)), f_(f) {}
    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "drude_born"; }

private:
    Dispersion epsilon_;
    double f_;
};

} // namespace fluctem
