#include <doctest.h>

#include <memory>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "fluctem/errors.hpp"
#include "fluctem/materials.hpp"
#include "fluctem/symmetry.hpp"

using namespace fluctem;

namespace {

// one omega with the full two-band sample fan; omega = 1 keeps the cone away
// from every default radius
const std::vector<double> kOmegas{0.7, 1.3};

std::vector<Eigen::Vector2d> all_samples() {
    std::vector<Eigen::Vector2d> out;
    for (const double omega : kOmegas)
        for (const auto& k : default_kperp_samples(omega))
            out.push_back(k);
    return out;
}

std::vector<Eigen::Vector2d> pw_samples(double omega) {
    std::vector<Eigen::Vector2d> out;
    for (const auto& k : default_kperp_samples(omega))
        if (k.norm() < omega) out.push_back(k);
    return out;
}

std::vector<Eigen::Vector2d> ew_samples(double omega) {
    std::vector<Eigen::Vector2d> out;
    for (const auto& k : default_kperp_samples(omega))
        if (k.norm() > omega) out.push_back(k);
    return out;
}

} // namespace

TEST_SUITE("symmetry") {

TEST_CASE("default sample fans cover both bands and paired directions") {
    const auto omegas = default_omega_samples(2.0);
    CHECK(omegas.size() >= 5);
    CHECK(omegas.front() < 2.0);
    CHECK(omegas.back() > 2.0);

    const auto fan = default_kperp_samples(1.0);
    CHECK(fan.size() >= 32);
    bool has_pw = false, has_ew = false;
    for (const auto& k : fan) {
        if (k.norm() < 1.0) has_pw = true;
        if (k.norm() > 1.0) has_ew = true;
        // the fan must contain the reversed partner of every sample
        bool has_pair = false;
        for (const auto& k2 : fan)
            if ((k + k2).norm() < 1e-12) has_pair = true;
        CHECK(has_pair);
    }
    CHECK(has_pw);
    CHECK(has_ew);
}

TEST_CASE("reciprocity holds for the closed-form reciprocal models") {
    const auto samples = all_samples();
    const FresnelHalfSpace metal{DrudeDispersion{9.0, 0.035}};
    const Multilayer stack{{{ConstantDispersion{{3.0, 0.4}},
                             ConstantDispersion{}, 0.4}},
                           ConstantDispersion{{6.0, 1.0}}};
    const FedorovChiral chiral{ConstantDispersion{{2.25, 0.3}},
                               ConstantDispersion{}, 0.15};
    for (const ReflectionProvider* p :
         {static_cast<const ReflectionProvider*>(&metal),
          static_cast<const ReflectionProvider*>(&stack),
          static_cast<const ReflectionProvider*>(&chiral)}) {
        const OnsagerReport rep = onsager_check(*p, kOmegas, samples, 1e-10);
        CAPTURE(p->name());
        CHECK(rep.passed);
        CHECK(rep.samples > 0);
        CHECK(rep.max_violation_ss < 1e-10);
        CHECK(rep.max_violation_pp < 1e-10);
        CHECK(rep.max_violation_sp_ps < 1e-10);
    }
}

TEST_CASE("reciprocity flags the gyrotropic control model") {
    const DrudeBornChiral control{ConstantDispersion{{2.25, 0.0}}, 0.3};
    const OnsagerReport rep =
        onsager_check(control, kOmegas, all_samples(), 1e-10);
    CHECK_FALSE(rep.passed);
    CHECK(rep.max_violation_sp_ps > 1e-3);
    // diagonal entries still reciprocal for an isotropic model
    CHECK(rep.max_violation_ss < 1e-12);
    CHECK(rep.max_violation_pp < 1e-12);
}

TEST_CASE("evanescent hermiticity separates transparent from lossy") {
    const std::vector<double> one{1.0};
    const auto ew = ew_samples(1.0);

    // optically thinner than vacuum: every evanescent mode is also evanescent
    // inside the medium, so the whole band is dark
    const FresnelHalfSpace thin{ConstantDispersion{{0.64, 0.0}}};
    const CheckReport dark = hermiticity_check(thin, one, ew, 1e-10);
    CHECK(dark.passed);
    CHECK(dark.check == "hermiticity");

    // ordinary glass is bright between the vacuum and medium light cones:
    // bulk thermal photons totally internally reflect and tunnel outside
    const FresnelHalfSpace glass{ConstantDispersion{{2.25, 0.0}}};
    const CheckReport tir = hermiticity_check(glass, one, ew, 1e-10);
    CHECK_FALSE(tir.passed);
    CHECK(tir.worst_mode.kperp.norm() < 1.5);
    // beyond the medium cone the same glass goes dark again
    const std::vector<Eigen::Vector2d> beyond{{1.6, 0.0}, {0.0, 2.5}, {5.0, 0.0}};
    CHECK(hermiticity_check(glass, one, beyond, 1e-10).passed);

    const FresnelHalfSpace metal{DrudeDispersion{9.0, 0.035}};
    const CheckReport bright = hermiticity_check(metal, one, ew, 1e-10);
    CHECK_FALSE(bright.passed);
    CHECK(bright.max_violation > 1e-3);
    CHECK(bright.worst_mode.kind == ModeKind::EW);

    // transparent chiral medium: reciprocal yet evanescent-bright
    const FedorovChiral chiral{ConstantDispersion{{2.25, 0.0}},
                               ConstantDispersion{}, 0.1};
    CHECK_FALSE(hermiticity_check(chiral, one, ew, 1e-10).passed);

    // propagating samples only: nothing to check, which must be an error
    CHECK_THROWS_AS(hermiticity_check(glass, one, pw_samples(1.0), 1e-10),
                    std::invalid_argument);
}

TEST_CASE("passivity accepts lossy media and flags gain") {
    const std::vector<double> one{1.0};
    const auto pw = pw_samples(1.0);

    const FresnelHalfSpace metal{DrudeDispersion{9.0, 0.035}};
    CHECK(passivity_check(metal, one, pw, 1e-10).passed);

    const FresnelHalfSpace gain{ConstantDispersion{{2.25, -0.8}}};
    const CheckReport rep = passivity_check(gain, one, pw, 1e-10);
    CHECK_FALSE(rep.passed);
    CHECK(rep.max_violation > 1e-3);
    CHECK(rep.check == "passivity");

    // evanescent samples are not energy ratios: must be rejected, not skipped
    CHECK_THROWS_AS(passivity_check(metal, one, ew_samples(1.0), 1e-10),
                    std::invalid_argument);
    // and a sample exactly on the cone is a kinematics error
    CHECK_THROWS_AS(
        passivity_check(metal, one, {Eigen::Vector2d(1.0, 0.0)}, 1e-10),
        GrazingModeError);
}

TEST_CASE("reports serialize to parseable JSON") {
    const FresnelHalfSpace metal{DrudeDispersion{9.0, 0.035}};
    const OnsagerReport rep =
        onsager_check(metal, {1.0}, default_kperp_samples(1.0), 1e-10);
    const nlohmann::json doc = nlohmann::json::parse(to_json_string(rep));
    CHECK(doc["check"] == "onsager");
    CHECK(doc["passed"] == true);
    CHECK(doc["provider"] == "fresnel");
    CHECK(doc["samples"].get<std::size_t>() == rep.samples);
    CHECK(doc.contains("worst_mode"));

    const CheckReport herm =
        hermiticity_check(metal, {1.0}, default_kperp_samples(1.0), 1e-10);
    const nlohmann::json hdoc = nlohmann::json::parse(to_json_string(herm));
    CHECK(hdoc["check"] == "hermiticity");
    CHECK(hdoc["max_violation"].get<double>() == herm.max_violation);
}

} // TEST_SUITE
