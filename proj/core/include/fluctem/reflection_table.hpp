#pragma once

#include <array>
#include <string>
#include <vector>

#include "fluctem/materials.hpp"

namespace fluctem {

/// Rectangular (omega x |kperp|) grid of reflection amplitudes, as loaded
/// from the CSV interchange format:
///   omega,kperp,re_rss,im_rss,re_rsp,im_rsp,re_rps,im_rps,re_rpp,im_rpp
/// with rows sorted by (omega, kperp). Entry order below is
/// (ss, sp, ps, pp); storage is row-major in omega.
struct ReflectionTable {
    std::vector<double> omega;
    std::vector<double> kperp;
    std::array<std::vector<Complex>, 4> r;

    std::size_t index(std::size_t i_omega, std::size_t i_kperp) const {
        return i_omega * kperp.size() + i_kperp;
    }
};

ReflectionTable load_reflection_table(const std::string& path);

/// Bilinear interpolation of all four amplitudes (real and imaginary parts
/// independently); exact at grid nodes. Queries outside the grid hull throw
/// std::out_of_range.
std::array<Complex, 4> interpolate(const ReflectionTable& table, double omega,
                                   double kperp);

/// Reflection provider backed by a table.
///
/// Isotropic mode (the default) treats the data as the local-basis entries
/// of an azimuthally covariant response, for which reciprocity reduces to
/// r_ps = -r_sp at equal (omega, |kperp|): the two off-diagonal columns are
/// projected onto that antisymmetric combination, and the data's deviation
/// from it is recorded (flagged, not silent) as onsager_defect(). Strict
/// mode returns stored values verbatim.
class TabulatedReflection final : public ReflectionProvider {
public:
    explicit TabulatedReflection(ReflectionTable table, bool isotropic = true);

    ReflectionMatrix reflection(const Mode& mode) const override;
    std::string name() const override { return "tabulated"; }

    bool isotropic_mode() const { return isotropic_; }
    /// max over nodes of |r_sp + r_ps| in the stored data.
    double onsager_defect() const { return onsager_defect_; }

private:
    ReflectionTable table_;
    bool isotropic_;
    double onsager_defect_ = 0.0;
};

} // namespace fluctem
