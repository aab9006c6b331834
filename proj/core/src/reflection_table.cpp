#include "fluctem/reflection_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fluctem/errors.hpp"

namespace fluctem {

namespace {

constexpr const char* kHeader =
    "omega,kperp,re_rss,im_rss,re_rsp,im_rsp,re_rps,im_rps,re_rpp,im_rpp";

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

struct RawRow {
    double omega, kperp;
    std::array<Complex, 4> r;
};

} // namespace

ReflectionTable load_reflection_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("reflection table: cannot open '" + path + "'");

    std::string line;
    long lineno = 0;
    bool header_seen = false;
    std::vector<RawRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line != kHeader)
                throw ParseError(std::string("reflection table: expected header '") +
                                     kHeader + "', got '" + line + "'",
                                 lineno);
            continue;
        }
        std::istringstream ss(line);
        double v[10];
        for (int k = 0; k < 10; ++k) {
            if (k > 0) {
                char comma;
                if (!(ss >> comma) || comma != ',')
                    throw ParseError("reflection table: malformed row", lineno);
            }
            if (!(ss >> v[k]) || !std::isfinite(v[k]))
                throw ParseError("reflection table: malformed row", lineno);
        }
        std::string trailing;
        if (ss >> trailing)
            throw ParseError("reflection table: trailing junk in row", lineno);
        RawRow row;
        row.omega = v[0];
        row.kperp = v[1];
        for (int k = 0; k < 4; ++k) row.r[k] = Complex(v[2 + 2 * k], v[3 + 2 * k]);
        if (!rows.empty()) {
            const auto& prev = rows.back();
            if (row.omega < prev.omega ||
                (row.omega == prev.omega && row.kperp <= prev.kperp))
                throw ParseError(
                    "reflection table: rows must be sorted by (omega, kperp)",
                    lineno);
        }
        rows.push_back(row);
    }
    if (!header_seen)
        throw ParseError("reflection table: '" + path + "' is empty");
    if (rows.empty())
        throw ParseError("reflection table: '" + path + "' has no data rows");

    ReflectionTable t;
    for (const auto& row : rows)
        if (t.omega.empty() || row.omega != t.omega.back())
            t.omega.push_back(row.omega);
    const std::size_t nk = rows.size() / t.omega.size();
    for (std::size_t j = 0; j < nk && j < rows.size(); ++j)
        t.kperp.push_back(rows[j].kperp);
    if (t.omega.size() * t.kperp.size() != rows.size())
        throw ParseError(
            "reflection table: grid is not rectangular (row count " +
            std::to_string(rows.size()) + " != n_omega * n_kperp)");
    for (std::size_t iw = 0; iw < t.omega.size(); ++iw)
        for (std::size_t jk = 0; jk < nk; ++jk) {
            const auto& row = rows[iw * nk + jk];
            if (row.omega != t.omega[iw] || row.kperp != t.kperp[jk])
                throw ParseError(
                    "reflection table: grid is not rectangular (kperp grid "
                    "differs between omega blocks)");
        }
    for (auto& channel : t.r) channel.resize(rows.size());
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (int k = 0; k < 4; ++k) t.r[static_cast<std::size_t>(k)][n] = rows[n].r[static_cast<std::size_t>(k)];
    return t;
}

namespace {

// cell index and weight along one axis; exact at nodes, degenerate axes allowed
std::pair<std::size_t, double> locate(const std::vector<double>& grid, double x,
                                      const char* axis) {
    if (x < grid.front() || x > grid.back())
        throw std::out_of_range(std::string("reflection table: ") + axis + " = " +
                                std::to_string(x) + " outside sampled range [" +
                                std::to_string(grid.front()) + ", " +
                                std::to_string(grid.back()) + "]");
    if (grid.size() == 1) return {0, 0.0};
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    std::size_t i = static_cast<std::size_t>(it - grid.begin());
    if (i > 0) --i;
    if (i >= grid.size() - 1) i = grid.size() - 2;
    const double u = (x - grid[i]) / (grid[i + 1] - grid[i]);
    return {i, u};
}

} // namespace

std::array<Complex, 4> interpolate(const ReflectionTable& table, double omega,
                                   double kperp) {
    const auto [iw, u] = locate(table.omega, omega, "omega");
    const auto [jk, v] = locate(table.kperp, kperp, "kperp");
    const std::size_t nk = table.kperp.size();
    const std::size_t i00 = iw * nk + jk;
    const std::size_t i01 = i00 + (nk > 1 && v > 0.0 ? 1 : 0);
    const std::size_t i10 = i00 + (table.omega.size() > 1 && u > 0.0 ? nk : 0);
    const std::size_t i11 = i10 + (i01 - i00);
    std::array<Complex, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& c = table.r[k];
        out[k] = (1.0 - u) * ((1.0 - v) * c[i00] + v * c[i01]) +
                 u * ((1.0 - v) * c[i10] + v * c[i11]);
    }
    return out;
}

TabulatedReflection::TabulatedReflection(ReflectionTable table, bool isotropic)
    : table_(std::move(table)), isotropic_(isotropic) {
    for (std::size_t n = 0; n < table_.r[1].size(); ++n)
        onsager_defect_ =
            std::max(onsager_defect_, std::abs(table_.r[1][n] + table_.r[2][n]));
}

ReflectionMatrix TabulatedReflection::reflection(const Mode& mode) const {
    if (mode.kind == ModeKind::Grazing)
        throw GrazingModeError("tabulated: reflection undefined at kz = 0");
    const auto v = interpolate(table_, mode.omega, mode.kperp_mag());
    ReflectionMatrix r;
    if (isotropic_) {
        const Complex rsp = 0.5 * (v[1] - v[2]); // antisymmetric projection
        r << v[0], rsp, -rsp, v[3];
    } else {
        r << v[0], v[1], v[2], v[3];
    }
    return r;
}

} // namespace fluctem
