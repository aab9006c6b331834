// fluctem CLI: computes reflection matrices, surface-mode correlators,
// emission/energy-density spectra, symmetry validation reports and
// dissipation-identity checks for a configured surface model.
//
// Exit codes: 0 success, 1 validation failure, 2 input error,
// 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fluctem/constants.hpp"
#include "fluctem/correlators.hpp"
#include "fluctem/errors.hpp"
#include "fluctem/fdt.hpp"
#include "fluctem/kinematics.hpp"
#include "fluctem/material_config.hpp"
#include "fluctem/materials.hpp"
#include "fluctem/observables.hpp"
#include "fluctem/quadrature.hpp"
#include "fluctem/reflection_table.hpp"
#include "fluctem/sweep.hpp"
#include "fluctem/symmetry.hpp"
#include "fluctem/table_writer.hpp"

namespace {

using namespace fluctem;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kInputError = 2;
constexpr int kNumericalFailure = 3;

struct GridFlags {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
    std::string scale = "lin";
};

GridSpec to_spec(const GridFlags& flags) {
    GridSpec spec;
    spec.min = flags.min;
    spec.max = flags.max;
    spec.count = flags.count;
    spec.scale = flags.scale == "log" ? GridScale::Log : GridScale::Linear;
    return spec;
}

struct Options {
    std::string config_path;
    std::string units = "natural";
    std::string format = "csv";
    std::string output;
    double temperature = 0.0;
    double tol = 1e-10;
    bool tol_set = false;
    double quad_rel_tol = 1e-9;
    int quad_max_panels = 4000;
    unsigned threads = 0; // 0 = hardware concurrency

    GridFlags omega{1.0, 1.0, 1, "lin"};
    // step 0.3 keeps the default sweep off the light cone at kperp/k0 = 1
    GridFlags kperp{0.2, 2.6, 9, "lin"};
    std::string kperp_unit = "k0";
    GridFlags z{-0.1, -0.1, 1, "lin"};
    std::string observable = "emissivity";

    double w = -0.1;
    std::vector<double> dx;
    bool corrupt = false;
    bool realspace = false;
    std::uint64_t seed = 1;
    int random_samples = 0;
};

Constants constants_for(const Options& opts) {
    return opts.units == "si" ? si_units : natural_units;
}

QuadSpec quad_for(const Options& opts) {
    QuadSpec spec;
    spec.rel_tol = opts.quad_rel_tol;
    spec.max_panels = opts.quad_max_panels;
    return spec;
}

unsigned thread_count(const Options& opts) {
    if (opts.threads > 0) return opts.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// kperp grid in absolute wavenumber units for one frequency.
std::vector<double> kperp_grid(const Options& opts, double omega,
                               const Constants& pc) {
    std::vector<double> grid = build_grid(to_spec(opts.kperp));
    if (opts.kperp_unit == "k0")
        for (double& k : grid) k *= omega / pc.c;
    return grid;
}

Mode checked_mode(double omega, double kperp, const Constants& pc) {
    const Mode mode = make_mode(omega, Eigen::Vector2d(kperp, 0.0), pc);
    if (mode.kind == ModeKind::Grazing)
        throw std::invalid_argument(
            "mode (omega = " + format_double(omega) + ", kperp = " +
            format_double(kperp) +
            ") sits exactly on the light cone; nudge the kperp grid");
    return mode;
}

void emit(const Options& opts, const Table& table) {
    std::ostringstream buffer;
    if (opts.format == "json")
        write_json(buffer, table, opts.units);
    else
        write_csv(buffer, table, opts.units);
    if (opts.output.empty()) {
        std::cout << buffer.str();
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + opts.output +
                                    "'");
    out << buffer.str();
}

void emit_text(const Options& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + opts.output +
                                    "'");
    out << text;
}

// ---- reflect --------------------------------------------------------------

int run_reflect(const Options& opts) {
    const Constants pc = constants_for(opts);
    const ProviderPtr provider = load_material(opts.config_path);
    const std::vector<double> omegas = build_grid(to_spec(opts.omega));

    struct Point {
        double omega, kperp;
    };
    std::vector<Point> points;
    for (double omega : omegas)
        for (double kperp : kperp_grid(opts, omega, pc))
            points.push_back({omega, kperp});
    for (const Point& p : points) checked_mode(p.omega, p.kperp, pc);

    Table table;
    table.columns = {"omega",  "kperp",  "re_rss", "im_rss", "re_rsp",
                     "im_rsp", "re_rps", "im_rps", "re_rpp", "im_rpp"};
    table.rows = parallel_map<std::vector<Cell>>(
        points.size(), thread_count(opts), [&](std::size_t i) {
            const Point& p = points[i];
            const Mode mode = checked_mode(p.omega, p.kperp, pc);
            const ReflectionMatrix r = provider->reflection(mode);
            return std::vector<Cell>{
                p.omega,          p.kperp,          r(0, 0).real(),
                r(0, 0).imag(),   r(0, 1).real(),   r(0, 1).imag(),
                r(1, 0).real(),   r(1, 0).imag(),   r(1, 1).real(),
                r(1, 1).imag()};
        });
    emit(opts, table);
    return kOk;
}

// ---- validate --------------------------------------------------------------

// Splits the default mode samples for one omega into propagating and
// evanescent subsets (the passivity check accepts only the former).
void split_samples(double omega, const Constants& pc,
                   std::vector<Eigen::Vector2d>& pw,
                   std::vector<Eigen::Vector2d>& all) {
    const double k0 = omega / pc.c;
    for (const auto& k : default_kperp_samples(omega, pc)) {
        all.push_back(k);
        if (k.norm() < k0) pw.push_back(k);
    }
}

int run_validate(const Options& opts) {
    const Constants pc = constants_for(opts);
    const ProviderPtr provider = load_material(opts.config_path);
    const std::vector<double> omegas = build_grid(to_spec(opts.omega));

    OnsagerReport onsager;
    CheckReport hermiticity;
    CheckReport passivity;
    bool first = true;
    for (double omega : omegas) {
        std::vector<Eigen::Vector2d> pw, all;
        split_samples(omega, pc, pw, all);
        const std::vector<double> one{omega};
        const OnsagerReport o = onsager_check(*provider, one, all, opts.tol, pc);
        const CheckReport h = hermiticity_check(*provider, one, all, opts.tol, pc);
        const CheckReport p = passivity_check(*provider, one, pw, opts.tol, pc);
        if (first) {
            onsager = o;
            hermiticity = h;
            passivity = p;
            first = false;
            continue;
        }
        auto fold_max = [](double& into, double v) { into = std::max(into, v); };
        onsager.samples += o.samples;
        fold_max(onsager.max_violation_ss, o.max_violation_ss);
        fold_max(onsager.max_violation_pp, o.max_violation_pp);
        fold_max(onsager.max_violation_sp_ps, o.max_violation_sp_ps);
        onsager.passed = onsager.passed && o.passed;
        hermiticity.samples += h.samples;
        if (h.max_violation > hermiticity.max_violation)
            hermiticity.worst_mode = h.worst_mode;
        fold_max(hermiticity.max_violation, h.max_violation);
        hermiticity.passed = hermiticity.passed && h.passed;
        passivity.samples += p.samples;
        if (p.max_violation > passivity.max_violation)
            passivity.worst_mode = p.worst_mode;
        fold_max(passivity.max_violation, p.max_violation);
        passivity.passed = passivity.passed && p.passed;
        const double o_worst = std::max({o.max_violation_ss, o.max_violation_pp,
                                         o.max_violation_sp_ps});
        const double worst = std::max({onsager.max_violation_ss,
                                       onsager.max_violation_pp,
                                       onsager.max_violation_sp_ps});
        if (o_worst == worst) onsager.worst_mode = o.worst_mode;
    }

    nlohmann::json doc;
    doc["provider"] = provider->name();
    doc["tol"] = opts.tol;
    // admissibility is the reciprocity check; the others are reported as
    // physics diagnostics (a lossy surface is legitimately non-hermitean on
    // the evanescent band)
    doc["passed"] = onsager.passed;
    doc["onsager"] = nlohmann::json::parse(to_json_string(onsager));
    doc["ew_hermiticity"] = nlohmann::json::parse(to_json_string(hermiticity));
    doc["pw_passivity"] = nlohmann::json::parse(to_json_string(passivity));
    if (const auto* tab =
            dynamic_cast<const TabulatedReflection*>(provider.get()))
        doc["data_onsager_defect"] = tab->onsager_defect();
    emit_text(opts, doc.dump(2) + "\n");
    return onsager.passed ? kOk : kValidationFailure;
}

// ---- correlate --------------------------------------------------------------

int run_correlate(const Options& opts) {
    const Constants pc = constants_for(opts);
    const ProviderPtr provider = load_material(opts.config_path);
    const ThermalState state{opts.temperature};
    const std::vector<double> omegas = build_grid(to_spec(opts.omega));

    struct Point {
        double omega, kperp;
    };
    std::vector<Point> points;
    for (double omega : omegas)
        for (double kperp : kperp_grid(opts, omega, pc))
            points.push_back({omega, kperp});
    for (const Point& p : points) checked_mode(p.omega, p.kperp, pc);

    Table table;
    table.columns = {"omega",     "kperp",     "band",      "c_inf",
                     "re_css_ss", "im_css_ss", "re_css_sp", "im_css_sp",
                     "re_css_ps", "im_css_ps", "re_css_pp", "im_css_pp"};
    table.rows = parallel_map<std::vector<Cell>>(
        points.size(), thread_count(opts), [&](std::size_t i) {
            const Point& p = points[i];
            const Mode mode = checked_mode(p.omega, p.kperp, pc);
            const ReflectionMatrix r = provider->reflection(mode);
            const double c_inf =
                c_infinity(mode, state, pc).c(0, 0).real();
            const Eigen::Matrix2cd css =
                mode.kind == ModeKind::PW
                    ? c_surface_pw(r, mode, state, pc).c
                    : c_surface_ew(r, mode, state, pc).c;
            return std::vector<Cell>{p.omega,
                                     p.kperp,
                                     std::string(mode.kind == ModeKind::PW
                                                     ? "pw"
                                                     : "ew"),
                                     c_inf,
                                     css(0, 0).real(),
                                     css(0, 0).imag(),
                                     css(0, 1).real(),
                                     css(0, 1).imag(),
                                     css(1, 0).real(),
                                     css(1, 0).imag(),
                                     css(1, 1).real(),
                                     css(1, 1).imag()};
        });
    emit(opts, table);
    return kOk;
}

// ---- spectrum --------------------------------------------------------------

std::vector<double> height_grid(const Options& opts) {
    if (!(opts.z.min < 0.0) || !(opts.z.max < 0.0))
        throw std::invalid_argument("heights must be strictly negative");
    GridFlags mag;
    mag.min = std::min(std::abs(opts.z.min), std::abs(opts.z.max));
    mag.max = std::max(std::abs(opts.z.min), std::abs(opts.z.max));
    mag.count = opts.z.count;
    mag.scale = opts.z.scale;
    std::vector<double> grid = build_grid(to_spec(mag));
    for (double& m : grid) m = -m;
    if (std::abs(opts.z.min) > std::abs(opts.z.max))
        std::reverse(grid.begin(), grid.end());
    return grid;
}

int run_spectrum(const Options& opts) {
    const Constants pc = constants_for(opts);
    const ProviderPtr provider = load_material(opts.config_path);
    const QuadSpec quad = quad_for(opts);
    const std::vector<double> omegas = build_grid(to_spec(opts.omega));

    Table table;
    if (opts.observable == "emissivity") {
        table.columns = {"omega", "emissivity", "quad_error"};
        table.rows = parallel_map<std::vector<Cell>>(
            omegas.size(), thread_count(opts), [&](std::size_t i) {
                const EmissivityResult r =
                    hemispherical_emissivity(*provider, omegas[i], quad, pc);
                return std::vector<Cell>{omegas[i], r.value, r.quad_error};
            });
    } else {
        const ThermalState state{opts.temperature};
        const std::vector<double> heights = height_grid(opts);
        struct Point {
            double omega, z;
        };
        std::vector<Point> points;
        for (double omega : omegas)
            for (double z : heights) points.push_back({omega, z});
        table.columns = {"omega",      "z",       "total",
                         "pw_part",    "ew_part", "zero_point",
                         "thermal",    "quad_error"};
        table.rows = parallel_map<std::vector<Cell>>(
            points.size(), thread_count(opts), [&](std::size_t i) {
                const Point& p = points[i];
                const EnergyDensityResult r = energy_density_spectrum(
                    *provider, p.omega, p.z, state, quad, pc);
                return std::vector<Cell>{p.omega,      p.z,       r.total,
                                         r.pw,         r.ew,      r.zero_point,
                                         r.thermal,    r.quad_error};
            });
    }
    emit(opts, table);
    return kOk;
}

// ---- fdt-check --------------------------------------------------------------

int run_fdt_check(const Options& opts) {
    const Constants pc = constants_for(opts);
    const ProviderPtr provider = load_material(opts.config_path);
    const ThermalState state{opts.temperature};
    const QuadSpec quad = quad_for(opts);
    if (!(opts.w < 0.0))
        throw std::invalid_argument("--w must be strictly negative");

    if (opts.realspace) {
        const double tol = opts.tol_set ? opts.tol : 1e-6;
        const std::vector<double> omegas = build_grid(to_spec(opts.omega));
        const std::vector<double> offsets =
            opts.dx.empty() ? std::vector<double>{0.0} : opts.dx;
        struct Point {
            double omega, dx;
        };
        std::vector<Point> points;
        for (double omega : omegas)
            for (double dx : offsets) points.push_back({omega, dx});
        Table table;
        table.columns = {"omega", "dx", "w", "residual"};
        table.rows = parallel_map<std::vector<Cell>>(
            points.size(), thread_count(opts), [&](std::size_t i) {
                const Point& p = points[i];
                const double residual = fdt_residual_realspace(
                    *provider, p.omega, Eigen::Vector2d(p.dx, 0.0), opts.w,
                    state, quad, pc);
                return std::vector<Cell>{p.omega, p.dx, opts.w, residual};
            });
        double worst = 0.0;
        for (const auto& row : table.rows)
            worst = std::max(worst, std::get<double>(row[3]));
        emit(opts, table);
        std::cerr << "fdt-check (real space): max residual " << worst
                  << (worst < tol ? " < " : " >= ") << tol << "\n";
        return worst < tol ? kOk : kValidationFailure;
    }

    const double tol = opts.tol_set ? opts.tol : 1e-10;
    const std::vector<double> omegas = build_grid(to_spec(opts.omega));
    struct Point {
        double omega, kperp;
    };
    std::vector<Point> points;
    for (double omega : omegas)
        for (double kperp : kperp_grid(opts, omega, pc))
            points.push_back({omega, kperp});
    if (opts.random_samples > 0) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> uk(0.05, 2.5);
        const double lo = omegas.front();
        const double hi = omegas.back();
        std::uniform_real_distribution<double> uw(std::log(lo),
                                                  std::log(std::max(hi, lo)));
        for (int s = 0; s < opts.random_samples; ++s) {
            const double omega = std::exp(uw(rng));
            double frac = uk(rng);
            if (std::abs(frac - 1.0) < 2e-3) frac = 1.01; // step off the cone
            points.push_back({omega, frac * omega / pc.c});
        }
    }
    for (const Point& p : points) checked_mode(p.omega, p.kperp, pc);

    const FdtOptions fdt_options{opts.corrupt};
    Table table;
    table.columns = {"omega", "kperp", "band", "w", "temperature", "residual"};
    table.rows = parallel_map<std::vector<Cell>>(
        points.size(), thread_count(opts), [&](std::size_t i) {
            const Point& p = points[i];
            const Mode mode = checked_mode(p.omega, p.kperp, pc);
            const double residual = fdt_residual_modewise(
                *provider, mode, state, opts.w, fdt_options, pc);
            return std::vector<Cell>{p.omega,
                                     p.kperp,
                                     std::string(mode.kind == ModeKind::PW
                                                     ? "pw"
                                                     : "ew"),
                                     opts.w,
                                     opts.temperature,
                                     residual};
        });
    double worst = 0.0;
    for (const auto& row : table.rows)
        worst = std::max(worst, std::get<double>(row[5]));
    emit(opts, table);
    std::cerr << "fdt-check (modewise): max residual " << worst
              << (worst < tol ? " < " : " >= ") << tol << "\n";
    return worst < tol ? kOk : kValidationFailure;
}

void add_common_flags(CLI::App* cmd, Options& opts, bool with_kperp) {
    cmd->add_option("--config", opts.config_path,
                    "material config file (key = value schema)")
        ->required();
    cmd->add_option("--units", opts.units, "unit system for inputs and outputs")
        ->check(CLI::IsMember({"natural", "si"}))
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "table output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output,
                    "output path (default: standard output)");
    cmd->add_option("--threads", opts.threads,
                    "worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    cmd->add_option("--omega-min", opts.omega.min, "sweep start frequency")
        ->capture_default_str();
    cmd->add_option("--omega-max", opts.omega.max, "sweep end frequency")
        ->capture_default_str();
    cmd->add_option("--omega-count", opts.omega.count, "frequency grid size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--omega-scale", opts.omega.scale, "frequency grid spacing")
        ->check(CLI::IsMember({"lin", "log"}))
        ->capture_default_str();
    if (with_kperp) {
        cmd->add_option("--kperp-min", opts.kperp.min,
                        "sweep start transverse wavenumber")
            ->capture_default_str();
        cmd->add_option("--kperp-max", opts.kperp.max,
                        "sweep end transverse wavenumber")
            ->capture_default_str();
        cmd->add_option("--kperp-count", opts.kperp.count,
                        "transverse wavenumber grid size")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--kperp-scale", opts.kperp.scale,
                        "transverse grid spacing")
            ->check(CLI::IsMember({"lin", "log"}))
            ->capture_default_str();
        cmd->add_option("--kperp-unit", opts.kperp_unit,
                        "kperp values as multiples of omega/c, or absolute")
            ->check(CLI::IsMember({"k0", "abs"}))
            ->capture_default_str();
    }
}

} // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"fluctuating electromagnetic field correlators outside a "
                 "reflecting surface"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    CLI::App* reflect = app.add_subcommand(
        "reflect", "tabulate the 2x2 reflection matrix over a mode sweep");
    add_common_flags(reflect, opts, true);

    CLI::App* validate = app.add_subcommand(
        "validate",
        "reciprocity / hermiticity / passivity report for a material model");
    add_common_flags(validate, opts, false);
    validate->add_option("--tol", opts.tol, "admissibility tolerance")
        ->capture_default_str();

    CLI::App* correlate = app.add_subcommand(
        "correlate", "surface-mode correlator entries over a mode sweep");
    add_common_flags(correlate, opts, true);
    correlate
        ->add_option("--temperature", opts.temperature, "temperature (0 = zero-point)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "hemispherical emissivity or energy-density spectra");
    add_common_flags(spectrum, opts, false);
    spectrum->add_option("--observable", opts.observable, "what to compute")
        ->check(CLI::IsMember({"emissivity", "energy"}))
        ->capture_default_str();
    spectrum
        ->add_option("--temperature", opts.temperature, "temperature (0 = zero-point)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    spectrum->add_option("--z-min", opts.z.min, "first height (negative)")
        ->capture_default_str();
    spectrum->add_option("--z-max", opts.z.max, "last height (negative)")
        ->capture_default_str();
    spectrum->add_option("--z-count", opts.z.count, "height grid size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    spectrum->add_option("--z-scale", opts.z.scale, "height grid spacing")
        ->check(CLI::IsMember({"lin", "log"}))
        ->capture_default_str();
    spectrum->add_option("--quad-rel-tol", opts.quad_rel_tol,
                         "quadrature relative tolerance")
        ->capture_default_str();
    spectrum->add_option("--quad-max-panels", opts.quad_max_panels,
                         "quadrature panel budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* fdt = app.add_subcommand(
        "fdt-check", "dissipation-identity residuals (modewise or real space)");
    add_common_flags(fdt, opts, true);
    fdt->add_option("--temperature", opts.temperature, "temperature (0 = zero-point)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    fdt->add_option("--w", opts.w, "dipole plane height (negative)")
        ->capture_default_str();
    auto* tol_opt =
        fdt->add_option("--tol", opts.tol,
                        "pass threshold (default 1e-10 modewise, 1e-6 real space)");
    fdt->add_flag("--realspace", opts.realspace,
                  "compare k-integrated spectral density against the "
                  "retarded kernel");
    fdt->add_option("--dx", opts.dx,
                    "lateral offsets for --realspace (repeatable)");
    fdt->add_flag("--corrupt", opts.corrupt,
                  "negative control: break the evanescent correlator");
    fdt->add_option("--random-samples", opts.random_samples,
                    "extra random modes appended to the sweep")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    fdt->add_option("--seed", opts.seed, "random mode generator seed")
        ->capture_default_str();
    fdt->add_option("--quad-rel-tol", opts.quad_rel_tol,
                    "quadrature relative tolerance")
        ->capture_default_str();
    fdt->add_option("--quad-max-panels", opts.quad_max_panels,
                    "quadrature panel budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    opts.tol_set = tol_opt->count() > 0;

    try {
        if (reflect->parsed()) return run_reflect(opts);
        if (validate->parsed()) return run_validate(opts);
        if (correlate->parsed()) return run_correlate(opts);
        if (spectrum->parsed()) return run_spectrum(opts);
        if (fdt->parsed()) return run_fdt_check(opts);
        std::cerr << "fluctem: no command selected\n";
        return kInputError;
    } catch (const QuadratureError& e) {
        std::cerr << "fluctem: quadrature failure: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const ParseError& e) {
        std::cerr << "fluctem: " << e.what() << "\n";
        return kInputError;
    } catch (const GrazingModeError& e) {
        std::cerr << "fluctem: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fluctem: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "fluctem: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "fluctem: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "fluctem: " << e.what() << "\n";
        return kNumericalFailure;
    }
}
