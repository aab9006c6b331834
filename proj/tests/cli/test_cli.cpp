// End-to-end exercises of the command-line front end: every invocation here
// spawns the real binary (path injected by the build) and inspects its
// exit status and output files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output; // captured stdout
};

const fs::path kWorkDir = [] {
    const fs::path dir = fs::temp_directory_path() / "fluctem_cli_test";
    fs::create_directories(dir);
    return dir;
}();

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path = kWorkDir / ("stdout_" + std::to_string(counter++));
    const std::string command = std::string(FLUCTEM_CLI_PATH) + " " + args +
                                " > " + out_path.string() + " 2> /dev/null";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path path = kWorkDir / name;
    std::ofstream(path) << body;
    return path;
}

const std::string kMetalCfg =
    "model = fresnel\n"
    "epsilon.plasma_frequency = 9.0\n"
    "epsilon.collision_rate = 0.035\n";

} // namespace

TEST_CASE("cli: no subcommand or unknown flag is an input error") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--bogus").exit_code == 2);
    CHECK(run_cli("reflect").exit_code == 2); // --config is required
}

TEST_CASE("cli: version flag") {
    const RunResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.1.0") != std::string::npos);
}

TEST_CASE("cli: reflect sweeps are deterministic byte for byte") {
    const fs::path cfg = write_config("metal.cfg", kMetalCfg);
    const std::string args =
        "reflect --config " + cfg.string() +
        " --omega-min 0.5 --omega-max 5 --omega-count 4 --omega-scale log"
        " --kperp-min 0.2 --kperp-max 2.2 --kperp-count 9 --threads 4";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("omega,kperp,re_rss") != std::string::npos);
}

TEST_CASE("cli: missing config file and grazing grid points are input errors") {
    CHECK(run_cli("reflect --config /does/not/exist.cfg").exit_code == 2);

    const fs::path cfg = write_config("metal2.cfg", kMetalCfg);
    // kperp grid hits the light cone exactly at 1.0 (in omega/c units)
    const RunResult r = run_cli("reflect --config " + cfg.string() +
                                " --omega-count 1 --kperp-min 0.5"
                                " --kperp-max 1.5 --kperp-count 3");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: reflect output round-trips through the tabulated model") {
    const fs::path cfg = write_config("metal3.cfg", kMetalCfg);
    const fs::path table = kWorkDir / "metal_table.csv";
    const std::string sweep =
        " --omega-min 1 --omega-max 2 --omega-count 2"
        " --kperp-unit abs --kperp-min 0.3 --kperp-max 3.3 --kperp-count 4";
    const RunResult direct = run_cli("reflect --config " + cfg.string() + sweep);
    REQUIRE(direct.exit_code == 0);
    REQUIRE(run_cli("reflect --config " + cfg.string() + sweep + " --output " +
                    table.string())
                .exit_code == 0);

    const fs::path tab_cfg = write_config(
        "tab.cfg", "model = tabulated\nfile = " + table.string() + "\n");
    const RunResult replay = run_cli("reflect --config " + tab_cfg.string() + sweep);
    CHECK(replay.exit_code == 0);
    // node-exact interpolation: identical numbers except the header comment
    const auto strip_comment = [](const std::string& s) {
        return s.substr(s.find('\n') + 1);
    };
    CHECK(strip_comment(replay.output) == strip_comment(direct.output));
}

TEST_CASE("cli: validate approves the metal and rejects the control model") {
    const fs::path metal = write_config("metal4.cfg", kMetalCfg);
    const RunResult ok = run_cli("validate --config " + metal.string() +
                                 " --omega-min 0.5 --omega-max 2"
                                 " --omega-count 2 --omega-scale log");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"passed\": true") != std::string::npos);
    CHECK(ok.output.find("onsager") != std::string::npos);
    CHECK(ok.output.find("ew_hermiticity") != std::string::npos);
    CHECK(ok.output.find("pw_passivity") != std::string::npos);

    const fs::path control = write_config(
        "control.cfg", "model = drude_born\nepsilon.re = 2.25\nf = 0.3\n");
    const RunResult bad = run_cli("validate --config " + control.string() +
                                  " --omega-count 1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("\"passed\": false") != std::string::npos);
}

TEST_CASE("cli: spectrum rejects non-negative heights") {
    const fs::path cfg = write_config("metal5.cfg", kMetalCfg);
    const RunResult r = run_cli("spectrum --config " + cfg.string() +
                                " --observable energy --z-min 0.5 --z-max 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: modewise identity check passes clean and fails corrupted") {
    const fs::path cfg = write_config("metal6.cfg", kMetalCfg);
    const std::string sweep =
        " --omega-min 0.5 --omega-max 2 --omega-count 2 --omega-scale log"
        " --kperp-min 0.3 --kperp-max 2.3 --kperp-count 5"
        " --temperature 0.8 --random-samples 20 --seed 7";
    CHECK(run_cli("fdt-check --config " + cfg.string() + sweep).exit_code == 0);
    CHECK(run_cli("fdt-check --config " + cfg.string() + sweep + " --corrupt")
              .exit_code == 1);
}

TEST_CASE("cli: default grids stay off the light cone") {
    const fs::path cfg = write_config("metal8.cfg", kMetalCfg);
    CHECK(run_cli("reflect --config " + cfg.string()).exit_code == 0);
    CHECK(run_cli("correlate --config " + cfg.string()).exit_code == 0);
    CHECK(run_cli("fdt-check --config " + cfg.string()).exit_code == 0);
    CHECK(run_cli("fdt-check --config " + cfg.string() + " --corrupt")
              .exit_code == 1);
}

TEST_CASE("cli: json format emits a parseable document") {
    const fs::path cfg = write_config("metal7.cfg", kMetalCfg);
    const RunResult r = run_cli("reflect --config " + cfg.string() +
                                " --omega-count 1 --kperp-count 2"
                                " --kperp-min 0.2 --kperp-max 0.7"
                                " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"tool\": \"fluctem\"") != std::string::npos);
    CHECK(r.output.find("\"columns\"") != std::string::npos);
}
