#include "fluctem/material_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include "fluctem/errors.hpp"
#include "fluctem/reflection_table.hpp"

namespace fluctem {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& text, const std::string& key, long line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == 0 || pos != text.size() || !std::isfinite(v))
        throw ParseError("expected a real number for '" + key + "', got '" +
                             text + "'",
                         line);
    return v;
}

bool parse_bool(const std::string& text, const std::string& key, long line) {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    throw ParseError("expected a boolean for '" + key + "', got '" + text + "'",
                     line);
}

// Consumption-tracking view of a MaterialConfig: every key must be used by
// exactly the model being built, so typos surface as hard errors.
class ConfigReader {
public:
    explicit ConfigReader(const MaterialConfig& cfg) : cfg_(cfg) {}

    bool has(const std::string& key) const {
        return cfg_.values.count(key) != 0;
    }

    long line_of(const std::string& key) const {
        const auto it = cfg_.lines.find(key);
        return it == cfg_.lines.end() ? 0 : it->second;
    }

    std::optional<std::string> take(const std::string& key) {
        const auto it = cfg_.values.find(key);
        if (it == cfg_.values.end()) return std::nullopt;
        used_.insert(key);
        return it->second;
    }

    std::string require(const std::string& key) {
        if (auto v = take(key)) return *v;
        throw ParseError("missing required key '" + key + "'");
    }

    double require_real(const std::string& key) {
        return parse_real(require(key), key, line_of(key));
    }

    double take_real(const std::string& key, double fallback) {
        if (auto v = take(key)) return parse_real(*v, key, line_of(key));
        return fallback;
    }

    long require_count(const std::string& key) {
        const std::string text = require(key);
        const double v = parse_real(text, key, line_of(key));
        const long n = static_cast<long>(v);
        if (v != static_cast<double>(n) || n < 0)
            throw ParseError("expected a non-negative integer for '" + key +
                                 "', got '" + text + "'",
                             line_of(key));
        return n;
    }

    bool take_bool(const std::string& key, bool fallback) {
        if (auto v = take(key)) return parse_bool(*v, key, line_of(key));
        return fallback;
    }

    std::filesystem::path resolve(const std::string& value) const {
        const std::filesystem::path p(value);
        return p.is_absolute() ? p : cfg_.base_dir / p;
    }

    void finish() const {
        const std::string* worst = nullptr;
        long worst_line = 0;
        for (const auto& [key, value] : cfg_.values) {
            if (used_.count(key)) continue;
            const long line = line_of(key);
            if (worst == nullptr || line < worst_line) {
                worst = &key;
                worst_line = line;
            }
        }
        if (worst != nullptr)
            throw ParseError("unknown key '" + *worst + "' for this model",
                             worst_line);
    }

private:
    const MaterialConfig& cfg_;
    std::set<std::string> used_;
};

Dispersion read_dispersion(ConfigReader& r, const std::string& prefix,
                           bool required) {
    std::string kind;
    long kind_line = 0;
    if (auto k = r.take(prefix + ".kind")) {
        kind = *k;
        kind_line = r.line_of(prefix + ".kind");
    } else if (r.has(prefix + ".plasma_frequency")) {
        kind = "drude";
    } else if (r.has(prefix + ".file")) {
        kind = "tabulated";
    } else if (r.has(prefix + ".re") || r.has(prefix + ".im")) {
        kind = "constant";
    } else if (required) {
        throw ParseError("missing response function '" + prefix + "' (set " +
                         prefix + ".re or " + prefix + ".kind)");
    } else {
        return ConstantDispersion{}; // identity response
    }

    if (kind == "constant")
        return ConstantDispersion{Complex(r.take_real(prefix + ".re", 1.0),
                                          r.take_real(prefix + ".im", 0.0))};
    if (kind == "drude")
        return DrudeDispersion{r.require_real(prefix + ".plasma_frequency"),
                               r.take_real(prefix + ".collision_rate", 0.0)};
    if (kind == "tabulated")
        return load_dispersion_csv(
            r.resolve(r.require(prefix + ".file")).string());
    throw ParseError("unknown dispersion kind '" + kind + "' for '" + prefix +
                         "'",
                     kind_line);
}

} // namespace

MaterialConfig parse_material_config(std::istream& in,
                                     const std::filesystem::path& base_dir) {
    MaterialConfig cfg;
    cfg.base_dir = base_dir;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value', got '" + text + "'",
                             lineno);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", lineno);
        if (value.empty())
            throw ParseError("empty value for key '" + key + "'", lineno);
        if (!cfg.values.emplace(key, value).second)
            throw ParseError("duplicate key '" + key + "'", lineno);
        cfg.lines[key] = lineno;
    }
    return cfg;
}

ProviderPtr build_provider(const MaterialConfig& config) {
    ConfigReader r(config);
    const std::string model = r.require("model");
    ProviderPtr out;
    if (model == "vacuum") {
        out = std::make_shared<VacuumProvider>();
    } else if (model == "mirror") {
        out = std::make_shared<MirrorProvider>();
    } else if (model == "fresnel") {
        Dispersion eps = read_dispersion(r, "epsilon", true);
        Dispersion mu = read_dispersion(r, "mu", false);
        out = std::make_shared<FresnelHalfSpace>(std::move(eps), std::move(mu));
    } else if (model == "multilayer") {
        const long n = r.require_count("layers");
        std::vector<LayerSpec> layers;
        layers.reserve(static_cast<std::size_t>(n));
        for (long i = 1; i <= n; ++i) {
            const std::string p = "layer." + std::to_string(i);
            LayerSpec layer;
            layer.epsilon = read_dispersion(r, p + ".epsilon", true);
            layer.mu = read_dispersion(r, p + ".mu", false);
            layer.thickness = r.require_real(p + ".thickness");
            if (layer.thickness < 0.0)
                throw ParseError("negative thickness for '" + p + "'",
                                 r.line_of(p + ".thickness"));
            layers.push_back(std::move(layer));
        }
        Dispersion eps_sub = read_dispersion(r, "substrate.epsilon", true);
        Dispersion mu_sub = read_dispersion(r, "substrate.mu", false);
        out = std::make_shared<Multilayer>(std::move(layers),
                                           std::move(eps_sub),
                                           std::move(mu_sub));
    } else if (model == "fedorov") {
        Dispersion eps = read_dispersion(r, "epsilon", true);
        Dispersion mu = read_dispersion(r, "mu", false);
        const double beta = r.require_real("beta");
        out = std::make_shared<FedorovChiral>(std::move(eps), std::move(mu),
                                              beta);
    } else if (model == "drude_born") {
        Dispersion eps = read_dispersion(r, "epsilon", true);
        const double f = r.require_real("f");
        out = std::make_shared<DrudeBornChiral>(std::move(eps), f);
    } else if (model == "tabulated") {
        const std::filesystem::path path = r.resolve(r.require("file"));
        const bool isotropic = r.take_bool("isotropic", true);
        out = std::make_shared<TabulatedReflection>(
            load_reflection_table(path.string()), isotropic);
    } else {
        throw ParseError("unknown model '" + model + "'", r.line_of("model"));
    }
    r.finish();
    return out;
}

ProviderPtr load_material(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open material config '" + path.string() +
                         "'");
    return build_provider(
        parse_material_config(in, path.parent_path().empty()
                                      ? std::filesystem::path(".")
                                      : path.parent_path()));
}

} // namespace fluctem
