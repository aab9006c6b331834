#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "fluctem/materials.hpp"

namespace fluctem {

/// key = value text parsed from a material description file. '#' starts a
/// comment, blank lines are skipped. Source line numbers are retained for
/// diagnostics; base_dir anchors relative paths in file-valued entries.
struct MaterialConfig {
    std::map<std::string, std::string> values;
    std::map<std::string, long> lines;
    std::filesystem::path base_dir = ".";
};

MaterialConfig parse_material_config(std::istream& in,
                                     const std::filesystem::path& base_dir = ".");

/// Instantiates the provider a config describes. Top-level key:
///   model = vacuum | mirror | fresnel | multilayer | fedorov | drude_born
///         | tabulated
/// Response functions are dotted sub-objects (here <name> is epsilon, mu,
/// layer.<i>.epsilon, substrate.mu, ...):
///   <name>.kind = constant | drude | tabulated   (inferred when omitted)
///   <name>.re, <name>.im                         constant value
///   <name>.plasma_frequency, <name>.collision_rate   Drude parameters
///   <name>.file                                  sampled-dispersion CSV
/// Model-specific keys: mu optional everywhere (defaults to 1);
/// fedorov: beta; drude_born: f; multilayer: layers = N, layer.<i>.thickness,
/// substrate.epsilon/mu; tabulated: file, isotropic = true|false.
/// Unknown or unused keys are rejected with their line number.
ProviderPtr build_provider(const MaterialConfig& config);

/// Opens, parses and builds in one step; relative file references inside
/// the config resolve against the config's own directory.
ProviderPtr load_material(const std::filesystem::path& path);

} // namespace fluctem
