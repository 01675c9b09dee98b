#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <string>

#include "helmholtz2d/harness.hpp"

namespace helmholtz2d::harness {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) {
            throw ConfigError("");
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not a finite number");
    }
}

long long parse_integer(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used, 0);  // accepts 0x prefixes
        if (used != text.size()) {
            throw ConfigError("");
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
    }
}

int parse_bounded(const std::string& key, const std::string& text, int lo, int hi) {
    const long long v = parse_integer(key, text);
    if (v < lo || v > hi) {
        throw ConfigError("config key '" + key + "' must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    return static_cast<int>(v);
}

double parse_tolerance(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    if (v < 0.0) {
        throw ConfigError("config key '" + key + "': tolerance must be nonnegative");
    }
    return v;
}

double parse_positive(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    if (!(v > 0.0)) {
        throw ConfigError("config key '" + key + "' must be positive");
    }
    return v;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "jacobi_anger",
        "expansion_cartesian_from_polar",
        "expansion_parabolic_from_polar",
        "expansion_parabolic_from_cartesian",
        "inverse_polar_from_parabolic",
        "w_orthogonality",
        "hahn_orthogonality",
        "s_orthogonality",
        "mixed_parity_sum",
        "w_agreement_hahn",
        "w_agreement_integral",
        "w_agreement_projection",
        "w_symmetry",
        "helmholtz_pde",
        "operator_eigenvalue",
        "refinement_ratio",
        "parity_exactness",
        "plane_wave_parity_relation",
        "I_closed_forms",
        "bailey_transformation",
        "sine_power_integral",
        "kummer_exponential",
        "bessel_recurrence",
        "gamma_modulus",
    };
    return names;
}

double default_tolerance(const std::string& identity) {
    static const std::map<std::string, double> defaults = {
        {"jacobi_anger", 1e-10},
        {"expansion_cartesian_from_polar", 1e-9},
        {"expansion_parabolic_from_polar", 1e-6},
        {"expansion_parabolic_from_cartesian", 1e-6},
        {"inverse_polar_from_parabolic", 1e-5},
        {"w_orthogonality", 1e-4},
        {"hahn_orthogonality", 1e-6},
        {"s_orthogonality", 1e-14},
        {"mixed_parity_sum", 0.0},
        {"w_agreement_hahn", 1e-10},
        {"w_agreement_integral", 1e-8},
        {"w_agreement_projection", 1e-7},
        {"w_symmetry", 1e-12},
        {"helmholtz_pde", 1e-4},
        {"operator_eigenvalue", 1e-4},
        {"refinement_ratio", 0.5},
        {"parity_exactness", 0.0},
        {"plane_wave_parity_relation", 1e-14},
        {"I_closed_forms", 1e-10},
        {"bailey_transformation", 1e-12},
        {"sine_power_integral", 1e-10},
        {"kummer_exponential", 1e-10},
        {"bessel_recurrence", 1e-10},
        {"gamma_modulus", 1e-12},
    };
    const auto it = defaults.find(identity);
    if (it == defaults.end()) {
        throw ConfigError("no tolerance for identity '" + identity + "'");
    }
    return it->second;
}

double SuiteConfig::tolerance_for(const std::string& identity) const {
    if (const auto it = tolerances.find(identity); it != tolerances.end()) {
        return it->second;
    }
    if (global_tolerance) {
        return *global_tolerance;
    }
    return default_tolerance(identity);
}

SuiteConfig parse_config(std::istream& in) {
    SuiteConfig config;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_number) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_number) +
                              ": empty key or value");
        }
        if (key == "seed") {
            const long long v = parse_integer(key, value);
            if (v < 0) {
                throw ConfigError("config key 'seed' must be nonnegative");
            }
            config.seed = static_cast<std::uint64_t>(v);
        } else if (key == "tolerance") {
            config.global_tolerance = parse_tolerance(key, value);
        } else if (key.rfind("tol.", 0) == 0) {
            const std::string name = key.substr(4);
            const auto& names = identity_names();
            if (std::find(names.begin(), names.end(), name) == names.end()) {
                throw ConfigError("unknown config key '" + key + "'");
            }
            config.tolerances[name] = parse_tolerance(key, value);
        } else if (key == "m_max") {
            config.m_max = parse_bounded(key, value, 1, 150);
        } else if (key == "b_multiplier") {
            config.b_multiplier = parse_positive(key, value);
        } else if (key == "hahn_x_max") {
            config.hahn_x_max = parse_positive(key, value);
        } else if (key == "trapezoid_nodes") {
            config.trapezoid_nodes = parse_bounded(key, value, 8, 1 << 20);
        } else if (key == "jacobi_nodes") {
            config.jacobi_nodes = parse_bounded(key, value, 8, 4096);
        } else if (key == "random_points") {
            config.random_points = parse_bounded(key, value, 1, 100000);
        } else if (key == "jacobi_anger_draws") {
            config.jacobi_anger_draws = parse_bounded(key, value, 1, 100000);
        } else if (key == "inverse_points") {
            config.inverse_points = parse_bounded(key, value, 1, 10000);
        } else if (key == "timing") {
            if (value == "on" || value == "true" || value == "1") {
                config.timing = true;
            } else if (value == "off" || value == "false" || value == "0") {
                config.timing = false;
            } else {
                throw ConfigError("config key 'timing' must be on or off");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return config;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

}  // namespace helmholtz2d::harness
