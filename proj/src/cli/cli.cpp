#include "helmholtz2d/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "helmholtz2d/harness.hpp"

namespace helmholtz2d::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double to_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
        throw ConfigError(what + ": '" + s + "' is not a finite number");
    }
    return v;
}

int to_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || v < -1000000 || v > 1000000) {
        throw ConfigError(what + ": '" + s + "' is not an integer");
    }
    return static_cast<int>(v);
}

// x, or lo:hi:n
std::vector<double> real_values(const std::string& s, const std::string& key) {
    const auto parts = split(s, ':');
    if (parts.size() == 1) {
        return {to_double(parts[0], key)};
    }
    if (parts.size() != 3) {
        throw ConfigError(key + ": expected a value or lo:hi:n");
    }
    const double lo = to_double(parts[0], key);
    const double hi = to_double(parts[1], key);
    const int n = to_int(parts[2], key);
    if (n < 1 || (n > 1 && !(hi > lo))) {
        throw ConfigError(key + ": need n >= 1 and hi > lo");
    }
    std::vector<double> out;
    for (int j = 0; j < n; ++j) {
        out.push_back(n == 1 ? lo : grid_node(lo, hi, n, j));
    }
    return out;
}

// m, or lo:hi inclusive
std::vector<int> int_values(const std::string& s, const std::string& key) {
    const auto parts = split(s, ':');
    if (parts.size() == 1) {
        return {to_int(parts[0], key)};
    }
    if (parts.size() != 2) {
        throw ConfigError(key + ": expected an integer or lo:hi");
    }
    const int lo = to_int(parts[0], key);
    const int hi = to_int(parts[1], key);
    if (hi < lo) {
        throw ConfigError(key + ": empty range");
    }
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
}

std::vector<Parity> parity_values(const std::string& s) {
    if (s == "both") {
        return {Parity::even, Parity::odd};
    }
    return {parse_parity(s)};
}

class Fields {
public:
    Fields(const std::map<std::string, std::string>& fields, std::string context)
        : fields_(fields), context_(std::move(context)) {}

    const std::string& get(const std::string& key) {
        used_.insert(key);
        const auto it = fields_.find(key);
        if (it == fields_.end()) {
            throw ConfigError(context_ + ": missing index field '" + key + "'");
        }
        return it->second;
    }
    std::string get_or(const std::string& key, const std::string& fallback) {
        used_.insert(key);
        const auto it = fields_.find(key);
        return it == fields_.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return fields_.count(key) != 0; }
    double real(const std::string& key) { return to_double(get(key), key); }
    void finish() const {
        for (const auto& [key, value] : fields_) {
            if (!used_.count(key)) {
                throw ConfigError(context_ + ": unknown index field '" + key + "'");
            }
        }
    }

private:
    const std::map<std::string, std::string>& fields_;
    std::string context_;
    std::set<std::string> used_;
};

}  // namespace

double grid_node(double lo, double hi, int n, int j) {
    if (j == n - 1) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
}

GridSpec parse_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 7) {
        throw ConfigError("grid: expected chart:min1:max1:n1:min2:max2:n2");
    }
    GridSpec g;
    if (parts[0] == "xy") {
        g.chart = Chart::xy;
    } else if (parts[0] == "polar") {
        g.chart = Chart::polar;
    } else if (parts[0] == "parabolic") {
        g.chart = Chart::parabolic;
    } else {
        throw ConfigError("grid: unknown chart '" + parts[0] + "' (xy, polar, parabolic)");
    }
    g.min1 = to_double(parts[1], "grid");
    g.max1 = to_double(parts[2], "grid");
    g.n1 = to_int(parts[3], "grid");
    g.min2 = to_double(parts[4], "grid");
    g.max2 = to_double(parts[5], "grid");
    g.n2 = to_int(parts[6], "grid");
    if (!(g.max1 > g.min1) || !(g.max2 > g.min2)) {
        throw ConfigError("grid: max must exceed min on both axes");
    }
    if (g.n1 < 2 || g.n2 < 2) {
        throw ConfigError("grid: need at least 2 samples per axis");
    }
    if (g.chart == Chart::polar && !(g.min1 > 0.0)) {
        throw ConfigError("grid: polar radius must be positive");
    }
    if (g.chart == Chart::parabolic && g.min1 < 0.0) {
        throw ConfigError("grid: parabolic xi must be nonnegative");
    }
    return g;
}

std::map<std::string, std::string> parse_index(std::string_view text) {
    std::map<std::string, std::string> fields;
    if (text.empty()) {
        return fields;
    }
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw ConfigError("index: expected key=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        if (!fields.emplace(key, item.substr(eq + 1)).second) {
            throw ConfigError("index: duplicate key '" + key + "'");
        }
    }
    return fields;
}

bases::BasisIndex make_basis(std::string_view basis,
                             const std::map<std::string, std::string>& fields) {
    Fields f(fields, std::string(basis));
    bases::BasisIndex idx;
    if (basis == "plane") {
        idx = bases::PlaneWaveIndex{f.real("k1"), f.real("k2")};
    } else if (basis == "cartesian") {
        idx = bases::AngleIndex{f.real("k"), f.real("alpha"), parse_parity(f.get_or("parity", "even"))};
    } else if (basis == "double") {
        idx = bases::DoubleParityIndex{parse_parity(f.get("parity_x")), parse_parity(f.get("parity_y")),
                                       f.real("k1"), f.real("k2")};
    } else if (basis == "polar") {
        idx = bases::PolarIndex{f.real("k"), to_int(f.get("m"), "m")};
    } else if (basis == "parabolic") {
        idx = bases::ParabolicIndex{f.real("k"), f.real("beta"),
                                    parse_parity(f.get_or("parity", "even"))};
    } else if (basis == "miller") {
        idx = bases::MillerIndex{f.real("k"), f.real("beta"), to_int(f.get_or("sign", "1"), "sign")};
    } else {
        throw ConfigError("unknown basis '" + std::string(basis) +
                          "' (plane, cartesian, double, polar, parabolic, miller)");
    }
    f.finish();
    std::visit(
        [](const auto& i) {
            if constexpr (requires { bases::validate(i); }) {
                bases::validate(i);
            }
        },
        idx);
    return idx;
}

Complex evaluate_on_chart(const bases::BasisIndex& basis, Chart chart, double c1, double c2) {
    if (chart == Chart::polar) {
        if (const auto* p = std::get_if<bases::PolarIndex>(&basis)) {
            return bases::psi_polar(*p, {c1, c2});
        }
        return bases::evaluate(basis, geometry::polar_to_xy({c1, c2}));
    }
    if (chart == Chart::parabolic) {
        if (const auto* p = std::get_if<bases::ParabolicIndex>(&basis)) {
            return bases::psi_parabolic(*p, {c1, c2});
        }
        if (const auto* p = std::get_if<bases::MillerIndex>(&basis)) {
            return bases::psi_miller(*p, {c1, c2});
        }
        return bases::evaluate(basis, geometry::parabolic_to_xy({c1, c2}));
    }
    return bases::evaluate(basis, {c1, c2});
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
    return buf;
}

std::string eval_csv(const bases::BasisIndex& basis, const GridSpec& grid) {
    std::string csv = "coord1,coord2,re,im\n";
    for (int i = 0; i < grid.n1; ++i) {
        const double c1 = grid_node(grid.min1, grid.max1, grid.n1, i);
        for (int j = 0; j < grid.n2; ++j) {
            const double c2 = grid_node(grid.min2, grid.max2, grid.n2, j);
            const Complex v = evaluate_on_chart(basis, grid.chart, c1, c2);
            csv += format_double(c1) + ',' + format_double(c2) + ',' + format_double(v.real()) +
                   ',' + format_double(v.imag()) + '\n';
        }
    }
    return csv;
}

coeffs::CoefficientTable make_table(std::string_view kind,
                                    const std::map<std::string, std::string>& fields,
                                    std::string_view method) {
    Fields f(fields, "coeffs " + std::string(kind));
    coeffs::CoefficientTable table;
    const bool closed_only = method == "closed_form" || method == "all";
    if (kind == "S" || kind == "Z") {
        if (!closed_only) {
            throw ConfigError("coeffs " + std::string(kind) + ": only the closed_form method exists");
        }
    }
    if (kind == "S") {
        table = coeffs::s_table(parity_values(f.get_or("parity", "both")), int_values(f.get("m"), "m"),
                                real_values(f.get("alpha"), "alpha"));
    } else if (kind == "W") {
        const double k = f.real("k");
        std::vector<double> betas;
        if (f.has("beta_over_k")) {
            if (f.has("beta")) {
                throw ConfigError("coeffs W: give beta or beta_over_k, not both");
            }
            for (double r : real_values(f.get("beta_over_k"), "beta_over_k")) betas.push_back(r * k);
        } else {
            betas = real_values(f.get("beta"), "beta");
        }
        std::vector<coeffs::Method> methods;
        if (method == "all") {
            methods = {coeffs::Method::three_f_two, coeffs::Method::hahn, coeffs::Method::integral};
        } else {
            methods = {coeffs::parse_method(method)};
        }
        table = coeffs::w_table(parity_values(f.get_or("parity", "both")), k, betas,
                                int_values(f.get("m"), "m"), methods);
    } else if (kind == "Z") {
        table = coeffs::z_table(f.real("k"), real_values(f.get("beta"), "beta"),
                                real_values(f.get("alpha"), "alpha"));
    } else {
        throw ConfigError("unknown coefficient kind '" + std::string(kind) + "' (S, W, Z)");
    }
    f.finish();
    return table;
}

std::string table_csv(const coeffs::CoefficientTable& table) {
    std::string csv;
    switch (table.kind) {
        case coeffs::TableKind::S: csv = "parity,m,alpha,method,re,im\n"; break;
        case coeffs::TableKind::W: csv = "parity,k,beta,m,method,re,im\n"; break;
        case coeffs::TableKind::Z: csv = "k,beta,alpha,method,re,im\n"; break;
    }
    for (const auto& row : table.rows) {
        const std::string method(coeffs::to_string(row.method));
        const std::string value = format_double(row.value.real()) + ',' + format_double(row.value.imag());
        switch (table.kind) {
            case coeffs::TableKind::S:
                csv += std::string(to_string(row.parity)) + ',' + std::to_string(row.m) + ',' +
                       format_double(row.alpha) + ',' + method + ',' + value + '\n';
                break;
            case coeffs::TableKind::W:
                csv += std::string(to_string(row.parity)) + ',' + format_double(row.k) + ',' +
                       format_double(row.beta) + ',' + std::to_string(row.m) + ',' + method + ',' +
                       value + '\n';
                break;
            case coeffs::TableKind::Z:
                csv += format_double(row.k) + ',' + format_double(row.beta) + ',' +
                       format_double(row.alpha) + ',' + method + ',' + value + '\n';
                break;
        }
    }
    return csv;
}

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file.flush()) {
        throw ConfigError("write to '" + path + "' failed");
    }
}

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"2D Helmholtz bases, interbasis coefficients and identity checks", "helmholtz2d"};
    app.require_subcommand(1);

    std::string out_path;
    std::string config_path;
    std::string grid_text;
    std::string index_text;
    std::string basis_name;
    std::string kind;
    std::string method = "closed_form";
    std::string suite = "all";

    auto* eval = app.add_subcommand("eval", "evaluate a basis function on a grid (CSV)");
    eval->add_option("--basis", basis_name, "plane, cartesian, double, polar, parabolic, miller")
        ->required();
    eval->add_option("--index", index_text, "index fields, key=value,...")->required();
    eval->add_option("--grid", grid_text, "chart:min1:max1:n1:min2:max2:n2")->required();
    eval->add_option("--out", out_path, "output file (default stdout)");

    auto* coef = app.add_subcommand("coeffs", "coefficient table (CSV)");
    coef->add_option("--kind", kind, "S, W or Z")->required();
    coef->add_option("--index", index_text,
                     "fields; ranges as lo:hi (m) or lo:hi:n (reals), parity even|odd|both")
        ->required();
    coef->add_option("--method", method, "closed_form, hahn, three_f_two, integral or all");
    coef->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite (JSON lines)");
    verify->add_option("--suite", suite,
                       "all, jacobi-anger, expansions, orthogonality, operators, integrals");
    verify->add_option("--config", config_path, "key = value parameter file");
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    }

    if (*eval) {
        try {
            const auto basis = make_basis(basis_name, parse_index(index_text));
            const auto grid = parse_grid(grid_text);
            write_output(out_path, eval_csv(basis, grid), out);
            return 0;
        } catch (const std::exception& e) {
            err << "error: " << one_line(e.what()) << '\n';
            return 1;
        }
    }
    if (*coef) {
        try {
            const auto table = make_table(kind, parse_index(index_text), method);
            write_output(out_path, table_csv(table), out);
            return 0;
        } catch (const std::exception& e) {
            err << "error: " << one_line(e.what()) << '\n';
            return 1;
        }
    }

    harness::SuiteConfig config;
    try {
        if (!config_path.empty()) {
            config = harness::load_config(config_path);
        }
        const auto& names = harness::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            throw ConfigError("unknown suite '" + suite + "'");
        }
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    }
    try {
        const auto reports = harness::run_suite(suite, config);
        std::string lines;
        int passed = 0;
        for (const auto& r : reports) {
            lines += harness::to_json_line(r);
            lines += '\n';
            passed += r.pass ? 1 : 0;
        }
        write_output(out_path, lines, out);
        const int failed = static_cast<int>(reports.size()) - passed;
        err << "verify " << suite << ": " << reports.size() << " reports, " << passed
            << " passed, " << failed << " failed\n";
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 1;
    }
}

}  // namespace helmholtz2d::cli
