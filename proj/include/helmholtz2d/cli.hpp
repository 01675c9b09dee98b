#pragma once

// Command-line front end: eval (bases on grids), coeffs (tables), verify (suites).

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "helmholtz2d/bases.hpp"
#include "helmholtz2d/coeffs.hpp"

namespace helmholtz2d::cli {

enum class Chart { xy, polar, parabolic };

struct GridSpec {
    Chart chart = Chart::xy;
    double min1 = 0.0, max1 = 1.0;
    int n1 = 2;
    double min2 = 0.0, max2 = 1.0;
    int n2 = 2;
};

/// "chart:min1:max1:n1:min2:max2:n2". ConfigError on bad syntax or chart ranges.
GridSpec parse_grid(std::string_view text);

/// Node j of n equally spaced samples on [lo, hi], endpoints exact.
double grid_node(double lo, double hi, int n, int j);

/// "k=v,k2=v2"; duplicate keys are rejected.
std::map<std::string, std::string> parse_index(std::string_view text);

/// Basis selector (plane, cartesian, double, polar, parabolic, miller) plus index fields.
bases::BasisIndex make_basis(std::string_view basis, const std::map<std::string, std::string>& fields);

/// Value at a grid node given in the grid's chart; charts native to the basis are
/// evaluated directly so exact zero sets survive.
Complex evaluate_on_chart(const bases::BasisIndex& basis, Chart chart, double c1, double c2);

/// %.17g with negative zero printed as 0.
std::string format_double(double v);

/// Whole CSV text of cmd_eval.
std::string eval_csv(const bases::BasisIndex& basis, const GridSpec& grid);

/// Table for the coeffs command. method "all" gives three rows per W query.
coeffs::CoefficientTable make_table(std::string_view kind,
                                    const std::map<std::string, std::string>& fields,
                                    std::string_view method);

std::string table_csv(const coeffs::CoefficientTable& table);

/// Full command line. Returns the process exit status; every error path writes exactly
/// one line starting with "error:" to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace helmholtz2d::cli
