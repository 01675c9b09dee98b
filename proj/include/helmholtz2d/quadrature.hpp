#pragma once

// Quadrature engines used by the coefficient integrals and the verification
// harness. All rules are deterministic: fixed node sets, index-ordered sums.

#include <functional>
#include <string_view>
#include <vector>

#include "helmholtz2d/errors.hpp"
#include "helmholtz2d/types.hpp"

namespace helmholtz2d::quadrature {

using ComplexFn = std::function<Complex(double)>;

enum class RuleKind { periodic_trapezoid, gauss_jacobi, adaptive_simpson, tanh_map_trapezoid };

std::string_view to_string(RuleKind kind);

struct QuadratureRule {
    RuleKind kind = RuleKind::periodic_trapezoid;
    int node_count = 64;
    double lower = 0.0;
    double upper = kTwoPi;
    // Jacobi weight (1 - u)^alpha (1 + u)^beta, gauss_jacobi only
    double alpha = 0.0;
    double beta = 0.0;
};

/// node_count >= 8, lower < upper, Jacobi exponents > -1.
void validate(const QuadratureRule& rule);

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Sum over N equispaced nodes of one period [start, start + period).
Complex periodic_trapezoid(const ComplexFn& f, double start, double period, int nodes);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss–Jacobi nodes and weights on [-1, 1] for the weight (1-u)^alpha (1+u)^beta,
/// by Golub–Welsch. Results are cached per (n, alpha, beta).
const GaussRule& gauss_jacobi_rule(int n, double alpha, double beta);

/// Sum of w_i f(u_i) over the Gauss–Jacobi rule; error estimate from the n -> 2n comparison.
QuadratureResult gauss_jacobi(const ComplexFn& f, int n, double alpha, double beta);

/// Adaptive Simpson on [a, b], first split into panels of width at most panel_width.
/// Each panel is refined until the Richardson estimate |S2 - S1|/15 meets its share of
/// the absolute tolerance. Throws QuadratureError when max_depth is exhausted.
QuadratureResult adaptive_simpson(const ComplexFn& f, double a, double b, double tolerance,
                                  double panel_width, int max_depth = 30);

/// Trapezoid on [-half_width, half_width] with step halving from initial_step until two
/// successive levels agree to tolerance. Meant for integrands analytic in a strip
/// around the real axis that decay at both ends (e.g. after cos phi = tanh tau).
QuadratureResult tanh_map_trapezoid(const ComplexFn& g, double half_width, double tolerance,
                                    double initial_step = 0.5, int max_levels = 12);

}  // namespace helmholtz2d::quadrature
