#pragma once

// Interbasis expansion coefficients:
//   S  Cartesian (parity) <-> polar
//   W  parabolic <-> polar, by three independent routes plus a projection oracle
//   Z  parabolic <-> Cartesian (parity)
// and the angular integrals I that appear in the derivation of W.

#include <string_view>
#include <vector>

#include "helmholtz2d/errors.hpp"
#include "helmholtz2d/types.hpp"

namespace helmholtz2d::coeffs {

/// Largest |m| accepted by w_coeff_3f2. The direct 3F2 sum loses about
/// |m| log10(8) digits to cancellation; double-double accumulation keeps
/// 1e-10 relative accuracy up to this order.
inline constexpr int kW3F2MaxOrder = 24;

/// Largest |m| accepted by w_coeff_hahn (recurrence route).
inline constexpr int kWHahnMaxOrder = 150;

struct SCoeffQuery {
    Parity parity = Parity::even;
    int m = 0;
    double alpha = 0.0;
};

struct WCoeffQuery {
    Parity parity = Parity::even;
    double k = 1.0;
    double beta = 0.0;
    int m = 0;
};

struct ZCoeffQuery {
    double k = 1.0;
    double beta = 0.0;
    double alpha_abs = 0.5 * kPi;
};

enum class Method { closed_form, hahn, three_f_two, integral };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// S+ = (-i)^|m| cos(m alpha)/sqrt(2pi), S- = -sign(sin alpha)(-i)^|m| sin(m alpha)/sqrt(2pi).
Complex s_coeff(const SCoeffQuery& q);

/// W from the Gamma-prefactored terminating 3F2 (double-double sum). |m| <= kW3F2MaxOrder.
Complex w_coeff_3f2(const WCoeffQuery& q);

/// W from the continuous Hahn form, p_n(beta/2k; 1/4,...) and p_{|m|-1}(beta/2k; 3/4,...),
/// with the polynomial from its three-term recurrence and the factorial prefactor in log space.
Complex w_coeff_hahn(const WCoeffQuery& q);

/// W from the angular integral representation
///   (-i)^|m|/(pi sqrt(2k)) int_0^pi (1+cos)^{-1/4-i gamma} (1-cos)^{-1/4+i gamma} {cos, sin}(m phi) dphi.
/// beta = 0: Gauss–Jacobi in u = cos phi. Otherwise the substitution cos phi = tanh tau and a
/// trapezoid with step halving. Throws QuadratureError if tolerance is not met.
Complex w_coeff_integral(const WCoeffQuery& q, double tolerance = 1e-13);

/// Independent oracle: periodic-trapezoid projection of the parabolic function on the
/// circle of radius r, divided by sqrt(2 pi k) J_|m|(kr). Throws NodeError when
/// |J_|m|(kr)| < 0.05.
Complex w_projection_oracle(const WCoeffQuery& q, double r, int nodes = 256);

/// A radius r at which |J_|m|(kr)| >= 0.2 and 2kr stays inside the 1F1 range.
double projection_radius(double k, int m);

/// Z = (1/(2 sqrt(pi k sin|alpha|))) e^{i (beta/k) ln cot(|alpha|/2)} (both parities).
/// Throws SingularityError at |alpha| = 0 or pi.
Complex z_coeff(const ZCoeffQuery& q);

/// I+_{nj}(m) = int_0^{2pi} (1+cos)^n (1-cos)^j e^{-im phi} dphi,
/// I-_{nj}(m) = same with an extra sin(phi). Inside the closed-form support
/// (n+j <= |m| even, n+j+1 <= |m| odd) the closed form is used; outside it the
/// value comes from the exact trigonometric expansion of the integrand.
Complex angular_integral_I(Parity parity, int n, int j, int m);

/// True when (n, j, m) lies where the closed form (or its mandated zero) applies.
bool angular_integral_in_closed_form_domain(Parity parity, int n, int j, int m);

/// int_{-pi}^{pi} S_m S*_{m'} d alpha from the elementary trigonometric integrals:
/// (1/2)(delta_{m,m'} + delta_{m,-m'}) even, (1/2)(delta_{m,m'} - delta_{m,-m'}) odd.
Complex s_overlap(Parity parity, int m, int m2);

/// sum_{|m| <= M} W^(parity)_{k beta m} S^(other parity)_{m alpha}, added in +-m pairs.
Complex mixed_parity_sum(Parity w_parity, double k, double beta, double alpha, int M);

/// Dispatch for W by method (closed_form maps to three_f_two).
Complex w_coeff(const WCoeffQuery& q, Method method);

// --- tables -----------------------------------------------------------------

enum class TableKind { S, W, Z };

struct CoefficientRow {
    Parity parity = Parity::even;
    double k = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    int m = 0;
    Method method = Method::closed_form;
    Complex value;
};

struct CoefficientTable {
    TableKind kind = TableKind::S;
    std::vector<CoefficientRow> rows;
    double integral_tolerance = 0.0;
};

CoefficientTable s_table(const std::vector<Parity>& parities, const std::vector<int>& ms,
                         const std::vector<double>& alphas);

CoefficientTable w_table(const std::vector<Parity>& parities, double k,
                         const std::vector<double>& betas, const std::vector<int>& ms,
                         const std::vector<Method>& methods, double integral_tolerance = 1e-13);

CoefficientTable z_table(double k, const std::vector<double>& betas,
                         const std::vector<double>& alphas);

}  // namespace helmholtz2d::coeffs
