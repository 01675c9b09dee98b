#pragma once

// Special-function kernel: complex log-gamma, integer-order Bessel J,
// Kummer 1F1 on the imaginary axis, terminating 3F2 at unit argument,
// continuous Hahn polynomials and the sine-power phase integral.

#include <array>
#include <vector>

#include "helmholtz2d/errors.hpp"
#include "helmholtz2d/types.hpp"

namespace helmholtz2d::specfun {

/// Largest |z| accepted by kummer_1f1 unless the caller passes its own limit.
inline constexpr double kKummerMaxArgument = 50.0;

/// Support limits of bessel_j.
inline constexpr int kBesselMaxOrder = 200;
inline constexpr double kBesselMaxArgument = 1.0e4;

/// Principal branch of log Gamma(z). Throws PoleError at z = 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// |Gamma(a + ix)|^2.
double abs_gamma_sq(double a, double x);

/// Reciprocal gamma function for real arguments; zero at the poles.
double recip_gamma(double x);

/// Bessel function of the first kind J_m(x), 0 <= m <= 200, 0 <= x <= 1e4.
double bessel_j(int m, double x);

/// Kummer's function 1F1(a; b; z) by power series in double-double arithmetic.
///
/// Intended for purely imaginary z with |z| <= z_max; the series is valid for
/// any z but the accuracy guarantee only holds on the imaginary axis, where
/// the cancellation is bounded by exp(|z|). Throws RangeError for |z| > z_max
/// and PoleError when b is a nonpositive integer.
Complex kummer_1f1(Complex a, double b, Complex z, double z_max = kKummerMaxArgument);

/// Parameters of 3F2(a1, a2, a3; b1, b2; 1). At least one upper parameter must
/// be a nonpositive integer -n; the smallest such n terminates the series.
struct Hyp3F2Params {
    std::array<Complex, 3> upper;
    std::array<Complex, 2> lower;
};

/// Termination index n of a terminating 3F2, or -1 when no upper parameter is
/// a nonpositive integer.
int termination_index(const Hyp3F2Params& p);

/// Exact finite sum of the n+1 terms (double-double accumulation).
/// Throws ContractError when the series does not terminate or a lower
/// parameter produces a zero denominator within the sum.
Complex hyp3f2_terminating(const Hyp3F2Params& p);

/// Rising factorial (a)_n by running product.
Complex pochhammer(Complex a, int n);
double pochhammer(double a, int n);

struct HahnParams {
    int n = 0;
    double x = 0.0;
    double a = 0.25;
    double b = 0.25;
    double c = 0.25;
    double d = 0.25;
};

/// Highest degree summed from the 3F2 series; above it the three-term recurrence is used.
inline constexpr int kHahnSeriesMaxDegree = 24;

/// Continuous Hahn polynomial p_n(x; a, b, c, d) from its 3F2 definition
/// (recurrence beyond kHahnSeriesMaxDegree).
Complex continuous_hahn(const HahnParams& p);

/// Same polynomial evaluated by the forward three-term recurrence in n. Stable
/// for high degree, where the 3F2 sum loses digits to cancellation.
Complex continuous_hahn_recurrence(const HahnParams& p);

/// Normalized polynomial 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1) for all
/// degrees 0..max_degree via the three-term recurrence.
std::vector<Complex> hahn_normalized_sequence(double x, double a, double b, double c, double d,
                                              int max_degree);

/// Closed form of the integral over [0, pi] of sin^alpha(phi) exp(i beta phi).
/// Throws RangeError for alpha <= -1.
Complex sine_power_integral(double alpha, double beta);

}  // namespace helmholtz2d::specfun
