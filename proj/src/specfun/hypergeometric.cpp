#include <cmath>
#include <limits>
#include <string>

#include "../detail/double_double.hpp"
#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::specfun {

namespace {

using detail::CDD;
using detail::DD;

constexpr int kKummerMaxTerms = 4000;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Complex kummer_1f1(Complex a, double b, Complex z, double z_max) {
    if (b <= 0.0 && b == std::floor(b)) {
        throw PoleError("kummer_1f1: b = " + std::to_string(b) + " is a nonpositive integer");
    }
    const double modulus = std::abs(z);
    if (!(modulus <= z_max)) {
        throw RangeError("kummer_1f1: |z| = " + std::to_string(modulus) + " exceeds " +
                         std::to_string(z_max));
    }
    if (modulus == 0.0) {
        return 1.0;
    }

    const CDD a_dd(a);
    const CDD z_dd(z);
    CDD term(DD(1.0), DD(0.0));
    CDD sum = term;
    const double settle = modulus + std::abs(a);
    for (int n = 0; n < kKummerMaxTerms; ++n) {
        const DD dn(static_cast<double>(n));
        const CDD numerator = (a_dd + CDD(dn, DD(0.0))) * z_dd;
        const DD denominator = (DD(b) + dn) * DD(static_cast<double>(n + 1));
        term = (term * numerator) / denominator;
        sum = sum + term;
        if (n > settle && abs_approx(term) <= 1e-33 * abs_approx(sum)) {
            return sum.to_complex();
        }
        if (abs_approx(term) == 0.0) {
            return sum.to_complex();
        }
    }
    throw ConvergenceError("kummer_1f1: series did not settle");
}

int termination_index(const Hyp3F2Params& p) {
    int n = -1;
    for (const Complex& a : p.upper) {
        if (is_nonpositive_integer(a)) {
            const int candidate = static_cast<int>(-a.real());
            if (n < 0 || candidate < n) {
                n = candidate;
            }
        }
    }
    return n;
}

Complex hyp3f2_terminating(const Hyp3F2Params& p) {
    const int n = termination_index(p);
    if (n < 0) {
        throw ContractError("hyp3f2_terminating: no upper parameter is a nonpositive integer");
    }
    for (const Complex& b : p.lower) {
        if (is_nonpositive_integer(b) && -b.real() < n) {
            throw ContractError("hyp3f2_terminating: lower parameter " + std::to_string(b.real()) +
                                " vanishes inside the terminating sum");
        }
    }

    const CDD a1(p.upper[0]), a2(p.upper[1]), a3(p.upper[2]);
    const CDD b1(p.lower[0]), b2(p.lower[1]);
    CDD term(DD(1.0), DD(0.0));
    CDD sum = term;
    for (int j = 0; j < n; ++j) {
        const CDD dj(DD(static_cast<double>(j)), DD(0.0));
        const CDD numerator = (a1 + dj) * (a2 + dj) * (a3 + dj);
        const CDD denominator = (b1 + dj) * (b2 + dj) * DD(static_cast<double>(j + 1));
        term = term * numerator / denominator;
        sum = sum + term;
    }
    return sum.to_complex();
}

namespace {

void check_hahn_params(const HahnParams& p) {
    if (p.n < 0) {
        throw ContractError("continuous_hahn: negative degree");
    }
    if (!(p.a + p.c > 0.0) || !(p.a + p.d > 0.0)) {
        throw ContractError("continuous_hahn: requires a + c > 0 and a + d > 0");
    }
}

// i^n (a+c)_n (a+d)_n / n!
Complex hahn_prefactor(const HahnParams& p) {
    double product = 1.0;
    for (int j = 0; j < p.n; ++j) {
        product *= (p.a + p.c + j) * (p.a + p.d + j) / (j + 1);
    }
    return i_pow(p.n) * product;
}

}  // namespace

Complex continuous_hahn(const HahnParams& p) {
    check_hahn_params(p);
    // the alternating series cancels badly past this degree, even in double-double
    if (p.n > kHahnSeriesMaxDegree) {
        return continuous_hahn_recurrence(p);
    }
    const double s = p.a + p.b + p.c + p.d;
    Hyp3F2Params series{{Complex(-p.n, 0.0), Complex(p.n + s - 1.0, 0.0), Complex(p.a, p.x)},
                        {Complex(p.a + p.c, 0.0), Complex(p.a + p.d, 0.0)}};
    return hahn_prefactor(p) * hyp3f2_terminating(series);
}

std::vector<Complex> hahn_normalized_sequence(double x, double a, double b, double c, double d,
                                              int max_degree) {
    if (max_degree < 0) {
        throw ContractError("hahn_normalized_sequence: negative degree");
    }
    const double s = a + b + c + d;
    const Complex shift(a, x);
    std::vector<Complex> values(static_cast<std::size_t>(max_degree) + 1);
    values[0] = 1.0;
    if (max_degree == 0) {
        return values;
    }
    values[1] = 1.0 - s * shift / ((a + c) * (a + d));
    for (int n = 1; n < max_degree; ++n) {
        const double den_a = (2.0 * n + s - 1.0) * (2.0 * n + s);
        const double den_c = (2.0 * n + s - 2.0) * (2.0 * n + s - 1.0);
        const double A = -(n + s - 1.0) * (n + a + c) * (n + a + d) / den_a;
        const double C = n * (n + b + c - 1.0) * (n + b + d - 1.0) / den_c;
        if (den_a == 0.0 || den_c == 0.0 || A == 0.0) {
            throw ContractError("hahn_normalized_sequence: degenerate recurrence coefficient");
        }
        values[n + 1] = ((shift + A + C) * values[n] - C * values[n - 1]) / A;
    }
    return values;
}

Complex continuous_hahn_recurrence(const HahnParams& p) {
    check_hahn_params(p);
    const auto values = hahn_normalized_sequence(p.x, p.a, p.b, p.c, p.d, p.n);
    return hahn_prefactor(p) * values[static_cast<std::size_t>(p.n)];
}

}  // namespace helmholtz2d::specfun
