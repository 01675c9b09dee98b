#include <cmath>
#include <string>

#include "../detail/double_double.hpp"
#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::specfun {

namespace {

using detail::DD;

constexpr double kSeriesCutoff = 12.0;

// Ascending series, every term and the running sum in double-double. The
// largest term at x = 12 is ~4e3, so double-double keeps ~1e-28 absolute.
double bessel_series(int m, double x) {
    const DD half_x = DD(x) * 0.5;
    DD leading = 1.0;
    for (int j = 1; j <= m; ++j) {
        leading = leading * half_x / DD(static_cast<double>(j));
    }
    if (leading.hi == 0.0) {
        return 0.0;
    }
    const DD q = -(half_x * half_x);
    DD term = leading;
    DD sum = leading;
    for (int k = 1; k < 400; ++k) {
        term = term * q / DD(static_cast<double>(k) * static_cast<double>(k + m));
        sum = sum + term;
        if (std::abs(term.hi) <= 1e-34 * std::abs(sum.hi) && k > x) {
            break;
        }
    }
    return sum.to_double();
}

// Miller's downward recurrence normalized by J0 + 2 sum J_{2k} = 1.
double bessel_miller(int m, double x) {
    const double top = std::max(static_cast<double>(m), x);
    int start = static_cast<int>(top + 30.0 + std::sqrt(60.0 * top));
    start += start % 2;

    constexpr double kBig = 1e250;
    constexpr double kSmall = 1e-250;
    const double two_over_x = 2.0 / x;

    double next = 0.0;     // J_{j+1}
    double current = 1e-300;  // J_j, arbitrary seed
    double result = 0.0;
    double norm = 0.0;
    for (int j = start; j > 0; --j) {
        const double previous = j * two_over_x * current - next;  // J_{j-1}
        next = current;
        current = previous;
        if (std::abs(current) > kBig) {
            current *= kSmall;
            next *= kSmall;
            result *= kSmall;
            norm *= kSmall;
        }
        // current now holds J_{j-1}
        if (j - 1 == m) {
            result = current;
        }
        if ((j - 1) % 2 == 0 && j - 1 > 0) {
            norm += 2.0 * current;
        }
    }
    norm += current;  // J_0
    return result / norm;
}

}  // namespace

double bessel_j(int m, double x) {
    if (m < 0 || m > kBesselMaxOrder) {
        throw RangeError("bessel_j: order " + std::to_string(m) + " outside [0, 200]");
    }
    if (!(x >= 0.0) || x > kBesselMaxArgument) {
        throw RangeError("bessel_j: argument outside [0, 1e4]");
    }
    if (x == 0.0) {
        return m == 0 ? 1.0 : 0.0;
    }
    if (x <= kSeriesCutoff) {
        return bessel_series(m, x);
    }
    return bessel_miller(m, x);
}

}  // namespace helmholtz2d::specfun
