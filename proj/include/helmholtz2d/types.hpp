#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>

namespace helmholtz2d {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Parity { even, odd };

std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

/// sign(0) = 0.
constexpr int sign(double v) { return (v > 0.0) - (v < 0.0); }
constexpr int sign(int v) { return (v > 0) - (v < 0); }

/// i^n via a period-4 table (exact for any integer n).
constexpr Complex i_pow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

/// (-i)^n via the same table.
constexpr Complex minus_i_pow(int n) { return i_pow(-n); }

/// (-1)^n.
constexpr double neg_one_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace helmholtz2d
