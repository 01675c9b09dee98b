#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

// |a - b| <= tol * max(1, |b|)
inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

#define CHECK_CLOSE(a, b, tol) CHECK_MESSAGE(close((a), (b), (tol)), (a), " vs ", (b))
