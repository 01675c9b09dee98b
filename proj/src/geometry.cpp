#include "helmholtz2d/geometry.hpp"

#include <cmath>

namespace helmholtz2d::geometry {

double normalize_angle(double phi) {
    double reduced = std::fmod(phi, kTwoPi);
    if (reduced < 0.0) {
        reduced += kTwoPi;
    }
    // fmod then += 2 pi can round up to exactly 2 pi
    if (reduced >= kTwoPi) {
        reduced = 0.0;
    }
    return reduced;
}

PointXY parabolic_to_xy(const PointParabolic& p) {
    return {0.5 * (p.xi * p.xi - p.eta * p.eta), p.xi * p.eta};
}

PointParabolic xy_to_parabolic(const PointXY& p) {
    const double r = std::hypot(p.x, p.y);
    if (r == 0.0) {
        throw OriginError("xy_to_parabolic: the origin has no parabolic coordinates");
    }
    const double sgn = p.y < 0.0 ? -1.0 : 1.0;
    // Use whichever root avoids cancellation; the other follows from y = xi eta.
    if (p.x >= 0.0) {
        const double xi = std::sqrt(r + p.x);
        return {xi, p.y / xi};
    }
    const double eta_abs = std::sqrt(r - p.x);
    return {std::abs(p.y) / eta_abs, sgn * eta_abs};
}

std::pair<double, double> polar_to_parabolic_sq(const PointPolar& p) {
    const double c = std::cos(p.phi);
    return {p.r * (1.0 + c), p.r * (1.0 - c)};
}

PointParabolic polar_to_parabolic(const PointPolar& p) {
    const double scale = std::sqrt(2.0 * p.r);
    const double c = std::cos(0.5 * p.phi);
    const double s = std::sin(0.5 * p.phi);
    const double sgn = c < 0.0 ? -1.0 : 1.0;
    return {scale * std::abs(c), scale * s * sgn};
}

PointPolar xy_to_polar(const PointXY& p) {
    const double r = std::hypot(p.x, p.y);
    if (r == 0.0) {
        throw OriginError("xy_to_polar: the origin has no polar angle");
    }
    return {r, normalize_angle(std::atan2(p.y, p.x))};
}

PointXY polar_to_xy(const PointPolar& p) {
    return {p.r * std::cos(p.phi), p.r * std::sin(p.phi)};
}

}  // namespace helmholtz2d::geometry
