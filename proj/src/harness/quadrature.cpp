#include "helmholtz2d/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace helmholtz2d::quadrature {

std::string_view to_string(RuleKind kind) {
    switch (kind) {
        case RuleKind::periodic_trapezoid: return "periodic_trapezoid";
        case RuleKind::gauss_jacobi: return "gauss_jacobi";
        case RuleKind::adaptive_simpson: return "adaptive_simpson";
        case RuleKind::tanh_map_trapezoid: return "tanh_map_trapezoid";
    }
    return "unknown";
}

void validate(const QuadratureRule& rule) {
    if (rule.node_count < 8) {
        throw ContractError("quadrature: node_count must be at least 8");
    }
    if (!(rule.lower < rule.upper)) {
        throw ContractError("quadrature: empty domain");
    }
    if (rule.kind == RuleKind::gauss_jacobi && !(rule.alpha > -1.0 && rule.beta > -1.0)) {
        throw ContractError("quadrature: Jacobi exponents must exceed -1");
    }
}

Complex periodic_trapezoid(const ComplexFn& f, double start, double period, int nodes) {
    if (nodes < 1) {
        throw ContractError("periodic_trapezoid: need at least one node");
    }
    const double h = period / nodes;
    Complex sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
        sum += f(start + j * h);
    }
    return sum * h;
}

namespace {

GaussRule build_gauss_jacobi(int n, double a, double b) {
    // Jacobi matrix of the monic recurrence for P^(a,b).
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        if (k == 0) {
            diag(k) = (b - a) / (a + b + 2.0);
        } else {
            diag(k) = (b * b - a * a) / (s * (s + 2.0));
        }
        if (k + 1 < n) {
            const double k1 = k + 1.0;
            const double t = 2.0 * k1 + a + b;
            if (k == 0) {
                // (1 + a + b) cancels; keeps a + b = -1 finite
                off(k) = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / (t * t * (t + 1.0)));
            } else {
                off(k) = std::sqrt(4.0 * k1 * (k1 + a) * (k1 + b) * (k1 + a + b) /
                                   (t * t * (t + 1.0) * (t - 1.0)));
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw QuadratureError("gauss_jacobi: eigen decomposition failed");
    }
    const double mu0 = std::exp2(a + b + 1.0) * std::exp(std::lgamma(a + 1.0) +
                                                        std::lgamma(b + 1.0) -
                                                        std::lgamma(a + b + 2.0));
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);
        const double v = solver.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v * v;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_jacobi_rule(int n, double alpha, double beta) {
    if (n < 1) {
        throw ContractError("gauss_jacobi: need at least one node");
    }
    if (!(alpha > -1.0 && beta > -1.0)) {
        throw ContractError("gauss_jacobi: exponents must exceed -1");
    }
    static std::mutex mutex;
    static std::map<std::tuple<int, double, double>, GaussRule> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_tuple(n, alpha, beta);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_gauss_jacobi(n, alpha, beta)).first;
    }
    return it->second;
}

namespace {

Complex apply_rule(const ComplexFn& f, const GaussRule& rule) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

}  // namespace

QuadratureResult gauss_jacobi(const ComplexFn& f, int n, double alpha, double beta) {
    const Complex coarse = apply_rule(f, gauss_jacobi_rule(n, alpha, beta));
    const Complex fine = apply_rule(f, gauss_jacobi_rule(2 * n, alpha, beta));
    return {fine, std::abs(fine - coarse), 3 * n};
}

namespace {

struct SimpsonState {
    const ComplexFn& f;
    int max_depth;
    int evaluations = 0;
    double error = 0.0;
};

Complex simpson_recurse(SimpsonState& st, double a, double b, Complex fa, Complex fm, Complex fb,
                        Complex whole, double tolerance, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = st.f(lm);
    const Complex frm = st.f(rm);
    st.evaluations += 2;
    const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Complex refined = left + right;
    const double estimate = std::abs(refined - whole) / 15.0;
    if (estimate <= tolerance) {
        st.error += estimate;
        return refined + (refined - whole) / 15.0;
    }
    if (depth >= st.max_depth) {
        throw QuadratureError("adaptive_simpson: depth limit reached on [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]");
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tolerance, depth + 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tolerance, depth + 1);
}

}  // namespace

QuadratureResult adaptive_simpson(const ComplexFn& f, double a, double b, double tolerance,
                                  double panel_width, int max_depth) {
    if (!(a < b) || !(tolerance > 0.0) || !(panel_width > 0.0)) {
        throw ContractError("adaptive_simpson: invalid domain, tolerance or panel width");
    }
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
    const double width = (b - a) / panels;
    SimpsonState st{f, max_depth};
    Complex total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double hi = (p + 1 == panels) ? b : lo + width;
        const double mid = 0.5 * (lo + hi);
        const Complex flo = f(lo);
        const Complex fmid = f(mid);
        const Complex fhi = f(hi);
        st.evaluations += 3;
        const Complex whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += simpson_recurse(st, lo, hi, flo, fmid, fhi, whole, tolerance / panels, 0);
    }
    return {total, st.error, st.evaluations};
}

QuadratureResult tanh_map_trapezoid(const ComplexFn& g, double half_width, double tolerance,
                                    double initial_step, int max_levels) {
    if (!(half_width > 0.0) || !(tolerance > 0.0) || !(initial_step > 0.0)) {
        throw ContractError("tanh_map_trapezoid: invalid parameters");
    }
    int intervals = std::max(2, static_cast<int>(std::ceil(2.0 * half_width / initial_step)));
    double h = 2.0 * half_width / intervals;
    Complex sum = 0.5 * (g(-half_width) + g(half_width));
    for (int j = 1; j < intervals; ++j) {
        sum += g(-half_width + j * h);
    }
    int evaluations = intervals + 1;
    Complex previous = sum * h;
    for (int level = 0; level < max_levels; ++level) {
        // add the midpoints of the current grid
        Complex mids = 0.0;
        for (int j = 0; j < intervals; ++j) {
            mids += g(-half_width + (j + 0.5) * h);
        }
        evaluations += intervals;
        sum += mids;
        intervals *= 2;
        h *= 0.5;
        const Complex current = sum * h;
        const double change = std::abs(current - previous);
        if (change <= tolerance) {
            return {current, change, evaluations};
        }
        previous = current;
    }
    throw QuadratureError("tanh_map_trapezoid: no convergence after " +
                          std::to_string(max_levels) + " halvings");
}

}  // namespace helmholtz2d::quadrature
