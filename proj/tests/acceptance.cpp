// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned here.
// argv[1], when given, is the CLI binary used for the determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "helmholtz2d/coeffs.hpp"
#include "helmholtz2d/harness.hpp"

using namespace helmholtz2d;
using namespace helmholtz2d::harness;

namespace {

int failures = 0;

void line(int id, bool pass, const std::string& what, double err, double tol,
          const std::string& extra = "") {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max_err=%.3e tol=%.1e", err, tol);
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  "
              << buf << (extra.empty() ? "" : "  " + extra) << std::endl;
    if (!pass) ++failures;
}

// worst error over the reports of one identity, judged against a pinned tolerance
struct Worst {
    double err = 0.0;
    bool finite = true;
    int reports = 0;
    bool all_pass = true;
};

Worst worst(const std::vector<VerificationReport>& reports, const std::string& name,
            const std::function<bool(const VerificationReport&)>& keep = {}) {
    Worst w;
    for (const auto& r : reports) {
        if (r.identity_name != name || (keep && !keep(r))) continue;
        ++w.reports;
        if (!std::isfinite(r.max_abs_error)) w.finite = false;
        w.err = std::max(w.err, r.max_abs_error);
        w.all_pass = w.all_pass && r.pass;
    }
    return w;
}

template <class T>
const T* param(const VerificationReport& r, const std::string& key) {
    for (const auto& [k, v] : r.parameters) {
        if (k == key) return std::get_if<T>(&v);
    }
    return nullptr;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    SuiteConfig config;
    config.timing = true;
    std::vector<VerificationReport> reports;
    for (const char* suite : {"jacobi-anger", "expansions", "orthogonality", "operators"}) {
        const auto part = run_suite(suite, config);
        reports.insert(reports.end(), part.begin(), part.end());
    }

    {
        const double tol = 1e-10;
        const auto w = worst(reports, "jacobi_anger");
        line(1, w.reports == 1 && w.finite && w.err <= tol,
             "Jacobi-Anger, 50 draws, kr <= 30, |m| <= 15", w.err, tol);
    }

    // W routes pairwise, and the reality / imaginarity check on the same grid
    {
        const double tol2 = 1e-7, tol3 = 1e-12;
        double pair = 0.0, sym = 0.0;
        for (double k : {1.0, 2.5}) {
            for (double ratio : {-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 5.0}) {
                for (Parity parity : {Parity::even, Parity::odd}) {
                    for (int m = -8; m <= 8; ++m) {
                        const coeffs::WCoeffQuery q{parity, k, ratio * k, m};
                        const Complex v[4] = {
                            coeffs::w_coeff_3f2(q), coeffs::w_coeff_hahn(q),
                            coeffs::w_coeff_integral(q),
                            coeffs::w_projection_oracle(q, coeffs::projection_radius(k, m))};
                        for (int a = 0; a < 4; ++a) {
                            for (int b = a + 1; b < 4; ++b) {
                                pair = std::max(pair, std::abs(v[a] - v[b]) / (1.0 + std::abs(v[a])));
                            }
                            if (a < 3) {
                                const double off = parity == Parity::even ? v[a].imag() : v[a].real();
                                sym = std::max(sym, std::abs(off) / (1.0 + std::abs(v[a])));
                            }
                        }
                    }
                }
            }
        }
        line(2, pair <= tol2, "W via 3F2, Hahn, integral and projection agree pairwise", pair, tol2);
        line(3, sym <= tol3, "W+ real and W- imaginary", sym, tol3);
    }

    {
        const double tol = 1e-6;
        const auto w = worst(reports, "expansion_parabolic_from_polar");
        long long largest = 0;
        for (const auto& r : reports) {
            if (r.identity_name != "expansion_parabolic_from_polar") continue;
            if (const auto* M = param<long long>(r, "M_largest")) largest = std::max(largest, *M);
        }
        line(4, w.reports == 10 && w.finite && w.err <= tol && largest <= 80,
             "parabolic from polar, 20 points x beta/k in {0,+-1,+-3} x parity", w.err, tol,
             "largest M=" + std::to_string(largest));
    }

    {
        const double tol = 1e-6;
        const auto w = worst(reports, "expansion_parabolic_from_cartesian");
        line(5, w.reports == 10 && w.finite && w.err <= tol,
             "parabolic from Cartesian, 20 points x beta/k x parity", w.err, tol);
    }

    {
        const double tol = 1e-5;
        const auto w = worst(reports, "inverse_polar_from_parabolic");
        double runtime = 0.0;
        for (const auto& r : reports) {
            if (r.identity_name == "inverse_polar_from_parabolic") runtime += r.runtime_ms;
        }
        line(6, w.reports == 9 && w.finite && w.err <= tol && runtime <= 60000.0,
             "inverse expansion, |m| <= 4, 10 points", w.err, tol,
             "runtime=" + std::to_string(static_cast<long long>(runtime)) + "ms");
    }

    {
        const double tol = 1e-4;
        const auto w = worst(reports, "w_orthogonality");
        line(7, w.reports == 2 && w.finite && w.err <= tol, "W orthogonality in beta, |m|,|m'| <= 6",
             w.err, tol);
        // the even diagonal at m = m' = 0 measured against the literal 1/2
        const auto r = verify_w_orthogonality(1.0, 0, 0, Parity::even, config.b_multiplier, tol);
        const double integral = *param<double>(r, "integral_re");
        std::cout << "criterion 7 (info): literal value at m = m' = 0 is "
                  << w_orthogonality_literal(Parity::even, 0, 0) << ", integral = " << integral
                  << "; the closed form gives " << w_orthogonality_expected(Parity::even, 0, 0)
                  << std::endl;
    }

    {
        const double tol = 1e-6;
        const auto w = worst(reports, "hahn_orthogonality");
        line(8, w.reports == 2 && w.finite && w.err <= tol,
             "continuous Hahn orthogonality, n,n' <= 6, a = 1/4 and 3/4", w.err, tol);
    }

    // integrals suite runs on its own to keep the W grid above separate
    const auto integrals = run_suite("integrals", config);
    {
        const double tol = 1e-12;
        const auto w = worst(integrals, "bailey_transformation");
        line(9, w.reports == 1 && w.finite && w.err <= tol, "Bailey 3F2 transformation, 100 draws",
             w.err, tol);
    }
    {
        const double tol = 1e-10;
        const auto w = worst(integrals, "I_closed_forms");
        line(10, w.reports == 2 && w.finite && w.err <= tol,
             "angular integral closed forms, n+j <= 10, |m| <= 10", w.err, tol);
    }

    {
        const double tol = 1e-4, ratio_tol = 0.5;
        const auto second_order = [](const VerificationReport& r) {
            const auto* op = param<std::string>(r, "operator");
            return op && (*op == "helmholtz" || *op == "X_S" || *op == "X_C" || *op == "X_P");
        };
        const auto eig = [](const VerificationReport& r) {
            const auto* op = param<std::string>(r, "operator");
            return op && (*op == "X_S" || *op == "X_C" || *op == "X_P");
        };
        const auto pde = worst(reports, "helmholtz_pde");
        const auto ops = worst(reports, "operator_eigenvalue", eig);
        const auto ratio = worst(reports, "refinement_ratio", second_order);
        long long unresolved = 0;
        for (const auto& r : reports) {
            if (r.identity_name == "refinement_ratio" && second_order(r)) {
                unresolved += *param<long long>(r, "unresolved");
            }
        }
        const double err = std::max(pde.err, ops.err);
        const bool pass = pde.finite && ops.finite && ratio.finite && err <= tol &&
                          ratio.err <= ratio_tol && pde.reports > 0 && ops.reports > 0;
        char extra[128];
        std::snprintf(extra, sizeof extra, "ratio |r-4| max=%.3e (tol %.1f), %lld at rounding floor",
                      ratio.err, ratio_tol, unresolved);
        line(11, pass, "Helmholtz PDE and X_S, X_C, X_P eigenvalues by finite differences", err, tol,
             extra);
    }

    {
        const auto w = worst(reports, "parity_exactness");
        line(12, w.reports == 1 && w.finite && w.err == 0.0, "parity symmetries bit-identical", w.err,
             0.0);
    }

    if (argc > 1) {
        const auto dir = std::filesystem::temp_directory_path();
        const std::string a = (dir / "helmholtz2d_accept_a.jsonl").string();
        const std::string b = (dir / "helmholtz2d_accept_b.jsonl").string();
        const std::string cli = argv[1];
        const int sa = std::system(("\"" + cli + "\" verify --suite all --out \"" + a + "\" 2>/dev/null").c_str());
        const int sb = std::system(("\"" + cli + "\" verify --suite all --out \"" + b + "\" 2>/dev/null").c_str());
        const std::string ta = slurp(a), tb = slurp(b);
        const bool same = !ta.empty() && ta == tb;
        line(13, same && sa == 0 && sb == 0, "two runs of verify --suite all are byte-identical",
             same ? 0.0 : 1.0, 0.0, std::to_string(ta.size()) + " bytes");
        std::filesystem::remove(a);
        std::filesystem::remove(b);
    } else {
        line(13, false, "determinism check needs the CLI path as argument", 1.0, 0.0);
    }

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
