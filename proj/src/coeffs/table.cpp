#include <cmath>

#include "helmholtz2d/coeffs.hpp"

namespace helmholtz2d::coeffs {

CoefficientTable s_table(const std::vector<Parity>& parities, const std::vector<int>& ms,
                         const std::vector<double>& alphas) {
    CoefficientTable table{TableKind::S, {}, 0.0};
    for (Parity parity : parities) {
        for (int m : ms) {
            for (double alpha : alphas) {
                CoefficientRow row;
                row.parity = parity;
                row.m = m;
                row.alpha = alpha;
                row.method = Method::closed_form;
                row.value = s_coeff({parity, m, alpha});
                table.rows.push_back(row);
            }
        }
    }
    return table;
}

CoefficientTable w_table(const std::vector<Parity>& parities, double k,
                         const std::vector<double>& betas, const std::vector<int>& ms,
                         const std::vector<Method>& methods, double integral_tolerance) {
    CoefficientTable table{TableKind::W, {}, integral_tolerance};
    for (Parity parity : parities) {
        for (double beta : betas) {
            for (int m : ms) {
                for (Method method : methods) {
                    CoefficientRow row;
                    row.parity = parity;
                    row.k = k;
                    row.beta = beta;
                    row.m = m;
                    row.method = method;
                    const WCoeffQuery q{parity, k, beta, m};
                    row.value = method == Method::integral ? w_coeff_integral(q, integral_tolerance)
                                                           : w_coeff(q, method);
                    table.rows.push_back(row);
                }
            }
        }
    }
    return table;
}

CoefficientTable z_table(double k, const std::vector<double>& betas,
                         const std::vector<double>& alphas) {
    CoefficientTable table{TableKind::Z, {}, 0.0};
    for (double beta : betas) {
        for (double alpha : alphas) {
            CoefficientRow row;
            row.k = k;
            row.beta = beta;
            row.alpha = alpha;
            row.method = Method::closed_form;
            row.value = z_coeff({k, beta, std::abs(alpha)});
            table.rows.push_back(row);
        }
    }
    return table;
}

}  // namespace helmholtz2d::coeffs
