#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "helmholtz2d/bases.hpp"
#include "helmholtz2d/coeffs.hpp"
#include "helmholtz2d/harness.hpp"
#include "helmholtz2d/specfun.hpp"

namespace py = pybind11;
namespace h = helmholtz2d;

namespace {

h::Parity parity(const std::string& s) { return h::parse_parity(s); }

// reports go out as JSON text; the package wrapper decodes them
std::vector<std::string> verify(const std::string& suite, std::optional<std::string> config_path) {
    h::harness::SuiteConfig config;
    if (config_path) {
        config = h::harness::load_config(*config_path);
    }
    std::vector<std::string> out;
    {
        py::gil_scoped_release release;
        for (const auto& r : h::harness::run_suite(suite, config)) {
            out.push_back(h::harness::to_json_line(r));
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "2D Helmholtz separable bases and interbasis coefficients";

    auto base = py::register_exception<h::Error>(m, "Error", PyExc_ValueError);
    py::register_exception<h::PoleError>(m, "PoleError", base.ptr());
    py::register_exception<h::RangeError>(m, "RangeError", base.ptr());
    py::register_exception<h::ContractError>(m, "ContractError", base.ptr());
    py::register_exception<h::OriginError>(m, "OriginError", base.ptr());
    py::register_exception<h::SingularityError>(m, "SingularityError", base.ptr());
    py::register_exception<h::QuadratureError>(m, "QuadratureError", base.ptr());
    py::register_exception<h::NodeError>(m, "NodeError", base.ptr());
    py::register_exception<h::ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<h::ConfigError>(m, "ConfigError", base.ptr());

    // special functions
    m.def("ln_gamma", &h::specfun::ln_gamma, py::arg("z"));
    m.def("abs_gamma_sq", &h::specfun::abs_gamma_sq, py::arg("a"), py::arg("x"));
    m.def("bessel_j", &h::specfun::bessel_j, py::arg("m"), py::arg("x"));
    m.def("kummer_1f1",
          [](h::Complex a, double b, h::Complex z) { return h::specfun::kummer_1f1(a, b, z); },
          py::arg("a"), py::arg("b"), py::arg("z"));
    m.def("continuous_hahn",
          [](int n, double x, double a, double b, double c, double d) {
              return h::specfun::continuous_hahn({n, x, a, b, c, d});
          },
          py::arg("n"), py::arg("x"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("sine_power_integral", &h::specfun::sine_power_integral, py::arg("alpha"),
          py::arg("beta"));

    // bases
    m.def("psi_plane",
          [](double k1, double k2, double x, double y) { return h::bases::psi_plane({k1, k2}, {x, y}); },
          py::arg("k1"), py::arg("k2"), py::arg("x"), py::arg("y"));
    m.def("psi_cartesian",
          [](double k, double alpha, const std::string& p, double x, double y) {
              return h::bases::psi_cartesian_parity({k, alpha, parity(p)}, {x, y});
          },
          py::arg("k"), py::arg("alpha"), py::arg("parity"), py::arg("x"), py::arg("y"));
    m.def("psi_double_parity",
          [](const std::string& px, const std::string& py_, double k1, double k2, double x, double y) {
              return h::bases::psi_cartesian_double_parity({parity(px), parity(py_), k1, k2}, {x, y});
          },
          py::arg("parity_x"), py::arg("parity_y"), py::arg("k1"), py::arg("k2"), py::arg("x"),
          py::arg("y"));
    m.def("psi_polar",
          [](double k, int mm, double r, double phi) { return h::bases::psi_polar({k, mm}, {r, phi}); },
          py::arg("k"), py::arg("m"), py::arg("r"), py::arg("phi"));
    m.def("psi_parabolic",
          [](double k, double beta, const std::string& p, double xi, double eta) {
              return h::bases::psi_parabolic({k, beta, parity(p)}, {xi, eta});
          },
          py::arg("k"), py::arg("beta"), py::arg("parity"), py::arg("xi"), py::arg("eta"));
    m.def("psi_miller",
          [](double k, double beta, int sign, double xi, double eta) {
              return h::bases::psi_miller({k, beta, sign}, {xi, eta});
          },
          py::arg("k"), py::arg("beta"), py::arg("sign"), py::arg("xi"), py::arg("eta"));

    // coefficients
    m.def("s_coeff",
          [](const std::string& p, int mm, double alpha) { return h::coeffs::s_coeff({parity(p), mm, alpha}); },
          py::arg("parity"), py::arg("m"), py::arg("alpha"));
    m.def("w_coeff",
          [](const std::string& p, double k, double beta, int mm, const std::string& method) {
              return h::coeffs::w_coeff({parity(p), k, beta, mm}, h::coeffs::parse_method(method));
          },
          py::arg("parity"), py::arg("k"), py::arg("beta"), py::arg("m"),
          py::arg("method") = "closed_form");
    m.def("w_projection_oracle",
          [](const std::string& p, double k, double beta, int mm, std::optional<double> r) {
              const h::coeffs::WCoeffQuery q{parity(p), k, beta, mm};
              return h::coeffs::w_projection_oracle(q, r ? *r : h::coeffs::projection_radius(k, mm));
          },
          py::arg("parity"), py::arg("k"), py::arg("beta"), py::arg("m"), py::arg("r") = py::none());
    m.def("z_coeff",
          [](double k, double beta, double alpha) { return h::coeffs::z_coeff({k, beta, alpha}); },
          py::arg("k"), py::arg("beta"), py::arg("alpha"));
    m.def("angular_integral",
          [](const std::string& p, int n, int j, int mm) {
              return h::coeffs::angular_integral_I(parity(p), n, j, mm);
          },
          py::arg("parity"), py::arg("n"), py::arg("j"), py::arg("m"));

    // harness
    m.def("suite_names", &h::harness::suite_names);
    m.def("identity_names", &h::harness::identity_names);
    m.def("verify_json", &verify, py::arg("suite") = "all", py::arg("config_path") = py::none());
}
