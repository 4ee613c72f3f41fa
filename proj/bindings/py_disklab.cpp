#include "disklab/experiments.hpp"
#include "disklab/functions.hpp"
#include "disklab/geometry.hpp"
#include "disklab/norms.hpp"
#include "disklab/projection.hpp"
#include "disklab/quadrature.hpp"
#include "disklab/specparse.hpp"
#include "disklab/weights.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace disklab;

namespace {

norms::PolarFn polar_from_parsed(const specparse::ParsedFunction& pf) {
    return std::visit([](const auto& f) { return norms::polar_abs(f); }, pf);
}

} // namespace

PYBIND11_MODULE(_disklab, m) {
    m.doc() = "Weighted tent/mixed norm laboratory on the unit disc";

    py::class_<quad::QuadConfig>(m, "QuadConfig")
        .def(py::init<>())
        .def_readwrite("gl_order", &quad::QuadConfig::gl_order)
        .def_readwrite("clip", &quad::QuadConfig::clip)
        .def_readwrite("n_theta", &quad::QuadConfig::n_theta)
        .def_readwrite("rel_tol", &quad::QuadConfig::rel_tol)
        .def_readwrite("max_rounds", &quad::QuadConfig::max_rounds)
        .def_readwrite("base_panels", &quad::QuadConfig::base_panels)
        .def_readwrite("clip_extrapolate", &quad::QuadConfig::clip_extrapolate)
        .def("refined", &quad::QuadConfig::refined);

    py::class_<quad::ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("value", &quad::ConvergenceReport::value)
        .def_readonly("rel_error", &quad::ConvergenceReport::rel_error)
        .def_readonly("rounds", &quad::ConvergenceReport::rounds)
        .def_readonly("converged", &quad::ConvergenceReport::converged)
        .def("__repr__", [](const quad::ConvergenceReport& r) {
            std::ostringstream os;
            os << "ConvergenceReport(value=" << r.value << ", rel_error=" << r.rel_error
               << ", converged=" << (r.converged ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<weights::RadialWeight>(m, "RadialWeight")
        .def_static("parse", &specparse::parse_weight, py::arg("spec"))
        .def_static("constant", &weights::RadialWeight::constant, py::arg("c") = 1.0)
        .def_static("standard", &weights::RadialWeight::standard, py::arg("gamma"),
                    py::arg("normalized") = true)
        .def_static("exponential", &weights::RadialWeight::exponential, py::arg("c") = 1.0,
                    py::arg("alpha") = 1.0, py::arg("l") = 1.0)
        .def_static("double_exponential", &weights::RadialWeight::double_exponential,
                    py::arg("c") = 1.0)
        .def_static("log_rapid_increase", &weights::RadialWeight::log_rapid_increase,
                    py::arg("alpha") = 2.0)
        .def("__call__", &weights::RadialWeight::operator())
        .def("tail", &weights::RadialWeight::tail)
        .def("moment", &weights::RadialWeight::moment)
        .def("name", &weights::RadialWeight::name)
        .def("regularized", &weights::RadialWeight::regularized)
        .def("tilted", &weights::RadialWeight::tilted)
        .def("dotted", &weights::RadialWeight::dotted)
        .def("boundary_flip", &weights::RadialWeight::boundary_flip)
        .def("sigma_dual", &weights::RadialWeight::sigma_dual, py::arg("gamma"), py::arg("p"))
        .def("rho_sequence", &weights::RadialWeight::rho_sequence, py::arg("K"),
             py::arg("n_max"));

    m.def("classify_dhat",
          [](const weights::RadialWeight& w) {
              auto rep = weights::classify_dhat(w, weights::default_r_grid());
              return py::make_tuple(rep.member, rep.sup_ratio);
          },
          py::arg("weight"), "Upper doubling class membership: (member, sup_ratio)");
    m.def("classify_dcheck",
          [](const weights::RadialWeight& w, double K) {
              auto rep = weights::classify_dcheck(w, K, weights::default_r_grid());
              return py::make_tuple(rep.member, rep.inf_ratio);
          },
          py::arg("weight"), py::arg("K") = 2.0,
          "Lower doubling class membership: (member, inf_ratio)");

    py::class_<functions::AnalyticFunction>(m, "AnalyticFunction")
        .def_static("parse",
                    [](const std::string& spec) {
                        auto pf = specparse::parse_function(spec);
                        if (auto* f = std::get_if<functions::AnalyticFunction>(&pf)) return *f;
                        throw std::invalid_argument("spec is not an analytic function");
                    })
        .def_static("taylor", &functions::AnalyticFunction::taylor)
        .def_static("kernel", &functions::AnalyticFunction::kernel, py::arg("lam"),
                    py::arg("beta"))
        .def_static("moment_kernel", &functions::AnalyticFunction::moment_kernel,
                    py::arg("a"), py::arg("weight"), py::arg("truncation"))
        .def("__call__", &functions::AnalyticFunction::evaluate)
        .def("derivative", &functions::AnalyticFunction::derivative, py::arg("k") = 1)
        .def("dilate", &functions::AnalyticFunction::dilate)
        .def("taylor_coefficients", &functions::AnalyticFunction::taylor_coefficients);

    m.def("integrate_Tg", &functions::integrate_Tg, py::arg("f"), py::arg("g"),
          py::arg("trunc_degree") = functions::kDefaultTruncationDegree);
    m.def("bloch_norm", &functions::bloch_norm, py::arg("g"), py::arg("radial_grid") = 256,
          py::arg("angular_grid") = 64);

    py::enum_<norms::SpaceSpec::Kind>(m, "SpaceKind")
        .value("Mixed", norms::SpaceSpec::Kind::Mixed)
        .value("Tent", norms::SpaceSpec::Kind::Tent);

    py::class_<norms::SpaceSpec>(m, "SpaceSpec")
        .def(py::init([](double p, double q, const weights::RadialWeight& w,
                         norms::SpaceSpec::Kind kind) {
                 return norms::SpaceSpec{p, q, w, kind};
             }),
             py::arg("p") = 2.0, py::arg("q") = 2.0,
             py::arg("weight") = weights::RadialWeight::constant(1.0),
             py::arg("kind") = norms::SpaceSpec::Kind::Mixed)
        .def_readwrite("p", &norms::SpaceSpec::p)
        .def_readwrite("q", &norms::SpaceSpec::q)
        .def_readwrite("weight", &norms::SpaceSpec::weight)
        .def_readwrite("kind", &norms::SpaceSpec::kind);

    m.def("mixed_norm",
          [](const std::string& fn_spec, const norms::SpaceSpec& spec,
             const quad::QuadConfig& cfg, double exclusion) {
              return norms::mixed_norm(polar_from_parsed(specparse::parse_function(fn_spec)),
                                       spec, cfg, exclusion);
          },
          py::arg("fn_spec"), py::arg("spec"), py::arg("cfg") = quad::QuadConfig{},
          py::arg("theta_exclusion") = 0.0);
    m.def("tent_norm",
          [](const std::string& fn_spec, const norms::SpaceSpec& spec,
             const quad::QuadConfig& cfg, double opening, double exclusion) {
              return norms::tent_norm(polar_from_parsed(specparse::parse_function(fn_spec)),
                                      spec, cfg, opening, exclusion);
          },
          py::arg("fn_spec"), py::arg("spec"), py::arg("cfg") = quad::QuadConfig{},
          py::arg("opening") = 1.0, py::arg("theta_exclusion") = 0.0);
    m.def("mixed_norm_fn",
          [](const functions::AnalyticFunction& f, const norms::SpaceSpec& spec,
             const quad::QuadConfig& cfg) {
              return norms::mixed_norm(norms::polar_abs(f), spec, cfg);
          },
          py::arg("f"), py::arg("spec"), py::arg("cfg") = quad::QuadConfig{});
    m.def("tent_norm_fn",
          [](const functions::AnalyticFunction& f, const norms::SpaceSpec& spec,
             const quad::QuadConfig& cfg, double opening) {
              return norms::tent_norm(norms::polar_abs(f), spec, cfg, opening);
          },
          py::arg("f"), py::arg("spec"), py::arg("cfg") = quad::QuadConfig{},
          py::arg("opening") = 1.0);
    m.def("lp_seminorm",
          [](const functions::AnalyticFunction& f, int k, const norms::SpaceSpec& spec,
             const quad::QuadConfig& cfg) { return norms::lp_seminorm(f, k, spec, cfg); },
          py::arg("f"), py::arg("k"), py::arg("spec"), py::arg("cfg") = quad::QuadConfig{});
    m.def("nontangential_max",
          [](const functions::AnalyticFunction& f, double opening, std::complex<double> v,
             const quad::QuadConfig& cfg) {
              return norms::nontangential_max(norms::polar_abs(f), opening, v, cfg);
          },
          py::arg("f"), py::arg("opening"), py::arg("vertex"),
          py::arg("cfg") = quad::QuadConfig{});
    m.def("w_maximal",
          [](const std::function<double(double)>& f, const weights::RadialWeight& nu,
             double x, const quad::QuadConfig& cfg) {
              return norms::w_maximal(f, nu, x, cfg);
          },
          py::arg("f"), py::arg("nu"), py::arg("x"), py::arg("cfg") = quad::QuadConfig{});

    m.def("project",
          [](const functions::AnalyticFunction& f, double gamma, std::complex<double> z,
             const quad::QuadConfig& cfg) {
              return projection::project(
                  [&f](std::complex<double> zeta) { return f.evaluate(zeta); }, gamma, z,
                  cfg);
          },
          py::arg("f"), py::arg("gamma"), py::arg("z"), py::arg("cfg") = quad::QuadConfig{});
    m.def("condition_Dp",
          [](double gamma, const weights::RadialWeight& w, double p, int n_max) {
              auto rep = projection::condition_Dp(gamma, w, p, n_max);
              return py::make_tuple(rep.value, rep.sequence);
          },
          py::arg("gamma"), py::arg("weight"), py::arg("p"), py::arg("n_max") = 50);
    m.def("kernel_Htilde", &projection::kernel_Htilde);
    m.def("discrete_kernel_D", &projection::discrete_kernel_D);
    m.def("jn_index", [](double theta, double phi, double x, double y) -> py::object {
        auto n = projection::jn_index(theta, phi, x, y);
        if (!n) return py::none();
        return py::int_(*n);
    });

    m.def("run_experiment",
          [](const std::string& name, const std::map<std::string, std::string>& options,
             const std::string& format) {
              experiments::ExperimentConfig cfg{name, options};
              auto rep = experiments::run_experiment(cfg);
              std::ostringstream os;
              report::write(rep, format, os);
              return os.str();
          },
          py::arg("name"), py::arg("options") = std::map<std::string, std::string>{},
          py::arg("format") = "json");
}
