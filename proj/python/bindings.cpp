#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperq/husimi_mixed.hpp"
#include "hyperq/kampe.hpp"
#include "hyperq/suite.hpp"

namespace py = pybind11;
using namespace hyperq;

namespace {

ModelParams params(double B, double R, int m) {
    ModelParams p{B, R, m};
    p.validate();
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Husimi functions for hyperbolic Landau levels";

    py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
    py::register_exception<NoConvergenceError>(mod, "NoConvergenceError", PyExc_ArithmeticError);
    py::register_exception<DivergenceError>(mod, "DivergenceError", PyExc_ArithmeticError);

    mod.def("hyp_1F1", [](double a, double c, cplx z) { return hyp_1F1(a, c, z); }, py::arg("a"), py::arg("c"),
            py::arg("z"));
    mod.def("hyp_2F1", [](double a, double b, double c, cplx z) { return hyp_2F1(a, b, c, z); });
    mod.def("humbert_phi1", [](double a, double b, double c, cplx w, cplx z) { return humbert_phi1(a, b, c, w, z); });
    mod.def("jacobi_P", &jacobi_P);

    mod.def(
        "q_pure",
        [](int j, double B, double R, int m, cplx z) { return q_pure({j, params(B, R, m)}, {z}); },
        py::arg("j"), py::arg("B"), py::arg("R"), py::arg("m"), py::arg("z"));
    mod.def(
        "density_pure",
        [](int j, double B, double R, int m, double lambda) { return radial_density({j, params(B, R, m)})(lambda); },
        py::arg("j"), py::arg("B"), py::arg("R"), py::arg("m"), py::arg("lam"));
    mod.def(
        "cf_pure", [](int j, double B, double R, int m, double u) { return cf_pure({j, params(B, R, m)}, u); },
        py::arg("j"), py::arg("B"), py::arg("R"), py::arg("m"), py::arg("u"));
    mod.def("mean_pure", [](int j, double B, double R, int m) { return mean_pure({j, params(B, R, m)}); });
    mod.def("var_pure", [](int j, double B, double R, int m) { return var_pure({j, params(B, R, m)}); });

    auto mixed = [](double beta, double B, double R, int m) {
        MixedStateSpec ms{beta, params(B, R, m), 1.0};
        ms.validate();
        return ms;
    };
    mod.def(
        "q_mixed", [=](double beta, double B, double R, int m, cplx z) { return q_mixed_closed(mixed(beta, B, R, m), {z}); },
        py::arg("beta"), py::arg("B"), py::arg("R"), py::arg("m"), py::arg("z"));
    mod.def(
        "density_mixed",
        [=](double beta, double B, double R, int m, double lambda) {
            return radial_density_mixed(mixed(beta, B, R, m))(lambda);
        },
        py::arg("beta"), py::arg("B"), py::arg("R"), py::arg("m"), py::arg("lam"));
    mod.def(
        "cf_mixed", [=](double beta, double B, double R, int m, double u) { return cf_mixed(mixed(beta, B, R, m), u); },
        py::arg("beta"), py::arg("B"), py::arg("R"), py::arg("m"), py::arg("u"));
    mod.def("mean_mixed", [=](double beta, double B, double R, int m) { return mean_mixed(mixed(beta, B, R, m)); });
    mod.def("var_mixed", [=](double beta, double B, double R, int m) { return var_mixed(mixed(beta, B, R, m)); });
    mod.def("partition_Z", [=](double beta, double B, double R, int m) { return partition_Z(mixed(beta, B, R, m)); });
    mod.def("laguerre_photon_pmf", &laguerre_photon_pmf, py::arg("m"), py::arg("lam"), py::arg("beta"));

    mod.def(
        "berezin_lieb",
        [](double beta, double epsilon, double B, double R) {
            const BerezinLiebSweep sw = berezin_lieb_sweep(beta, epsilon, B, R);
            py::dict d;
            d["m_star"] = sw.m_star;
            d["bound"] = sw.bound;
            d["theta_per_m"] = sw.theta_per_m;
            d["lhs_per_m"] = sw.lhs_per_m;
            d["gap_per_m"] = sw.gap_per_m;
            return d;
        },
        py::arg("beta"), py::arg("epsilon"), py::arg("B"), py::arg("R"));

    mod.def("verify", []() {
        py::list out;
        for (const VerificationReport& r : default_suite()) {
            py::dict d;
            d["label"] = r.label;
            d["abs_err"] = r.abs_err;
            d["rel_err"] = r.rel_err;
            d["tol"] = r.tol;
            d["pass"] = r.pass;
            out.append(d);
        }
        return out;
    });
}
