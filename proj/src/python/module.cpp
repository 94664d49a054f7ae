#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crownvol/checks.hpp"
#include "crownvol/continuum.hpp"
#include "crownvol/geometry.hpp"
#include "crownvol/poisson.hpp"
#include "crownvol/specfun.hpp"
#include "crownvol/volumes.hpp"

namespace py = pybind11;
using namespace crownvol;

PYBIND11_MODULE(_crownvol, m) {
    m.doc() = "Moduli-space volumes of crowned boundaries and cusped discs";

    // --- special functions ---
    m.def("dilog", &dilog, py::arg("x"));
    m.def("dilog_re", &dilog_re, py::arg("x"));
    m.def("rogers_L", &rogers_L, py::arg("x"));
    m.def("five_term_residual", &five_term_residual, py::arg("x"), py::arg("y"));
    m.def("two_term_residual", &two_term_residual, py::arg("p"));

    // --- geometry ---
    py::class_<CrownConfig>(m, "CrownConfig")
        .def(py::init([](double p, std::vector<double> pos) {
                 CrownConfig c{p, std::move(pos)};
                 c.validate();
                 return c;
             }),
             py::arg("perimeter"), py::arg("cusp_pos"))
        .def_readonly("perimeter", &CrownConfig::perimeter)
        .def_readonly("cusp_pos", &CrownConfig::cusp_pos)
        .def_property_readonly("n", &CrownConfig::cusp_count);
    py::class_<DeltaGaps>(m, "DeltaGaps")
        .def(py::init([](std::vector<double> d) {
                 DeltaGaps g{std::move(d)};
                 g.validate();
                 return g;
             }),
             py::arg("delta"))
        .def_readonly("delta", &DeltaGaps::delta)
        .def_property_readonly("perimeter", &DeltaGaps::perimeter);

    m.def("gaps_from_config", &gaps_from_config);
    m.def("config_from_gaps", &config_from_gaps);
    m.def("crown_action",
          [](const std::vector<double>& delta, double kappa) {
              return crown_action(DeltaGaps{delta}, kappa);
          },
          py::arg("delta"), py::arg("kappa") = 1.0);
    m.def("action_from_geometry",
          [](double p, const std::vector<double>& pos, double kappa) {
              return action_from_geometry(CrownConfig{p, pos}, kappa);
          },
          py::arg("perimeter"), py::arg("cusp_pos"), py::arg("kappa") = 1.0);
    m.def("x_from_delta", [](double p, const std::vector<double>& pos) {
        return x_from_delta(CrownConfig{p, pos}).x;
    });
    m.def("delta_from_x", [](const std::vector<double>& x, double p) {
        return delta_from_x(XCoords{x}, p).cusp_pos;
    });
    m.def("xi_from_x", [](const std::vector<double>& x) { return xi_from_x(XCoords{x}).xi; });
    m.def("x_from_xi", [](const std::vector<double>& xi) { return x_from_xi(XiCoords{xi}).x; });
    m.def("shear_action",
          [](const std::vector<double>& y, double kappa) {
              ShearCoords s;
              s.y = y;
              s.perimeter = 0.0;
              for (double t : y) s.perimeter += t;
              return shear_action(s, kappa);
          },
          py::arg("y"), py::arg("kappa") = 1.0);
    m.def("xi_from_shear", [](const std::vector<double>& y) {
        ShearCoords s;
        s.y = y;
        s.perimeter = 0.0;
        for (double t : y) s.perimeter += t;
        return xi_from_shear(s).xi;
    });
    m.def("disc_action", [](int n, const std::vector<double>& z) {
        return disc_action(DiscConfig{n, z});
    });
    m.def("disc_measure_density", [](int n, const std::vector<double>& z) {
        return disc_measure_density(DiscConfig{n, z});
    });

    // --- poisson ---
    m.def("pfaffian_closed_form",
          [](const std::vector<double>& x) { return pfaffian_closed_form(XCoords{x}); });
    m.def("pfaffian_x_bracket",
          [](const std::vector<double>& x) { return pfaffian(x_bracket_matrix(XCoords{x})); });
    m.def("xi_bracket_transform_check",
          [](const std::vector<double>& x) { return xi_bracket_transform_check(XCoords{x}); });
    m.def("casimir_crown",
          [](const std::vector<double>& xi) { return casimir_crown(XiCoords{xi}); });
    m.def("casimir_bracket_residual",
          [](const std::vector<double>& xi) { return casimir_bracket_residual(XiCoords{xi}); });
    m.def("dh_consistency", &dh_consistency, py::arg("n"));
    m.def("crown_measure_density_delta", [](const std::vector<double>& delta) {
        return crown_measure_density_delta(DeltaGaps{delta});
    });
    m.def("symplectic_eval", [](const std::vector<double>& u, const std::vector<double>& v) {
        return symplectic_eval(u, v);
    });

    // --- volumes ---
    py::enum_<Proposal>(m, "Proposal")
        .value("uniform", Proposal::uniform)
        .value("dirichlet_half", Proposal::dirichlet_half);
    py::class_<MCEstimate>(m, "MCEstimate")
        .def_readonly("estimate", &MCEstimate::estimate)
        .def_readonly("std_error", &MCEstimate::std_error)
        .def_readonly("n_samples", &MCEstimate::n_samples)
        .def_readonly("seed", &MCEstimate::seed)
        .def_readonly("proposal", &MCEstimate::proposal)
        .def("__repr__", [](const MCEstimate& e) {
            return "MCEstimate(" + std::to_string(e.estimate) + " +/- " +
                   std::to_string(e.std_error) + ", n=" + std::to_string(e.n_samples) + ")";
        });
    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("abs_error_bound", &QuadratureResult::abs_error_bound)
        .def_readonly("evaluations", &QuadratureResult::evaluations)
        .def("__repr__", [](const QuadratureResult& q) {
            return "QuadratureResult(" + std::to_string(q.value) + ")";
        });

    m.def("crown_integrand",
          [](const std::vector<double>& delta) { return crown_integrand(DeltaGaps{delta}); });
    m.def("crown_volume_mc", &crown_volume_mc, py::arg("n"), py::arg("p"),
          py::arg("samples"), py::arg("seed"),
          py::arg("proposal") = Proposal::dirichlet_half, py::arg("threads") = 1);
    m.def("crown_volume_quadrature", &crown_volume_quadrature, py::arg("n"), py::arg("p"));
    m.def("v1_closed", &v1_closed);
    m.def("v2_closed", &v2_closed, py::arg("p"));
    m.def("v3_closed", &v3_closed, py::arg("p"));
    m.def("v4_reduced_quadrature", &v4_reduced_quadrature, py::arg("p"));
    m.def("crown_asymptote_large_p", &crown_asymptote_large_P, py::arg("n"), py::arg("p"));
    m.def("q_n_mc", &q_n_mc, py::arg("n"), py::arg("samples"), py::arg("seed"),
          py::arg("threads") = 1);
    m.def("q3_closed", &q3_closed);
    m.def("q4_closed", &q4_closed);
    m.def("disc_volume_mc", &disc_volume_mc, py::arg("n"), py::arg("samples"), py::arg("seed"),
          py::arg("threads") = 1);
    m.def("disc_volume_quadrature", &disc_volume_quadrature, py::arg("n"));
    m.def("mirzakhani_factorized",
          [](double v_mir, const std::vector<std::pair<double, int>>& holes,
             long long samples, std::uint64_t seed) {
              std::vector<CrownedHole> hs;
              hs.reserve(holes.size());
              for (auto& [p, n] : holes) hs.push_back({p, n});
              return mirzakhani_factorized(v_mir, hs, samples, seed);
          },
          py::arg("v_mir"), py::arg("holes"), py::arg("samples") = 1000000,
          py::arg("seed") = 1);
    m.def("default_mc_samples", &default_mc_samples, py::arg("n"));

    // --- continuum ---
    py::class_<SmoothTestFn>(m, "SmoothTestFn")
        .def(py::init([](std::function<double(double)> f, std::function<double(double)> d1,
                         std::function<double(double)> d2, std::function<double(double)> d3,
                         double quasiperiod) {
                 return SmoothTestFn{std::move(f), std::move(d1), std::move(d2),
                                     std::move(d3), quasiperiod};
             }),
             py::arg("f"), py::arg("d1"), py::arg("d2"), py::arg("d3"),
             py::arg("quasiperiod"))
        .def("__call__", [](const SmoothTestFn& fn, double t) { return fn.f(t); });
    py::class_<Variation>(m, "Variation")
        .def(py::init([](std::function<double(double)> u, std::function<double(double)> d1,
                         std::function<double(double)> d2) {
                 return Variation{std::move(u), std::move(d1), std::move(d2)};
             }),
             py::arg("u"), py::arg("d1"), py::arg("d2"));

    m.def("linear_diffeo", &linear_diffeo, py::arg("p"));
    m.def("sine_diffeo", &sine_diffeo, py::arg("p"), py::arg("amplitude"));
    m.def("identity_map", &identity_map);
    m.def("exp_map", &exp_map, py::arg("alpha"));
    m.def("moebius_exp_map", &moebius_exp_map);
    m.def("crown_x_map", &crown_x_map, py::arg("p"));
    m.def("disc_sine_fn", &disc_sine_fn, py::arg("amplitude"));
    m.def("sine_variation", &sine_variation, py::arg("k") = 1);
    m.def("cosine_variation", &cosine_variation, py::arg("k") = 1);

    m.def("schwarzian", &schwarzian, py::arg("fn"), py::arg("t"));
    m.def("cocycle_residual", &cocycle_residual);
    m.def("moebius_exp_schwarzian_residual", &moebius_exp_schwarzian_residual);
    m.def("discrete_crown_action", &discrete_crown_action, py::arg("f"), py::arg("n"));
    m.def("action_expansion_coefficient",
          [](const SmoothTestFn& f, const std::vector<int>& ns) {
              return action_expansion_coefficient(f, ns);
          });
    m.def("hill_identity_residual", &hill_identity_residual);
    m.def("cross_ratio_schwarzian", &cross_ratio_schwarzian, py::arg("f"), py::arg("t"),
          py::arg("n"));
    m.def("discrete_symplectic", &discrete_symplectic);
    m.def("continuum_symplectic", &continuum_symplectic);
    m.def("gf_change_of_variables_residual", &gf_change_of_variables_residual);
    m.def("disc_continuum_coefficient",
          [](const SmoothTestFn& f, const std::vector<int>& ns) {
              return disc_continuum_coefficient(f, ns);
          });

    // --- check suites ---
    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("residual", &CheckResult::residual)
        .def_readonly("tolerance", &CheckResult::tolerance)
        .def_readonly("pass_", &CheckResult::pass);
    m.def("check_specfun", &check_specfun, py::arg("seed") = 2024);
    m.def("check_poisson", &check_poisson, py::arg("seed") = 2024);
    m.def("check_geometry", &check_geometry, py::arg("seed") = 2024);
    m.def("check_continuum", &check_continuum);
    m.def("check_all", &check_all, py::arg("seed") = 2024);
}
