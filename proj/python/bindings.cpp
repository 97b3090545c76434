#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdpcolor/covers.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/gaussian.hpp"
#include "sdpcolor/graph.hpp"
#include "sdpcolor/params.hpp"
#include "sdpcolor/pipeline.hpp"
#include "sdpcolor/rounding.hpp"
#include "sdpcolor/sos.hpp"
#include "sdpcolor/vector_coloring.hpp"

namespace py = pybind11;
using namespace sdpcolor;

namespace {

py::dict rounding_dict(const RoundingOutcome& r) {
    py::dict d;
    d["S"] = r.S;
    d["M"] = r.M;
    d["returned"] = r.returned;
    d["t"] = r.t;
    d["seed"] = r.seed;
    return d;
}

VectorColoring vc_of(const Eigen::MatrixXd& vectors, double kappa) { return from_vectors(vectors, kappa); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SDP-based coloring of 3-colorable graphs";

    // Translators run newest first, so the base class is registered first.
    auto base = py::register_exception<Error>(m, "Error");
    py::object precondition_bases = py::make_tuple(base, py::handle(PyExc_ValueError));
    py::register_exception<PreconditionError>(m, "PreconditionError", precondition_bases);
    py::register_exception<NotThreeColorableError>(m, "NotThreeColorableError", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("has_edge", &Graph::has_edge);

    m.def(
        "generate_planted",
        [](int n, std::array<double, 3> w, double edge_prob, std::uint64_t seed) {
            const double ws[3] = {w[0], w[1], w[2]};
            auto inst = generate_planted(n, ws, edge_prob, seed);
            return py::make_tuple(inst.graph, inst.planted);
        },
        py::arg("n"), py::arg("weights") = std::array<double, 3>{1.0 / 3, 1.0 / 3, 1.0 / 3},
        py::arg("edge_prob"), py::arg("seed") = 1, "Returns (graph, planted coloring).");
    m.def("edge_prob_for_degree", &edge_prob_for_degree);
    m.def("is_independent_set", [](const Graph& g, const std::vector<int>& s) { return is_independent_set(g, s); });
    m.def("is_proper_coloring", [](const Graph& g, const std::vector<int>& c) { return is_proper_coloring(g, c); });
    m.def("greedy_color_count", &greedy_color_count);

    m.def(
        "planted_vectors",
        [](const Graph& g, const std::vector<int>& coloring) {
            return extract_vector3(*planted_sos(g, coloring)).vectors;
        },
        "Strict vector 3-coloring of the symmetrized planted coloring (rows).");
    m.def(
        "solve_sdp",
        [](const Graph& g, double kappa, double tol, int max_iter, std::uint64_t seed) {
            SdpResult r = solve_vector_coloring_sdp(g, kappa, tol, max_iter, seed);
            py::dict d;
            d["vectors"] = r.vectors;
            d["max_edge_violation"] = r.max_edge_violation;
            d["converged"] = r.converged;
            d["iters"] = r.iters;
            return d;
        },
        py::arg("graph"), py::arg("kappa") = 3.0, py::arg("tol") = 1e-7, py::arg("max_iter") = 5000,
        py::arg("seed") = 0);

    m.def("kms_threshold", [](double kappa, int delta) { return kms_threshold(kappa, delta).t; });
    m.def("inefficient_threshold", [](double c, int delta) { return inefficient_threshold(c, delta).t; });
    m.def(
        "kms_round",
        [](const Graph& g, const Eigen::MatrixXd& v, double kappa, std::uint64_t seed) {
            return rounding_dict(kms_round(g, vc_of(v, kappa), kappa, seed));
        },
        py::arg("graph"), py::arg("vectors"), py::arg("kappa") = 3.0, py::arg("seed") = 1);
    m.def(
        "kms_prime_round",
        [](const Graph& g, const Eigen::MatrixXd& v, double t, std::uint64_t seed) {
            return rounding_dict(kms_prime_round(g, vc_of(v, 3.0), t, seed));
        },
        py::arg("graph"), py::arg("vectors"), py::arg("t"), py::arg("seed") = 1);

    m.def(
        "estimate_cover_prob",
        [](const Eigen::MatrixXd& X, double s, long samples, std::uint64_t seed) {
            Estimate e = estimate_cover_prob(X, s, samples, seed).delta;
            return py::make_tuple(e.p, e.lo, e.hi);
        },
        py::arg("X"), py::arg("s"), py::arg("samples") = 10000, py::arg("seed") = 1,
        "Returns (estimate, lo, hi) with a 95% Wilson interval.");

    m.def("tail", &gauss::tail);
    m.def("quantile", &gauss::quantile);

    m.def(
        "exponents",
        [](double c, double c_prime) {
            params::ParamPoint p = params::exponents(c, c_prime);
            py::dict d;
            d["eta0"] = p.eta0;
            d["lambda0"] = p.lambda0;
            d["f_n"] = p.f_n;
            d["g_n"] = p.g_n;
            d["min"] = p.n_exponent;
            d["coloring_exponent"] = p.coloring_exponent;
            d["target"] = p.target;
            return d;
        },
        py::arg("c") = params::kDefaultC, py::arg("c_prime") = params::kDefaultCPrime);

    m.def(
        "color_graph",
        [](const Graph& g, std::optional<std::vector<int>> planted, std::uint64_t seed) {
            ColorConfig cfg;
            cfg.seed = seed;
            ColorResult r = color_graph(g, cfg, planted);
            py::dict d;
            d["colors"] = r.colors;
            d["coloring"] = r.assignment.color;
            d["events"] = r.events.size();
            return d;
        },
        py::arg("graph"), py::arg("planted") = py::none(), py::arg("seed") = 1);
}
