// pybind11 bindings for the main library operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsat/bounds.hpp"
#include "qsat/constructions.hpp"
#include "qsat/hypercube.hpp"
#include "qsat/saturation.hpp"
#include "qsat/trees.hpp"

namespace py = pybind11;

namespace {

py::dict report_dict(const qsat::BoundReport& r) {
    py::dict d;
    d["tree"] = r.tree;
    d["method"] = r.method;
    d["n"] = r.n;
    d["base_dim"] = r.base_dim;
    d["status"] = r.status;
    d["edges"] = r.edges;
    d["formula"] = r.formula.str();
    d["proof_count"] = r.proof_count ? py::object(py::str(r.proof_count->str()))
                                     : py::object(py::none());
    d["verified"] = r.verified ? py::object(py::bool_(*r.verified)) : py::object(py::none());
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qsat, m) {
    m.doc() = "tree-saturated subgraphs of hypercubes";

    py::class_<qsat::CubeSubgraph>(m, "CubeSubgraph")
        .def(py::init<int>(), py::arg("dim"))
        .def_property_readonly("dim", &qsat::CubeSubgraph::dim)
        .def("has_edge", &qsat::CubeSubgraph::has_edge)
        .def("add_edge", &qsat::CubeSubgraph::add_edge)
        .def("remove_edge", &qsat::CubeSubgraph::remove_edge)
        .def("degree", &qsat::CubeSubgraph::degree)
        .def("edge_count", &qsat::CubeSubgraph::edge_count)
        .def("edges", &qsat::CubeSubgraph::edges)
        .def("non_edges", &qsat::CubeSubgraph::non_edges);

    m.def("full_cube", &qsat::full_cube, py::arg("dim"));
    m.def("to_edge_list", &qsat::to_edge_list);
    m.def("from_edge_list", &qsat::from_edge_list);

    py::class_<qsat::Tree>(m, "Tree")
        .def_property_readonly("order", &qsat::Tree::order)
        .def_property_readonly("edge_count", &qsat::Tree::edge_count)
        .def("edges", &qsat::Tree::edges);
    m.def("parse_tree", &qsat::parse_tree, py::arg("literal"));

    m.def("contains_tree", &qsat::contains_tree);

    m.def(
        "is_saturated",
        [](const qsat::CubeSubgraph& h, const qsat::Tree& t) {
            qsat::SaturationReport r = qsat::is_saturated(h, t);
            py::dict d;
            d["free"] = r.free;
            d["saturated"] = r.saturated;
            d["edges"] = r.edges;
            d["failing_edges"] = r.failing_edges;
            d["witness"] = r.witness ? py::object(py::cast(*r.witness)) : py::object(py::none());
            return d;
        },
        py::arg("graph"), py::arg("tree"));

    m.def(
        "lower_bound",
        [](const qsat::Tree& t, int n) {
            qsat::Rational r = qsat::lower_bound(t, n);
            return py::make_tuple(r.num, r.den);
        },
        py::arg("tree"), py::arg("n"));

    m.def(
        "construct",
        [](const std::string& literal, int n, const std::string& method) {
            for (auto& c : qsat::applicable_constructions(literal, n)) {
                if (method == "auto" ? !c.graph.has_value() : c.report.method != method) continue;
                py::object g =
                    c.graph ? py::object(py::cast(*c.graph)) : py::object(py::none());
                return py::make_tuple(g, report_dict(c.report));
            }
            throw qsat::error("no applicable construction for " + literal);
        },
        py::arg("literal"), py::arg("n"), py::arg("method") = "auto");
}
