#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/combinatorics.hpp"
#include "pathhom/grid_counts.hpp"
#include "pathhom/lattice.hpp"
#include "pathhom/oracle.hpp"
#include "pathhom/path_counts.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Counts cross the boundary as native python ints, via decimal strings, so
// arbitrary precision survives.
template <>
struct type_caster<pathhom::Count> {
    PYBIND11_TYPE_CASTER(pathhom::Count, const_name("int"));

    bool load(handle src, bool) {
        PyObject* index = PyNumber_Index(src.ptr());
        if (!index) {
            PyErr_Clear();
            return false;
        }
        object str = reinterpret_steal<object>(PyObject_Str(index));
        Py_DECREF(index);
        if (!str) return false;
        value = pathhom::Count(str.cast<std::string>());
        return true;
    }

    static handle cast(const pathhom::Count& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using pathhom::Count;
using std::int64_t;

Count py_path_walk_dp(int64_t m, int64_t n, std::optional<int64_t> j, bool allow_stay) {
    return pathhom::path_walk_dp(pathhom::PathQuery{m, n, j}, allow_stay);
}

std::vector<std::pair<int64_t, int64_t>> py_anchor_orbit(int64_t n, int64_t k,
                                                         int64_t i, int64_t j) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (const auto& a : pathhom::anchor_orbit(n, k, i, j)) out.emplace_back(a.i, a.j);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact counts of homomorphisms and weak homomorphisms from paths "
              "into paths and rectangular grid graphs";

    m.def("binomial", &pathhom::binomial, py::arg("n"), py::arg("k"),
          "C(n,k); 0 outside the classical domain");
    m.def("multinomial3", &pathhom::multinomial3, py::arg("a"), py::arg("b"),
          py::arg("c"), "(a+b+c)!/(a!b!c!); 0 when any argument is negative");

    m.def(
        "shortest_path_count",
        [](int64_t i, int64_t j, int64_t k) {
            return pathhom::shortest_path_count({i, j, k});
        },
        py::arg("i"), py::arg("j"), py::arg("k"),
        "Monotone shortest paths from the origin to (i,j,k) in the cubic lattice");
    m.def(
        "ladder_shortest_path_count",
        [](int64_t r, int64_t i, int64_t j, int64_t k) {
            return pathhom::ladder_shortest_path_count(r, {i, j, k});
        },
        py::arg("r"), py::arg("i"), py::arg("j"), py::arg("k"),
        "Shortest paths to (i,j,k) staying inside the r-ladder region j - i <= r");

    m.def("hom_anchored",
          py::overload_cast<int64_t, int64_t, int64_t>(&pathhom::hom_anchored),
          py::arg("m"), py::arg("n"), py::arg("j"),
          "Homomorphisms P_m -> P_n with vertex 0 mapped to j");
    m.def("hom_anchored_reduced",
          py::overload_cast<int64_t, int64_t, int64_t>(&pathhom::hom_anchored_reduced),
          py::arg("m"), py::arg("n"), py::arg("j"),
          "Same count by the reduced closed form; requires m <= n");
    m.def("whom_anchored_closed",
          py::overload_cast<int64_t, int64_t, int64_t>(&pathhom::whom_anchored_closed),
          py::arg("m"), py::arg("n"), py::arg("j"),
          "Weak homomorphisms P_m -> P_n anchored at j, closed form; requires m <= n");
    m.def("whom_anchored",
          py::overload_cast<int64_t, int64_t, int64_t>(&pathhom::whom_anchored),
          py::arg("m"), py::arg("n"), py::arg("j"),
          "Weak homomorphisms P_m -> P_n anchored at j, any m and n");
    m.def("path_walk_dp", &py_path_walk_dp, py::arg("m"), py::arg("n"),
          py::arg("j") = py::none(), py::arg("allow_stay") = true,
          "Transfer-matrix walk counter on P_n (anchored at j, or summed)");
    m.def("hom_total", &pathhom::hom_total, py::arg("m"), py::arg("n"),
          "Homomorphisms P_m -> P_n over all anchors");
    m.def("whom_total", &pathhom::whom_total, py::arg("m"), py::arg("n"),
          "Weak homomorphisms P_m -> P_n over all anchors");

    m.def(
        "whom_grid_anchored",
        [](int64_t m_, int64_t n, int64_t k, int64_t i, int64_t j) {
            return pathhom::whom_grid_anchored(m_, n, k, i, j);
        },
        py::arg("m"), py::arg("n"), py::arg("k"), py::arg("i"), py::arg("j"),
        "Weak homomorphisms P_m -> P_n x P_k with vertex 0 mapped to (i,j)");
    m.def("whom_grid_total", &pathhom::whom_grid_total, py::arg("m"), py::arg("n"),
          py::arg("k"), "Weak homomorphisms P_m -> P_n x P_k over all anchors");
    m.def("anchor_orbit", &py_anchor_orbit, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("j"),
          "Orbit of the anchor (i,j) under the two grid reflections, sorted");

    py::class_<pathhom::SimpleGraph>(m, "SimpleGraph",
                                     "Undirected loop-free graph on 0..order-1")
        .def(py::init<int64_t>(), py::arg("order"))
        .def("add_edge", &pathhom::SimpleGraph::add_edge, py::arg("u"), py::arg("v"))
        .def("order", &pathhom::SimpleGraph::order)
        .def("edge_count", &pathhom::SimpleGraph::edge_count)
        .def("neighbors", &pathhom::SimpleGraph::neighbors, py::arg("v"))
        .def("adjacent", &pathhom::SimpleGraph::adjacent, py::arg("u"), py::arg("v"));

    m.def("path_graph", &pathhom::path_graph, py::arg("n"), "The path P_n");
    m.def("cartesian_product", &pathhom::cartesian_product, py::arg("g1"),
          py::arg("g2"), "Cartesian product; (a,u) encoded as a*order(g2)+u");
    m.def("brute_force_count", &pathhom::brute_force_count, py::arg("m"), py::arg("g"),
          py::arg("anchor") = py::none(), py::arg("weak") = true,
          "Exhaustive count of (weak) homomorphisms from P_m into g");
    m.def("dp_walk_count", &pathhom::dp_walk_count, py::arg("m"), py::arg("g"),
          py::arg("anchor") = py::none(), py::arg("weak") = true,
          "Same contract as brute_force_count, in O(m*|E|)");
}
