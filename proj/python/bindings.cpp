#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kempe/error.hpp"
#include "kempe/families.hpp"
#include "kempe/frozen.hpp"
#include "kempe/graph.hpp"
#include "kempe/hereditary.hpp"
#include "kempe/kempe.hpp"

namespace py = pybind11;
using namespace kempe;

namespace {

std::vector<Vertex> members(const VertexSet& s) { return s.members(); }

py::dict report_dict(const KempeClassReport& r)
{
    py::list classes;
    for (const auto& c : r.classes) {
        classes.append(py::dict(py::arg("size") = c.size, py::arg("representative") = c.representative));
    }
    return py::dict(py::arg("k") = r.k, py::arg("total_colourings") = r.total_colourings,
                    py::arg("classes") = classes, py::arg("cap_hit") = r.cap_hit);
}

} // namespace

PYBIND11_MODULE(_kempe, m)
{
    m.doc() = "Kempe chains, Kempe classes and frozen colourings";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<CertificateRejected>(m, "CertificateRejected", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours", [](const Graph& g, Vertex v) {
            g.check_vertex(v);
            return members(g.neighbours(v));
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Colouring>(m, "Colouring")
        .def(py::init<int, std::vector<Colour>>(), py::arg("k"), py::arg("colours"))
        .def_property_readonly("k", &Colouring::k)
        .def_property_readonly("colours", &Colouring::colours)
        .def("padded", &Colouring::padded)
        .def("__len__", &Colouring::size)
        .def("__getitem__", [](const Colouring& c, std::size_t v) {
            if (v >= c.size()) {
                throw py::index_error();
            }
            return c[static_cast<Vertex>(v)];
        })
        .def("__eq__", [](const Colouring& a, const Colouring& b) { return a == b; })
        .def("__lt__", [](const Colouring& a, const Colouring& b) { return a < b; })
        .def("__repr__", [](const Colouring& c) {
            std::string s = "Colouring(k=" + std::to_string(c.k()) + ", [";
            for (std::size_t i = 0; i < c.size(); ++i) {
                s += (i ? ", " : "") + std::to_string(c[static_cast<Vertex>(i)]);
            }
            return s + "])";
        });

    m.def("complement", &complement);
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<Vertex>& s) { return induced_subgraph(g, s); });
    m.def("connected_components", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& c : connected_components(g)) {
            out.push_back(c.members());
        }
        return out;
    });
    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g); });
    m.def("clique_number", [](const Graph& g) { return clique_number(g); });
    m.def("minimum_colouring", [](const Graph& g) { return minimum_colouring_of(g); });

    m.def("is_proper", &is_proper);
    m.def("partition_of", [](const Colouring& c) { return partition_of(c).classes(); });
    m.def("count_colourings", &count_colourings, py::arg("g"), py::arg("k"), py::arg("cap") = default_colouring_cap);
    m.def("enumerate_colourings", &enumerate_colourings, py::arg("g"), py::arg("k"),
          py::arg("cap") = default_colouring_cap);

    m.def("kempe_chain", [](const Graph& g, const Colouring& c, Vertex v, Colour a, Colour b) {
        return members(kempe_chain(g, c, v, a, b));
    });
    m.def("kempe_swap", &kempe_swap);
    m.def("kempe_neighbours", &kempe_neighbours);
    m.def("are_kempe_equivalent", &are_kempe_equivalent, py::arg("g"), py::arg("c1"), py::arg("c2"),
          py::arg("cap") = default_state_cap);
    m.def("kempe_class_of", &kempe_class_of, py::arg("g"), py::arg("c"), py::arg("cap") = default_state_cap);
    m.def(
        "kempe_classes",
        [](const Graph& g, int k, std::uint64_t cap) { return report_dict(kempe_classes(g, k, cap)); },
        py::arg("g"), py::arg("k"), py::arg("cap") = default_colouring_cap);
    m.def("is_kempe_connected_at", &is_kempe_connected_at, py::arg("g"), py::arg("k"),
          py::arg("cap") = default_colouring_cap);

    m.def("is_frozen", &is_frozen);
    m.def("is_kempe_frozen", &is_kempe_frozen);
    m.def("check_certificate", [](const Graph& g, const Colouring& frozen, const Colouring& witness) {
        const CertificateChecks c = check_certificate(g, frozen, witness);
        return py::dict(py::arg("same_k") = c.same_k, py::arg("frozen_proper") = c.frozen_proper,
                        py::arg("witness_proper") = c.witness_proper,
                        py::arg("frozen_is_kempe_frozen") = c.frozen_is_kempe_frozen,
                        py::arg("partitions_differ") = c.partitions_differ, py::arg("valid") = c.all());
    });
    m.def("validate_certificate", [](const Graph& g, const Colouring& frozen, const Colouring& witness) {
        build_not_kempe_class_certificate(g, frozen, witness);
    });

    m.def(
        "make_family",
        [](const std::string& name, std::optional<int> parameter) {
            FamilyInstance f = make_family(name, parameter);
            py::dict colourings;
            for (const auto& [label, c] : f.colourings) {
                colourings[py::str(label)] = c;
            }
            return py::make_tuple(f.graph, colourings);
        },
        py::arg("name"), py::arg("parameter") = py::none());
    m.def("find_op2k2_candidates", [](const Graph& g, const Colouring& beta, const Colouring& gamma) {
        py::list out;
        for (const auto& c : find_op2k2_candidates(g, beta, gamma)) {
            out.append(py::dict(py::arg("x") = c.x, py::arg("y") = c.y, py::arg("case") = static_cast<int>(c.which),
                                py::arg("no_anticomplete_edge") = c.no_anticomplete_edge,
                                py::arg("preserves_2k2_free") = c.preserves_2k2_free));
        }
        return out;
    });
    m.def("apply_op_2k2", [](const Graph& g, const Colouring& beta, const Colouring& gamma, Vertex x, Vertex y) {
        const Op2K2Result r = apply_op_2k2({g, beta, gamma, x, y});
        return py::make_tuple(r.graph, r.beta_prime, r.gamma_prime, static_cast<int>(r.which));
    });

    m.def("named_graph", &named_graph);
    m.def("contains_induced", [](const Graph& g, const Graph& h) { return contains_induced(g, h); });
    m.def("is_h_free", [](const Graph& g, const Graph& h) { return is_h_free(g, h); });
    m.def("are_isomorphic", &are_isomorphic);
    m.def("small_graph_census", [](int n) {
        const CensusReport r = small_graph_census(n);
        return py::dict(py::arg("n") = r.n, py::arg("total") = r.total_classes, py::arg("group1") = r.group1,
                        py::arg("group2") = r.group2, py::arg("group3") = r.group3,
                        py::arg("group3_members") = r.group3_members);
    });
}
