#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/complete.hpp"
#include "chromapoly/generators.hpp"
#include "chromapoly/io.hpp"
#include "chromapoly/partitions.hpp"
#include "chromapoly/recursion.hpp"
#include "chromapoly/whitney.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace chromapoly;

namespace {

py::object to_py_int(const BigInt& v) {
    const std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const BigRational& q) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py_int(q.get_num()), to_py_int(q.get_den()));
}

py::list coefficient_list(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coefficients()) out.append(to_py_int(c));
    return out;
}

py::list bigint_list(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py_int(v));
    return out;
}

EdgeSet edge_set_from(const Hypergraph& h, const std::vector<int>& indices) {
    EdgeSet f = 0;
    for (int i : indices) {
        if (i < 0 || i >= h.edge_count())
            throw std::invalid_argument("edge index " + std::to_string(i) + " out of range");
        f |= EdgeSet{1} << i;
    }
    return f;
}

VertexSet vertex_set_from(const Hypergraph& h, const std::vector<int>& vertices) {
    VertexSet w = 0;
    for (int v : vertices) {
        if (v < 0 || v >= h.order())
            throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range");
        w |= VertexSet{1} << v;
    }
    return w;
}

EdgeOrdering ordering_from(py::object spec, int m) {
    if (spec.is_none()) return EdgeOrdering::identity(m);
    return EdgeOrdering(spec.cast<std::vector<int>>());
}

py::list edge_index_sets(const std::vector<EdgeSet>& sets) {
    py::list out;
    for (EdgeSet f : sets) out.append(set_bits(f));
    return out;
}

}  // namespace

PYBIND11_MODULE(_chromapoly, m) {
    m.doc() = "Exact chromatic polynomials of graphs and hypergraphs";

    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "HypergraphParseError", PyExc_ValueError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, const std::vector<std::vector<int>>&>(), "n"_a, "edges"_a)
        .def_property_readonly("n", &Hypergraph::order)
        .def_property_readonly("m", &Hypergraph::edge_count)
        .def("edges",
             [](const Hypergraph& h) {
                 std::vector<std::vector<int>> out;
                 for (int i = 0; i < h.edge_count(); ++i) out.push_back(h.edge_vertices(i));
                 return out;
             })
        .def("is_graph", &Hypergraph::is_graph)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.order()) +
                   ", m=" + std::to_string(h.edge_count()) + ")";
        });

    m.def("parse_hypergraph", [](const std::string& text) { return parse_hypergraph(text); },
          "text"_a);
    m.def("to_text", &to_text, "hypergraph"_a);

    m.def("complete_graph", &complete_graph, "n"_a);
    m.def("complete_hypergraph", &complete_hypergraph, "n"_a, "r"_a);
    m.def("path_graph", &path_graph, "n"_a);

    m.def(
        "components",
        [](const Hypergraph& h, const std::vector<int>& edge_indices) {
            return components(h, edge_set_from(h, edge_indices));
        },
        "hypergraph"_a, "edge_indices"_a,
        "Number of connected components of the spanning subgraph using the given edges.");

    m.def(
        "induced_subgraph",
        [](const Hypergraph& h, const std::vector<int>& vertices) {
            InducedSubgraph sub = induced_subgraph(h, vertex_set_from(h, vertices));
            return py::make_tuple(sub.graph, sub.vertex_map);
        },
        "hypergraph"_a, "vertices"_a,
        "Returns (subgraph, vertex_map) with vertex_map[new] = old.");

    m.def(
        "partitions_meeting_edge",
        [](const Hypergraph& h, int edge_index, int j, int t) {
            py::list out;
            partitions_meeting_edge(h, edge_index, j, t, [&](const VertexPartition& blocks) {
                py::list part;
                for (VertexSet b : blocks) part.append(set_bits(b));
                out.append(part);
            });
            return out;
        },
        "hypergraph"_a, "edge_index"_a, "j"_a, "t"_a,
        "Partitions of the vertices into j blocks with exactly t blocks meeting the edge.");

    m.def(
        "chromatic_bruteforce",
        [](const Hypergraph& h, unsigned long lam, std::uint64_t budget) {
            return to_py_int(chromatic_bruteforce(h, lam, budget));
        },
        "hypergraph"_a, "lam"_a, "max_assignments"_a = kDefaultAssignmentBudget);
    m.def("chromatic_subset_expansion",
          [](const Hypergraph& h) { return coefficient_list(chromatic_subset_expansion(h)); },
          "hypergraph"_a, "Coefficients a_1..a_n as Python integers.");
    m.def("chromatic_deletion_contraction",
          [](const Hypergraph& g) { return coefficient_list(chromatic_deletion_contraction(g)); },
          "graph"_a);
    m.def("interpolate_from_counts",
          [](const Hypergraph& h) { return coefficient_list(interpolate_from_counts(h)); },
          "hypergraph"_a);
    m.def(
        "poly_eval",
        [](const std::vector<std::string>& coefficients, const std::string& x) {
            IntPolynomial p(static_cast<int>(coefficients.size()));
            for (std::size_t i = 0; i < coefficients.size(); ++i)
                p.a(static_cast<int>(i + 1)) = BigInt(coefficients[i]);
            return to_py_int(p.eval(BigInt(x)));
        },
        "coefficients"_a, "x"_a,
        "Evaluate a_1 x + ... + a_n x^n from decimal-string coefficients.");

    m.def(
        "coefficients_recursive",
        [](const Hypergraph& h, py::object pivot) {
            if (pivot.is_none()) return coefficient_list(coefficients_recursive(h));
            return coefficient_list(coefficients_recursive(h, pivot.cast<int>()));
        },
        "hypergraph"_a, "pivot_edge"_a = py::none());
    m.def("a1_recursive", [](const Hypergraph& h) { return to_py_int(a1_recursive(h)); },
          "hypergraph"_a);
    m.def(
        "b_direct",
        [](const Hypergraph& h, int e, int i, int j) { return to_py_int(b_direct(h, e, i, j)); },
        "hypergraph"_a, "edge_index"_a, "i"_a, "j"_a);
    m.def(
        "b_partition",
        [](const Hypergraph& h, int e, int i, int j) { return to_py_int(b_partition(h, e, i, j)); },
        "hypergraph"_a, "edge_index"_a, "i"_a, "j"_a);

    m.def(
        "nbc_counts",
        [](const Hypergraph& g, py::object ordering) {
            NbcCounts counts = nbc_counts(g, ordering_from(ordering, g.edge_count()));
            return py::make_tuple(bigint_list(counts.h), coefficient_list(counts.abar));
        },
        "graph"_a, "ordering"_a = py::none(),
        "Returns (h, abar): NBC counts and the signed coefficients.");
    m.def(
        "broken_cycles",
        [](const Hypergraph& g, py::object ordering) {
            return edge_index_sets(broken_cycles(g, ordering_from(ordering, g.edge_count())));
        },
        "graph"_a, "ordering"_a = py::none());
    m.def(
        "is_broken_cyclic",
        [](const Hypergraph& h, const std::vector<int>& edge_indices, py::object ordering) {
            return is_broken_cyclic(h, ordering_from(ordering, h.edge_count()),
                                    edge_set_from(h, edge_indices));
        },
        "hypergraph"_a, "edge_indices"_a, "ordering"_a = py::none());
    m.def(
        "pruned_expansion",
        [](const Hypergraph& h, const std::string& family, py::object ordering) {
            const EdgeOrdering ord = ordering_from(ordering, h.edge_count());
            BrokenFamily d{ord, {}};
            if (family == "delta") d = delta_cycle_broken_sets(h, ord);
            else if (family == "berge") d = berge_cycle_broken_sets(h, ord);
            else if (family == "maximal") d = enumerate_broken_cyclic(h, ord);
            else if (family != "empty")
                throw std::invalid_argument("family must be empty|delta|berge|maximal");
            PrunedResult res = pruned_expansion_stats(h, d);
            return py::make_tuple(coefficient_list(res.poly), res.subsets_visited);
        },
        "hypergraph"_a, "family"_a = "maximal", "ordering"_a = py::none(),
        "Returns (coefficients, subsets_visited).");

    m.def("a1_complete", [](int r, int n) { return to_py_int(a1_complete(r, n)); }, "r"_a, "n"_a);
    m.def("a1_complete_recursive",
          [](int r, int n) { return to_py_int(a1_complete_recursive(r, n)); }, "r"_a, "n"_a);
    m.def(
        "a1_complete_piecewise",
        [](int r, int n) -> py::object {
            auto v = a1_complete_piecewise(r, n);
            if (!v) return py::none();
            return to_py_int(*v);
        },
        "r"_a, "n"_a);
    m.def(
        "reciprocal_power_sums",
        [](int r, int count) {
            py::list out;
            for (const auto& q : reciprocal_power_sums(r, count).mu) out.append(to_py_fraction(q));
            return out;
        },
        "r"_a, "count"_a, "mu_r(1..count) as fractions.Fraction values.");
    m.def("taylor_roots", &taylor_roots, "r"_a);
    m.def("zemyan_identity_residual",
          [](int r, int mm) { return to_py_int(zemyan_identity_residual(r, mm)); }, "r"_a, "m"_a);
    m.def(
        "log_derivative_series",
        [](int r, int count) {
            py::list out;
            for (const auto& q : log_derivative_series(r, count)) out.append(to_py_fraction(q));
            return out;
        },
        "r"_a, "count"_a);
    m.def("series_check", &series_check, "r"_a, "count"_a);
}
