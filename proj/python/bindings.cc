#include <kconpath/connectivity.hh>
#include <kconpath/generators.hh>
#include <kconpath/graph_io.hh>
#include <kconpath/oracle.hh>
#include <kconpath/removable_path.hh>
#include <kconpath/serialize.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kconpath;

namespace
{
    auto path_list(const std::vector<VertexPath> & paths) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        for (auto & p : paths)
            out.push_back(p.vertices);
        return out;
    }

    auto event_dict(const SurgeryEvent & e) -> py::dict
    {
        py::dict d;
        d["kind"] = e.kind;
        d["depth"] = e.depth;
        d["path_order"] = e.path_order;
        d["cut"] = e.cut;
        d["fragment"] = e.fragment;
        d["pivot"] = e.pivot ? py::cast(*e.pivot) : py::none();
        d["entry"] = e.entry ? py::cast(*e.entry) : py::none();
        d["transfer_mode"] = e.transfer_mode;
        d["transfer_holds"] = e.transfer_holds;
        return d;
    }

    auto pair_class_name(PairClass c) -> std::string
    {
        switch (c) {
        case PairClass::member: return "member";
        case PairClass::member_strong: return "member_strong";
        default: return "not_member";
        }
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Connectivity-keeping paths in k-connected bipartite graphs";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const VertexSet & vertices, const std::vector<Edge> & edges) {
            return Graph(sets::make(vertices), edges);
        }),
            py::arg("vertices"), py::arg("edges"))
        .def_static("from_edges", [](int n, const std::vector<Edge> & edges) { return build_graph(n, edges); }, py::arg("n"),
            py::arg("edges"))
        .def_property_readonly("vertices", &Graph::vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("neighbours", &Graph::neighbours)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("min_degree", [](const Graph & g) { return min_degree(g); })
        .def("is_bipartite", [](const Graph & g) { return bipartition(g).has_value(); })
        .def("remove", [](const Graph & g, const VertexSet & s) { return remove(g, sets::make(s)); })
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) {
            return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("read_graph6", [](const std::string & s) { return read_graph6(s); });
    m.def("write_graph6", &write_graph6);

    m.def("vertex_connectivity", [](const Graph & g) {
        auto r = vertex_connectivity(g);
        return py::make_tuple(r.kappa, r.witness_cut ? py::cast(*r.witness_cut) : py::none());
    }, "kappa and a minimum vertex cut (None for complete graphs)");
    m.def("is_k_connected", &is_k_connected);
    m.def("minimum_cuts", [](const Graph & g, std::size_t cap) {
        auto r = minimum_cuts(g, cap);
        return py::make_tuple(r.cuts, r.complete);
    }, py::arg("g"), py::arg("cap") = default_cut_cap);
    m.def("exhaustive_connectivity", &exhaustive_connectivity);

    py::class_<AnchoredPair>(m, "AnchoredPair")
        .def(py::init([](const Graph & g, const VertexSet & c, int k, int mm) { return AnchoredPair{g, sets::make(c), k, mm}; }),
            py::arg("graph"), py::arg("clique"), py::arg("k"), py::arg("m"))
        .def_readonly("graph", &AnchoredPair::graph)
        .def_readonly("clique", &AnchoredPair::clique)
        .def_readonly("k", &AnchoredPair::k)
        .def_readonly("m", &AnchoredPair::m);

    m.def("classify_pair", [](const AnchoredPair & p) {
        auto c = classify_pair(p);
        return py::make_tuple(pair_class_name(c.kind), c.violated);
    });

    py::class_<PathCertificate>(m, "PathCertificate")
        .def_readonly("k", &PathCertificate::k)
        .def_readonly("m", &PathCertificate::m)
        .def_property_readonly("path", [](const PathCertificate & c) { return c.path.vertices; })
        .def_readonly("residual_kappa", &PathCertificate::residual_kappa)
        .def_property_readonly("trace", [](const PathCertificate & c) {
            py::list out;
            for (auto & e : c.trace)
                out.append(event_dict(e));
            return out;
        });

    m.def("find_removable_path", [](const Graph & g, int k, int mm, std::size_t cap) {
        py::gil_scoped_release release;
        return find_removable_path(g, k, mm, SearchOptions{cap});
    }, py::arg("g"), py::arg("k"), py::arg("m"), py::arg("cap") = default_cut_cap);
    m.def("find_anchored_path", [](const AnchoredPair & p, Vertex p0, std::size_t cap) {
        py::gil_scoped_release release;
        return find_anchored_path(p, p0, SearchOptions{cap});
    }, py::arg("pair"), py::arg("p0"), py::arg("cap") = default_cut_cap);

    m.def("verify_certificate", [](const Graph & g, int k, const PathCertificate & c) {
        auto r = verify_certificate(g, k, c);
        return py::make_tuple(r.ok, r.failure);
    });
    m.def("certificate_to_json", [](const PathCertificate & c, const Graph & g) { return certificate_to_json(c, g).dump(); });
    m.def("certificate_from_json", [](const std::string & text) { return certificate_from_json(Json::parse(text)); });

    m.def("brute_force_paths", [](const Graph & g, int k, int mm, bool guard_override) {
        OracleGuard guard;
        guard.override = guard_override;
        auto r = brute_force_paths(g, k, mm, unlimited, guard);
        return py::make_tuple(r.hypothesis_ok, path_list(r.witness_paths));
    }, py::arg("g"), py::arg("k"), py::arg("m"), py::arg("guard_override") = false);
    m.def("tree_removal_exists", [](const Graph & g, int k, const Graph & t) { return tree_removal_exists(g, k, t); });

    m.def("complete_bipartite", &complete_bipartite);
    m.def("extremal_completion", &extremal_completion);
    m.def("sharpness_instance", &sharpness_instance);
    m.def("random_k_connected_bipartite", [](int nx, int ny, int k, int dmin, std::uint64_t seed) {
        return random_k_connected_bipartite(nx, ny, k, dmin, seed);
    });
    m.def("random_tree", [](int n, std::uint64_t seed) {
        auto r = random_tree(n, seed);
        return py::make_tuple(r.tree, r.t);
    });
}
