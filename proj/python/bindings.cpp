#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "workbench/certify.hpp"
#include "workbench/graph_io.hpp"
#include "workbench/json_doc.hpp"
#include "workbench/render.hpp"

namespace py = pybind11;
using namespace wb;

namespace {

py::dict verdict_dict(const ColorVerdict& v) {
    py::dict d;
    d["status"] = v.status == ColorVerdict::Status::Yes ? "yes"
                  : v.status == ColorVerdict::Status::NoComplete ? "no_complete"
                                                                 : "unknown";
    d["nodes"] = v.nodes_explored;
    if (v.coloring) d["coloring"] = v.coloring->assignment;
    return d;
}

}  // namespace

PYBIND11_MODULE(_workbench, m) {
    m.doc() = "exact workbench for frame and box intersection-graph classes";

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return graphs_equal_by_id(a, b); });

    m.def("to_graph6", &to_graph6);
    m.def("from_graph6", &from_graph6);
    m.def("to_edge_list", &to_edge_list);
    m.def("from_edge_list", &from_edge_list);
    m.def("to_dot", &to_dot);

    m.def("triangle_witness", [](const Graph& g) -> py::object {
        auto t = triangle_witness(g);
        if (!t) return py::none();
        return py::make_tuple((*t)[0], (*t)[1], (*t)[2]);
    });
    m.def("wheel_witness", [](const Graph& g) -> py::object {
        auto w = wheel_witness(g);
        if (!w) return py::none();
        py::dict d;
        d["hub"] = w->hub;
        d["cycle"] = w->cycle;
        return d;
    });

    m.def("greedy_coloring", [](const Graph& g, const std::vector<int>& order) {
        Coloring c = greedy_coloring(g, order);
        py::dict d;
        d["assignment"] = c.assignment;
        d["colors_used"] = c.colors_used;
        return d;
    });
    m.def("k_colorable",
          [](const Graph& g, int k, std::uint64_t budget) {
              return verdict_dict(k_colorable(g, k, budget));
          },
          py::arg("g"), py::arg("k"), py::arg("budget") = 50'000'000ULL);
    m.def("chromatic_number",
          [](const Graph& g, std::uint64_t budget) {
              ChromaticResult r = chromatic_number(g, budget);
              py::dict d;
              d["exact"] = r.exact;
              d["lower"] = r.lower;
              d["upper"] = r.upper;
              if (r.coloring) d["coloring"] = r.coloring->assignment;
              d["refutation_nodes"] = r.refutation_nodes;
              return d;
          },
          py::arg("g"), py::arg("budget") = 50'000'000ULL);
    m.def("clique_number", [](const Graph& g) {
        CliqueResult r = clique_number(g);
        py::dict d;
        d["size"] = r.size;
        d["witness"] = r.witness;
        return d;
    });
    m.def("analyze_json", [](const Graph& g, std::uint64_t budget) {
        return analysis_to_json(analyze_graph(g, budget));
    }, py::arg("g"), py::arg("budget") = 50'000'000ULL);

    m.def("burling_counts", [](int level) {
        LevelCounts c = burling_counts(level);
        return py::make_tuple(c.vertices, c.specials);
    });
    m.def("burling_abstract",
          [](int level, int max_level) {
              BurlingLevel lv = burling_abstract(level, max_level);
              py::dict d;
              d["level"] = lv.level;
              d["n"] = lv.graph.vertex_count();
              d["edges"] = lv.graph.edges();
              d["specials"] = lv.specials;
              return d;
          },
          py::arg("level"), py::arg("max_level") = 5);
    m.def("probe_lemma_check", [](int level, const std::vector<int>& assignment) -> py::object {
        BurlingLevel lv = burling_abstract(level);
        Coloring c;
        c.assignment = assignment;
        std::vector<int> distinct = assignment;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        c.colors_used = static_cast<int>(distinct.size());
        auto w = probe_lemma_check(lv, c);
        if (!w) return py::none();
        return py::int_(*w);
    });

    m.def("realize_frames_json", [](int level, int max_level) {
        return frame_family_to_json(realize_frames(level, max_level));
    }, py::arg("level"), py::arg("max_level") = 3);
    m.def("frame_graph_of_json", [](const std::string& text) {
        return frame_graph(frame_family_from_json(text));
    });
    m.def("verify_burling_json", [](const std::string& text) {
        FrameFamily fam = frame_family_from_json(text);
        AxiomReport rep = verify_burling_axioms(fam);
        return axiom_report_to_json(rep, verify_probes(fam));
    });

    m.def("box_graph_of_json", [](const std::string& text) {
        return box_graph(box_family_from_json(text));
    });
    m.def("verify_cbu_json", [](const std::string& text) {
        return cbu_report_to_json(verify_cbu(box_family_from_json(text)));
    });
    m.def("lift_dim_json", [](const std::string& text) {
        return box_family_to_json(lift_dim(box_family_from_json(text)));
    });
    m.def("search_cbu_json",
          [](const Graph& g, int dim, std::uint64_t budget) {
              return search_result_to_json(search_cbu(g, dim, budget));
          },
          py::arg("g"), py::arg("dim"), py::arg("budget") = 200'000'000ULL);

    m.def("certify_theorem1_json",
          [](const Graph& g1, const std::string& g1_boxes_json, const Graph& g2,
             const std::string& g2_frames_json, py::object refute_dim) {
              CertifyOptions opt;
              if (!refute_dim.is_none()) opt.refute_dim = refute_dim.cast<int>();
              CertificateVerdict v =
                  certify_theorem1(g1, box_family_from_json(g1_boxes_json), g2,
                                   frame_family_from_json(g2_frames_json), opt);
              return certificate_to_json(v);
          },
          py::arg("g1"), py::arg("g1_boxes_json"), py::arg("g2"), py::arg("g2_frames_json"),
          py::arg("refute_dim") = py::none());

    m.def("frames_to_svg_json", [](const std::string& text) {
        return frames_to_svg(frame_family_from_json(text));
    });
    m.def("boxes_to_svg_json", [](const std::string& text) {
        return boxes_to_svg(box_family_from_json(text));
    });
}
