#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "intlap/chordal.hpp"
#include "intlap/clusters.hpp"
#include "intlap/errors.hpp"
#include "intlap/generators.hpp"
#include "intlap/graph.hpp"
#include "intlap/report.hpp"
#include "intlap/spectral.hpp"
#include "intlap/strictly_chordal.hpp"
#include "intlap/twins.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

intlap::Graph graph_from_edges(std::size_t n, const std::vector<intlap::Edge>& edges,
                               std::vector<std::string> labels) {
  return intlap::Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace

PYBIND11_MODULE(_intlap, m) {
  m.doc() = R"pbdoc(
        Integer Laplacian eigenvalues from graph structure
        --------------------------------------------------
        Twin classes, chordal clique trees, strictly chordal structural
        spectra, and exact/numeric Laplacian spectra.
    )pbdoc";

  py::register_exception<intlap::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<intlap::HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<intlap::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<intlap::Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), "n"_a, "edges"_a,
           "labels"_a = std::vector<std::string>{})
      .def_static("parse", [](const std::string& text) { return intlap::parse_edge_list(text); },
                  "text"_a)
      .def_property_readonly("n", &intlap::Graph::n)
      .def_property_readonly("m", &intlap::Graph::m)
      .def_property_readonly("labels", &intlap::Graph::labels)
      .def("degree", &intlap::Graph::degree, "v"_a)
      .def("neighbors",
           [](const intlap::Graph& g, intlap::Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<intlap::Vertex>(nb.begin(), nb.end());
           },
           "v"_a)
      .def("label", &intlap::Graph::label, "v"_a)
      .def("find", &intlap::Graph::find, "label"_a)
      .def("edges", &intlap::Graph::edges)
      .def("to_edge_list", [](const intlap::Graph& g) { return intlap::to_edge_list(g); })
      .def("__repr__", [](const intlap::Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def("parse_edge_list", [](const std::string& text) { return intlap::parse_edge_list(text); },
        "text"_a);
  m.def("is_connected", &intlap::is_connected, "g"_a);

  m.def("fixture", [](const std::string& name) { return intlap::fixture(name); }, "name"_a);
  m.def("gen_block_graph", &intlap::gen_block_graph, "seed"_a, "blocks"_a, "max_block_size"_a);
  m.def("expand_true_twins", &intlap::expand_true_twins, "g"_a, "seed"_a, "max_copies"_a);
  m.def("gen_strictly_chordal", &intlap::gen_strictly_chordal, "seed"_a, "blocks"_a,
        "max_block_size"_a, "max_copies"_a);
  m.def("gen_random_chordal", &intlap::gen_random_chordal, "seed"_a, "n"_a, "p"_a);
  m.def("gen_random_connected", &intlap::gen_random_connected, "seed"_a, "n"_a, "p"_a);

  py::class_<intlap::TwinClass>(m, "TwinClass")
      .def_readonly("members", &intlap::TwinClass::members)
      .def_readonly("degree", &intlap::TwinClass::degree);
  py::class_<intlap::TwinPartition>(m, "TwinPartition")
      .def_readonly("false_classes", &intlap::TwinPartition::false_classes)
      .def_readonly("true_classes", &intlap::TwinPartition::true_classes)
      .def_readonly("universal", &intlap::TwinPartition::universal);
  m.def("twin_partition", &intlap::twin_partition, "g"_a);

  py::class_<intlap::Separator>(m, "Separator")
      .def_readonly("vertices", &intlap::Separator::vertices)
      .def_readonly("multiplicity", &intlap::Separator::multiplicity);
  py::class_<intlap::CliqueStructure>(m, "CliqueStructure")
      .def_readonly("peo", &intlap::CliqueStructure::peo)
      .def_readonly("cliques", &intlap::CliqueStructure::cliques)
      .def_readonly("separators", &intlap::CliqueStructure::separators)
      .def_property_readonly("simplicial", [](const intlap::CliqueStructure& cs) {
        return std::vector<bool>(cs.simplicial.begin(), cs.simplicial.end());
      });
  py::class_<intlap::ChordalRecognition>(m, "ChordalRecognition")
      .def_readonly("chordal", &intlap::ChordalRecognition::chordal)
      .def_readonly("structure", &intlap::ChordalRecognition::structure)
      .def_readonly("witness_cycle", &intlap::ChordalRecognition::witness_cycle);
  m.def("recognize_chordal", &intlap::recognize_chordal, "g"_a);
  m.def("boundary_cliques", &intlap::boundary_cliques, "cs"_a);
  m.def("recognize_strictly_chordal", &intlap::recognize_strictly_chordal, "g"_a, "cs"_a);

  py::class_<intlap::BoundaryMember>(m, "BoundaryMember")
      .def_readonly("clique", &intlap::BoundaryMember::clique)
      .def_readonly("clique_size", &intlap::BoundaryMember::clique_size)
      .def_readonly("simplicials", &intlap::BoundaryMember::simplicials);
  py::class_<intlap::BoundaryFamily>(m, "BoundaryFamily")
      .def_readonly("separator_id", &intlap::BoundaryFamily::separator_id)
      .def_readonly("separator", &intlap::BoundaryFamily::separator)
      .def_readonly("cliques", &intlap::BoundaryFamily::cliques)
      .def_readonly("pooled_simplicials", &intlap::BoundaryFamily::pooled_simplicials)
      .def_readonly("false_twin_subset", &intlap::BoundaryFamily::false_twin_subset);
  m.def("boundary_families", &intlap::boundary_families, "cs"_a);
  m.def("uniquely_provided_count", &intlap::uniquely_provided_count, "family"_a);

  py::class_<intlap::SpectralEntry>(m, "SpectralEntry")
      .def_readonly("lambda_", &intlap::SpectralEntry::lambda)
      .def_readonly("multiplicity", &intlap::SpectralEntry::multiplicity)
      .def_property_readonly("provenance",
                             [](const intlap::SpectralEntry& e) {
                               return std::string(intlap::to_string(e.provenance));
                             })
      .def_readonly("anchor", &intlap::SpectralEntry::anchor)
      .def_property_readonly("also", [](const intlap::SpectralEntry& e) {
        std::vector<std::string> out;
        for (auto p : e.also) out.emplace_back(intlap::to_string(p));
        return out;
      });
  py::class_<intlap::StructuralSpectrum>(m, "StructuralSpectrum")
      .def_readonly("entries", &intlap::StructuralSpectrum::entries)
      .def_readonly("partial", &intlap::StructuralSpectrum::partial)
      .def("condensed", [](const intlap::StructuralSpectrum& s) { return intlap::condense(s); });
  m.def("twin_eigenvalues", &intlap::twin_eigenvalues, "g"_a, "partition"_a);
  m.def("structural_pipeline", &intlap::structural_pipeline, "g"_a);

  m.def("integer_multiplicity",
        [](const intlap::Graph& g, std::int64_t lambda) {
          return intlap::integer_multiplicity(intlap::laplacian(g), lambda);
        },
        "g"_a, "lambda_"_a);
  m.def("numeric_spectrum",
        [](const intlap::Graph& g, double tol) {
          return intlap::numeric_spectrum(intlap::laplacian(g), tol);
        },
        "g"_a, "tol"_a = intlap::kDefaultTolerance);
  m.def("format_spectrum", &intlap::format_spectrum, "spectrum"_a,
        "integer_tol"_a = intlap::kIntegerMatchTolerance);

  py::class_<intlap::Cluster>(m, "Cluster")
      .def_readonly("false_twins", &intlap::Cluster::false_twins)
      .def_readonly("neighborhood", &intlap::Cluster::neighborhood);
  m.def("find_clusters", &intlap::find_clusters, "g"_a);

  m.def("analyze",
        [](const intlap::Graph& g, bool json) {
          const auto report = intlap::analyze(g);
          return json ? intlap::to_json(report) : intlap::to_text(report);
        },
        "g"_a, "json"_a = false);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
