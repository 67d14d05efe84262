#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subdiv/coloring.hpp"
#include "subdiv/finder.hpp"
#include "subdiv/generators.hpp"
#include "subdiv/io.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/secant.hpp"

namespace py = pybind11;
using namespace subdiv;

PYBIND11_MODULE(_subdiv, m) {
    m.doc() = "Witness-producing subdivision finders for chromatic digraphs";

    // translators run newest-first, so the base goes in before the others
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<WalkKind>(m, "WalkKind")
        .value("path", WalkKind::path)
        .value("circuit", WalkKind::circuit);
    py::enum_<Sign>(m, "Sign").value("plus", Sign::plus).value("minus", Sign::minus);
    py::enum_<PartitionMode>(m, "PartitionMode")
        .value("reach_target", PartitionMode::reach_target)
        .value("stop_below_target", PartitionMode::stop_below_target);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int>(), py::arg("vertex_count"))
        .def("add_arc", &Digraph::add_arc)
        .def("has_arc", &Digraph::has_arc)
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def("arcs", &Digraph::arcs)
        .def("out_neighbors", &Digraph::out_neighbors)
        .def("in_neighbors", &Digraph::in_neighbors)
        .def("digon_count", &Digraph::digon_count)
        .def("__eq__", &Digraph::operator==);

    py::class_<UnderlyingGraph>(m, "UnderlyingGraph")
        .def(py::init<int>(), py::arg("vertex_count"))
        .def("add_edge", &UnderlyingGraph::add_edge)
        .def("has_edge", &UnderlyingGraph::has_edge)
        .def_property_readonly("vertex_count", &UnderlyingGraph::vertex_count)
        .def_property_readonly("edge_count", &UnderlyingGraph::edge_count)
        .def("edges", &UnderlyingGraph::edges)
        .def("degree", &UnderlyingGraph::degree)
        .def("neighbors", &UnderlyingGraph::neighbors)
        .def("is_complete", &UnderlyingGraph::is_complete)
        .def("__eq__", &UnderlyingGraph::operator==);

    py::class_<Enumeration>(m, "Enumeration")
        .def(py::init<std::vector<Vertex>>(), py::arg("order"))
        .def_static("natural", &Enumeration::natural)
        .def_property_readonly("order", &Enumeration::order)
        .def("index_of", &Enumeration::index_of)
        .def("contains", &Enumeration::contains)
        .def("__len__", &Enumeration::size);

    py::class_<CyclePattern>(m, "CyclePattern")
        .def(py::init<Sign, std::vector<int>>(), py::arg("sign"), py::arg("blocks"))
        .def_static("parse", &CyclePattern::parse)
        .def_property_readonly("sign", &CyclePattern::sign)
        .def_property_readonly("blocks", &CyclePattern::blocks)
        .def_property_readonly("order", &CyclePattern::order)
        .def_property_readonly("block_count", &CyclePattern::block_count)
        .def("is_directed_cycle", &CyclePattern::is_directed_cycle)
        .def("__str__", &CyclePattern::str)
        .def("__eq__", &CyclePattern::operator==);

    py::class_<CanonicalizedPattern>(m, "CanonicalizedPattern")
        .def_readonly("pattern", &CanonicalizedPattern::pattern)
        .def_readonly("reversed", &CanonicalizedPattern::reversed);

    py::class_<HamiltonianWitness>(m, "HamiltonianWitness")
        .def(py::init([](WalkKind kind, std::vector<Vertex> order) {
                 return HamiltonianWitness{kind, std::move(order)};
             }),
             py::arg("kind"), py::arg("order"))
        .def_readwrite("kind", &HamiltonianWitness::kind)
        .def_readwrite("order", &HamiltonianWitness::order);

    py::class_<BlockPath>(m, "BlockPath")
        .def_readonly("vertices", &BlockPath::vertices)
        .def_readonly("forward", &BlockPath::forward)
        .def_property_readonly("length", &BlockPath::length);

    py::class_<SubdivisionWitness>(m, "SubdivisionWitness")
        .def_readonly("pattern", &SubdivisionWitness::pattern)
        .def_readonly("blocks", &SubdivisionWitness::blocks);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init([](std::vector<int> colors, int palette) {
                 return Coloring{std::move(colors), palette};
             }),
             py::arg("colors"), py::arg("palette"))
        .def_readonly("colors", &Coloring::colors)
        .def_readonly("palette", &Coloring::palette);

    py::class_<ChromaticBudget>(m, "ChromaticBudget")
        .def(py::init<>())
        .def_readwrite("max_nodes", &ChromaticBudget::max_nodes)
        .def_readwrite("shortcut_complete", &ChromaticBudget::shortcut_complete);

    py::class_<SecantPair>(m, "SecantPair")
        .def_readonly("first_edge", &SecantPair::first_edge)
        .def_readonly("second_edge", &SecantPair::second_edge)
        .def_readonly("i", &SecantPair::i)
        .def_readonly("r", &SecantPair::r)
        .def_readonly("j", &SecantPair::j)
        .def_readonly("l", &SecantPair::l)
        .def_readonly("k", &SecantPair::k);

    py::class_<Segment>(m, "Segment")
        .def_readonly("vertices", &Segment::vertices)
        .def_readonly("target", &Segment::target)
        .def_readonly("achieved_chi", &Segment::achieved_chi);

    py::class_<SegmentPartition>(m, "SegmentPartition")
        .def_readonly("segments", &SegmentPartition::segments)
        .def_readonly("mode", &SegmentPartition::mode)
        .def_readonly("consumed", &SegmentPartition::consumed);

    py::class_<CaseSelection> case_selection(m, "CaseSelection");
    py::enum_<CaseSelection::Tag>(case_selection, "Tag")
        .value("backward_arc", CaseSelection::Tag::backward_arc)
        .value("both_forward", CaseSelection::Tag::both_forward);
    case_selection.def_readonly("tag", &CaseSelection::tag)
        .def_readonly("u_i", &CaseSelection::u_i)
        .def_readonly("u_r", &CaseSelection::u_r)
        .def_readonly("u_j", &CaseSelection::u_j)
        .def_readonly("u_s", &CaseSelection::u_s)
        .def_readonly("m1", &CaseSelection::m1)
        .def_readonly("m2", &CaseSelection::m2)
        .def_readonly("x", &CaseSelection::x)
        .def_readonly("parity", &CaseSelection::parity);

    py::class_<PathSearchResult>(m, "PathSearchResult")
        .def_readonly("witness", &PathSearchResult::witness)
        .def_readonly("selection", &PathSearchResult::selection);

    py::class_<InducedSubdigraph>(m, "InducedSubdigraph")
        .def_readonly("graph", &InducedSubdigraph::graph)
        .def_readonly("to_host", &InducedSubdigraph::to_host)
        .def_readonly("from_host", &InducedSubdigraph::from_host);

    py::class_<Seed>(m, "Seed").def(py::init<std::uint64_t>(), py::arg("value"));

    py::class_<oracle::SearchLimit>(m, "SearchLimit")
        .def(py::init<>())
        .def_readwrite("max_vertices", &oracle::SearchLimit::max_vertices)
        .def_readwrite("max_steps", &oracle::SearchLimit::max_steps);

    // digraph core
    m.def("underlying", &underlying);
    m.def("induced", &induced);
    m.def("induced_subgraph", &induced_subgraph);
    m.def("verify_hamiltonian", &verify_hamiltonian);
    m.def("subpath", &subpath);
    m.def("canonicalize_pattern", &canonicalize_pattern);

    // coloring
    m.def("is_proper", &is_proper);
    m.def("chromatic_number",
          [](const UnderlyingGraph& g, const ChromaticBudget& b) {
              ChromaticResult r = chromatic_number(g, b);
              return py::make_tuple(r.chi, r.witness);
          },
          py::arg("g"), py::arg("budget") = ChromaticBudget{});
    m.def("chi_at_least", &chi_at_least, py::arg("g"), py::arg("threshold"),
          py::arg("budget") = ChromaticBudget{});
    m.def("product_coloring", &product_coloring);
    m.def("incremental_chromatic", &incremental_chromatic, py::arg("g"), py::arg("prefix"),
          py::arg("budget") = ChromaticBudget{});

    // secant
    m.def("find_k_secant", &find_k_secant);
    m.def("secant_free_coloring", &secant_free_coloring);
    m.def("low_degree_vertex", &low_degree_vertex);

    // subdivision finding
    m.def("partition_segments", &partition_segments, py::arg("d"), py::arg("w"),
          py::arg("targets"), py::arg("mode"), py::arg("budget") = ChromaticBudget{},
          py::arg("merge_leftovers") = false);
    m.def("verify_subdivision", &verify_subdivision);
    m.def("find_in_hamiltonian", &find_in_hamiltonian, py::arg("d"), py::arg("circuit"),
          py::arg("pattern"), py::arg("budget") = ChromaticBudget{});
    m.def("find_with_hamiltonian_path", &find_with_hamiltonian_path, py::arg("d"), py::arg("path"),
          py::arg("pattern"), py::arg("budget") = ChromaticBudget{});

    // oracle
    m.def("oracle_contains_subdivision", &oracle::contains_subdivision, py::arg("d"),
          py::arg("pattern"), py::arg("limit") = oracle::SearchLimit{});
    m.def("oracle_chromatic", &oracle::chromatic_bruteforce, py::arg("g"),
          py::arg("limit") = oracle::SearchLimit{});
    m.def("oracle_find_hamiltonian", &oracle::find_hamiltonian, py::arg("d"), py::arg("kind"),
          py::arg("limit") = oracle::SearchLimit{});

    // generators
    m.def("circulant_tournament", &circulant_tournament);
    m.def("transitive_tournament", &transitive_tournament);
    m.def("random_tournament", &random_tournament);
    m.def("banded_graph", &banded_graph);

    // file formats
    m.def("parse_digraph", &parse_digraph_text);
    m.def("serialize_digraph", &serialize_digraph);
    m.def("parse_hamiltonian", &parse_hamiltonian_text);
    m.def("serialize_hamiltonian", &serialize_hamiltonian);
    m.def("parse_subdivision", &parse_subdivision_text);
    m.def("serialize_subdivision", &serialize_subdivision);
    m.def("parse_coloring", &parse_coloring_text);
    m.def("serialize_coloring", &serialize_coloring);
    m.def("parse_enumeration", &parse_enumeration_text);
    m.def("serialize_enumeration", &serialize_enumeration);
    m.def("serialize_secant", &serialize_secant);
    m.def("parse_secant", &parse_secant_text);
}
