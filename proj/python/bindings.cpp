// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vertexlearn/session.hpp"
#include "vertexlearn/teaching.hpp"

namespace py = pybind11;
namespace vl = vertexlearn;

namespace {

vl::Concept make_concept(const std::string& name, std::optional<int> k) {
    vl::BaseConcept base;
    if (name == "vc")
        base = vl::BaseConcept::VertexCover;
    else if (name == "is")
        base = vl::BaseConcept::IndependentSet;
    else if (name == "ds")
        base = vl::BaseConcept::DominatingSet;
    else
        throw vl::UsageError("unknown concept: " + name);
    return k ? vl::Concept::exactly(base, *k) : vl::Concept::all(base);
}

vl::VertexSet make_set(int n, const std::vector<int>& members) { return vl::VertexSet::from_members(n, members); }

std::vector<std::vector<int>> as_lists(const std::vector<vl::VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.members());
    return out;
}

std::vector<vl::VertexSet> as_sets(int n, const std::vector<std::vector<int>>& lists) {
    std::vector<vl::VertexSet> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.push_back(make_set(n, l));
    return out;
}

py::object json_to_py(const vl::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict example_set_to_py(const vl::ExampleSet& ex) {
    py::dict d;
    d["n"] = ex.n;
    d["positives"] = as_lists(ex.positives);
    d["negatives"] = as_lists(ex.negatives);
    return d;
}

py::object run_session_py(const std::string& learner, const vl::Graph& secret, const std::string& concept_name,
                          std::optional<int> k, const std::string& policy, std::uint64_t seed, long max_rounds) {
    vl::SessionConfig cfg;
    cfg.target_concept = make_concept(concept_name, k);
    cfg.learner = vl::learner_from_string(learner);
    cfg.policy = {vl::policy_from_string(policy), seed};
    cfg.max_rounds = max_rounds;
    vl::SessionResult result = vl::run_session(cfg, secret);
    py::dict d;
    d["outcome"] = result.transcript.outcome;
    d["equivalence_queries"] = result.transcript.equivalence_count;
    d["membership_queries"] = result.transcript.membership_count;
    d["rounds"] = result.transcript.rounds.size();
    d["hypothesis"] = json_to_py(vl::hypothesis_to_json(result.final_hypothesis));
    d["transcript_jsonl"] = result.transcript.to_jsonl();
    return d;
}

py::object equivalent_py(const std::string& concept_name, std::optional<int> k, const vl::Graph& target,
                         const vl::Graph& hypothesis) {
    auto cex = vl::equivalent(make_concept(concept_name, k), target, vl::Hypothesis::graph_form(hypothesis));
    if (!cex) return py::none();
    return py::make_tuple(cex->polarity == vl::Polarity::Positive ? "positive" : "negative",
                          cex->witness.members());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "learning and teaching vertex-set concepts in graphs";

    // translators run newest-first, so the base goes in before the specific ones
    py::register_exception<vl::Error>(m, "VertexlearnError", PyExc_RuntimeError);
    py::register_exception<vl::CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<vl::ProtocolViolation>(m, "ProtocolViolation", PyExc_RuntimeError);

    py::class_<vl::Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
        .def_static("complete", &vl::Graph::complete, py::arg("n"))
        .def_static("random", &vl::Graph::random, py::arg("n"), py::arg("p"), py::arg("seed"))
        .def_static("parse_text", &vl::Graph::parse_text, py::arg("text"))
        .def_property_readonly("n", &vl::Graph::order)
        .def("order", &vl::Graph::order)
        .def("edge_count", &vl::Graph::edge_count)
        .def("edges", &vl::Graph::edges)
        .def("has_edge", &vl::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("add_edge", &vl::Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("remove_edge", &vl::Graph::remove_edge, py::arg("u"), py::arg("v"))
        .def("to_text", &vl::Graph::to_text)
        .def("open_neighborhood", [](const vl::Graph& g, int x) { return g.open_neighborhood(x).members(); },
             py::arg("x"))
        .def("closed_neighborhood", [](const vl::Graph& g, int x) { return g.closed_neighborhood(x).members(); },
             py::arg("x"))
        .def("__eq__", [](const vl::Graph& a, const vl::Graph& b) { return a == b; })
        .def("__repr__", [](const vl::Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("is_vertex_cover",
          [](const vl::Graph& g, const std::vector<int>& s) { return vl::is_vertex_cover(g, make_set(g.order(), s)); },
          py::arg("graph"), py::arg("vertices"));
    m.def("is_independent_set",
          [](const vl::Graph& g, const std::vector<int>& s) {
              return vl::is_independent_set(g, make_set(g.order(), s));
          },
          py::arg("graph"), py::arg("vertices"));
    m.def("is_dominating_set",
          [](const vl::Graph& g, const std::vector<int>& s) {
              return vl::is_dominating_set(g, make_set(g.order(), s));
          },
          py::arg("graph"), py::arg("vertices"));

    m.def("enumerate_minimal_vertex_covers",
          [](const vl::Graph& g, int limit) { return as_lists(vl::enumerate_minimal_vertex_covers(g, limit)); },
          py::arg("graph"), py::arg("limit") = 16);
    m.def("vertex_cover_number", &vl::vertex_cover_number, py::arg("graph"), py::arg("limit") = 16);
    m.def("minimal_closed_neighborhoods",
          [](const vl::Graph& g) { return as_lists(vl::minimal_closed_neighborhoods(g)); }, py::arg("graph"));

    m.def("solution_set",
          [](const std::string& concept_name, const vl::Graph& g, std::optional<int> k) {
              return as_lists(vl::solution_set(make_concept(concept_name, k), g));
          },
          py::arg("concept"), py::arg("graph"), py::arg("k") = py::none());

    m.def("equivalent", &equivalent_py, py::arg("concept"), py::arg("k"), py::arg("target"), py::arg("hypothesis"),
          "None when equivalent, else (polarity, witness)");

    m.def("teaching_set_vc", [](const vl::Graph& g) { return example_set_to_py(vl::teaching_set_vc(g)); },
          py::arg("graph"));
    m.def("teaching_set_is", [](const vl::Graph& g) { return example_set_to_py(vl::teaching_set_is(g)); },
          py::arg("graph"));
    m.def("verify_teaching_set",
          [](const vl::Graph& g, const std::string& concept_name, std::optional<int> k,
             const std::vector<std::vector<int>>& positives, const std::vector<std::vector<int>>& negatives) {
              vl::ExampleSet ex = vl::ExampleSet::make(g.order(), as_sets(g.order(), positives),
                                                       as_sets(g.order(), negatives));
              return vl::verify_teaching_set(g, make_concept(concept_name, k), ex);
          },
          py::arg("graph"), py::arg("concept"), py::arg("k"), py::arg("positives"), py::arg("negatives"));
    m.def("consistent_hypothesis",
          [](const std::string& concept_name, std::optional<int> k, int n, const std::vector<std::vector<int>>& positives,
             const std::vector<std::vector<int>>& negatives) {
              vl::ExampleSet ex = vl::ExampleSet::make(n, as_sets(n, positives), as_sets(n, negatives));
              return vl::consistent_hypothesis(make_concept(concept_name, k), ex);
          },
          py::arg("concept"), py::arg("k"), py::arg("n"), py::arg("positives"), py::arg("negatives"));
    m.def("adversarial_consistent_graph",
          [](int n, int k, const std::vector<std::vector<int>>& negatives, const std::vector<int>& missing) {
              return vl::adversarial_consistent_graph(n, k, as_sets(n, negatives), make_set(n, missing));
          },
          py::arg("n"), py::arg("k"), py::arg("negatives"), py::arg("missing"));

    m.def("run_session", &run_session_py, py::arg("learner"), py::arg("secret"), py::arg("concept"),
          py::arg("k") = py::none(), py::arg("policy") = "min-card", py::arg("seed") = 0,
          py::arg("max_rounds") = 0,
          "simulate a learner against an in-process teacher; returns a summary dict");

#ifdef VERTEXLEARN_VERSION
    m.attr("__version__") = VERTEXLEARN_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
