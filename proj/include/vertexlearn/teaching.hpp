// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "vertexlearn/concepts.hpp"
#include "vertexlearn/wire.hpp"

namespace vertexlearn {

/// Positive and negative example sets handed to a consistent learner.
struct ExampleSet {
    int n = 0;
    std::vector<VertexSet> positives;
    std::vector<VertexSet> negatives;

    /// Validates disjointness and universes; sorts both sides lex.
    static ExampleSet make(int n, std::vector<VertexSet> positives, std::vector<VertexSet> negatives);

    Json to_json() const;
    static ExampleSet from_json(const Json& j);
};

/// For every pair {u,v}: the example V - {u,v}, negative when uv is an edge.
/// Exactly C(n,2) examples; any consistent graph equals G.
ExampleSet teaching_set_vc(const Graph& g);

/// For every pair {u,v}: the example {u,v}, negative when uv is an edge.
ExampleSet teaching_set_is(const Graph& g);

/// Some graph consistent with the examples. Full pair-shaped vertex-cover /
/// independent-set example sets are read off directly at any order; otherwise
/// the first consistent graph in edge-mask order (so the edgeless graph when
/// everything is vacuous), capped at `exhaustive_limit` vertices.
Graph consistent_hypothesis(const Concept& c, const ExampleSet& examples, int exhaustive_limit = 5);

/// The graph in which uv is an edge iff u or v lies outside `missing`: every
/// k-set other than `missing` gains an internal edge, while `missing` stays
/// independent. Witnesses that negatives short of all k-sets cannot teach the
/// k-independent-sets of the complete graph.
Graph adversarial_consistent_graph(int n, int k, const std::vector<VertexSet>& negatives, const VertexSet& missing);

/// True iff every graph consistent with the examples is concept-equivalent to
/// g. Exhaustive over all graphs for n <= 5; 10^4 seeded random graphs for
/// n <= 8; capacity error beyond.
bool verify_teaching_set(const Graph& g, const Concept& c, const ExampleSet& examples, std::uint64_t seed = 0);

}  // namespace vertexlearn
