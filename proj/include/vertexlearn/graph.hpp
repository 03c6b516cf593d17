// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vertexlearn/vertexset.hpp"

namespace vertexlearn {

/// A labeled simple graph on {1..n}. No self-loops; edges are stored
/// order-normalized (u < v) and at most once.
class Graph {
  public:
    explicit Graph(int order);
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    static Graph complete(int order);
    /// Each pair is an edge independently with probability p; deterministic in seed.
    static Graph random(int order, double p, std::uint64_t seed);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Canonical edge list: pairs (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet open_neighborhood(int x) const;
    VertexSet closed_neighborhood(int x) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    /// Text format: first line n, then one edge "u v" (u < v) per line, LF-terminated.
    static Graph parse_text(const std::string& text);
    std::string to_text() const;

  private:
    void check_pair(int u, int v) const;

    int n_;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;  // 1-indexed; adj_[0] unused
};

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& s);

/// All inclusion-minimal vertex covers, lex-sorted. Exhaustive subset search in
/// ascending cardinality with subsumption filtering; capped at `limit` vertices.
std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g, int limit = 16);

/// Minimum cardinality over all vertex covers.
int vertex_cover_number(const Graph& g, int limit = 16);

/// Inclusion-minimal members of { closed_neighborhood(x) : x in {1..n} }.
/// A set dominates iff it intersects every member of this family.
std::vector<VertexSet> minimal_closed_neighborhoods(const Graph& g);

}  // namespace vertexlearn
