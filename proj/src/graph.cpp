// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vertexlearn/enumerate.hpp"
#include "vertexlearn/rng.hpp"

namespace vertexlearn {

Graph::Graph(int order) : n_(order) {
    if (order < 1) throw RangeError("graph order must be positive");
    adj_.assign(static_cast<std::size_t>(order) + 1, VertexSet(order));
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int order) {
    Graph g(order);
    for (int u = 1; u <= order; ++u)
        for (int v = u + 1; v <= order; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::random(int order, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw RangeError("edge probability must be in [0,1]");
    Graph g(order);
    SplitMix64 rng(seed);
    for (int u = 1; u <= order; ++u)
        for (int v = u + 1; v <= order; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw RangeError("edge endpoint outside {1.." + std::to_string(n_) + "}");
    if (u == v) throw ContractError("self-loops are not allowed");
}

bool Graph::has_edge(int u, int v) const {
    check_pair(u, v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    if (!adj_[static_cast<std::size_t>(u)].contains(v)) {
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
        ++edge_count_;
    }
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    if (adj_[static_cast<std::size_t>(u)].contains(v)) {
        adj_[static_cast<std::size_t>(u)].erase(v);
        adj_[static_cast<std::size_t>(v)].erase(u);
        --edge_count_;
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 1; u <= n_; ++u)
        for (int v = adj_[static_cast<std::size_t>(u)].next_member(u); v != 0;
             v = adj_[static_cast<std::size_t>(u)].next_member(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet Graph::open_neighborhood(int x) const {
    if (x < 1 || x > n_) throw RangeError("vertex outside {1.." + std::to_string(n_) + "}");
    return adj_[static_cast<std::size_t>(x)];
}

VertexSet Graph::closed_neighborhood(int x) const {
    VertexSet s = open_neighborhood(x);
    s.insert(x);
    return s;
}

Graph Graph::parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty graph file");
    int n = 0;
    {
        std::istringstream ls(line);
        std::string tail;
        if (!(ls >> n) || (ls >> tail)) throw ParseError("first line must be the vertex count");
        if (n < 1) throw ParseError("vertex count must be positive");
    }
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u = 0, v = 0;
        std::string tail;
        if (!(ls >> u >> v) || (ls >> tail)) throw ParseError("edge line must be 'u v': " + line);
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge endpoint out of range: " + line);
        if (u >= v) throw ParseError("edges must satisfy u < v: " + line);
        if (!seen.insert({u, v}).second) throw ParseError("duplicate edge: " + line);
        g.add_edge(u, v);
    }
    return g;
}

std::string Graph::to_text() const {
    std::string out = std::to_string(n_) + "\n";
    for (auto [u, v] : edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {
void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw ContractError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                            std::to_string(g.order()));
}
}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    VertexSet outside = s.complement();
    for (int u = outside.first_member(); u != 0; u = outside.next_member(u))
        if (g.open_neighborhood(u).intersects(outside)) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    for (int u = s.first_member(); u != 0; u = s.next_member(u))
        if (g.open_neighborhood(u).intersects(s)) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    for (int x = 1; x <= g.order(); ++x)
        if (!s.contains(x) && !g.open_neighborhood(x).intersects(s)) return false;
    return true;
}

std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g, int limit) {
    if (g.order() > limit)
        throw CapacityError("minimal cover enumeration capped at " + std::to_string(limit) + " vertices");
    std::vector<VertexSet> found;
    // Ascending cardinality: a cover is minimal iff no smaller cover sits inside it.
    for_each_subset(g.order(), EnumOrder::SizeLexAsc, -1, 0, [&](const VertexSet& s) {
        if (!is_vertex_cover(g, s)) return true;
        for (const auto& m : found)
            if (m.is_subset_of(s)) return true;
        found.push_back(s);
        return true;
    });
    std::sort(found.begin(), found.end(), VertexSetLex{});
    return found;
}

int vertex_cover_number(const Graph& g, int limit) {
    if (g.order() > limit)
        throw CapacityError("vertex cover number capped at " + std::to_string(limit) + " vertices");
    int best = g.order();
    for_each_subset(g.order(), EnumOrder::SizeLexAsc, -1, 0, [&](const VertexSet& s) {
        if (is_vertex_cover(g, s)) {
            best = s.size();
            return false;
        }
        return true;
    });
    return best;
}

std::vector<VertexSet> minimal_closed_neighborhoods(const Graph& g) {
    std::vector<VertexSet> family;
    family.reserve(static_cast<std::size_t>(g.order()));
    for (int x = 1; x <= g.order(); ++x) family.push_back(g.closed_neighborhood(x));
    return inclusion_minimal(std::move(family));
}

}  // namespace vertexlearn
