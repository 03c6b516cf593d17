// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/teaching.hpp"

#include <algorithm>
#include <map>

#include "vertexlearn/rng.hpp"

namespace vertexlearn {

ExampleSet ExampleSet::make(int n, std::vector<VertexSet> positives, std::vector<VertexSet> negatives) {
    for (const auto& s : positives)
        if (s.universe() != n) throw ContractError("positive example universe mismatch");
    for (const auto& s : negatives)
        if (s.universe() != n) throw ContractError("negative example universe mismatch");
    std::sort(positives.begin(), positives.end(), VertexSetLex{});
    std::sort(negatives.begin(), negatives.end(), VertexSetLex{});
    for (const auto& p : positives)
        if (std::binary_search(negatives.begin(), negatives.end(), p, VertexSetLex{}))
            throw ContractError("example " + p.to_string() + " is both positive and negative");
    return ExampleSet{n, std::move(positives), std::move(negatives)};
}

Json ExampleSet::to_json() const {
    Json j = Json::object();
    j["n"] = n;
    Json pos = Json::array();
    for (const auto& s : positives) pos.push_back(set_to_json(s));
    Json neg = Json::array();
    for (const auto& s : negatives) neg.push_back(set_to_json(s));
    j["positives"] = std::move(pos);
    j["negatives"] = std::move(neg);
    return j;
}

ExampleSet ExampleSet::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("positives") ||
        !j.contains("negatives"))
        throw ParseError("example set needs 'n', 'positives' and 'negatives'");
    int n = j["n"].get<int>();
    if (n < 1) throw ParseError("example set universe must be positive");
    std::vector<VertexSet> pos, neg;
    for (const auto& e : j["positives"]) pos.push_back(set_from_json(e, n));
    for (const auto& e : j["negatives"]) neg.push_back(set_from_json(e, n));
    try {
        return make(n, std::move(pos), std::move(neg));
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

ExampleSet teaching_set_vc(const Graph& g) {
    std::vector<VertexSet> pos, neg;
    const int n = g.order();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            VertexSet example = VertexSet::of(n, {u, v}).complement();
            (g.has_edge(u, v) ? neg : pos).push_back(example);
        }
    return ExampleSet::make(n, std::move(pos), std::move(neg));
}

ExampleSet teaching_set_is(const Graph& g) {
    std::vector<VertexSet> pos, neg;
    const int n = g.order();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            VertexSet example = VertexSet::of(n, {u, v});
            (g.has_edge(u, v) ? neg : pos).push_back(example);
        }
    return ExampleSet::make(n, std::move(pos), std::move(neg));
}

namespace {

bool consistent_with(const Graph& h, const Concept& c, const ExampleSet& ex) {
    for (const auto& p : ex.positives)
        if (!holds(c, h, p)) return false;
    for (const auto& q : ex.negatives)
        if (holds(c, h, q)) return false;
    return true;
}

// Classify each example as the pair it encodes, when the whole set has the
// pair-per-example teaching shape for this concept.
std::optional<Graph> read_off_pair_shape(const Concept& c, const ExampleSet& ex) {
    if (c.exact_size) return std::nullopt;
    if (c.base != BaseConcept::VertexCover && c.base != BaseConcept::IndependentSet) return std::nullopt;
    const int n = ex.n;
    if (static_cast<std::int64_t>(ex.positives.size()) + static_cast<std::int64_t>(ex.negatives.size()) !=
        binomial(n, 2))
        return std::nullopt;
    Graph g(n);
    std::map<std::pair<int, int>, bool> classified;
    auto classify = [&](const VertexSet& example, bool negative) {
        VertexSet pair = c.base == BaseConcept::VertexCover ? example.complement() : example;
        if (pair.size() != 2) return false;
        auto m = pair.members();
        return classified.emplace(std::make_pair(m[0], m[1]), negative).second;
    };
    for (const auto& p : ex.positives)
        if (!classify(p, false)) return std::nullopt;
    for (const auto& q : ex.negatives)
        if (!classify(q, true)) return std::nullopt;
    for (auto& [pair, negative] : classified)
        if (negative) g.add_edge(pair.first, pair.second);
    if (!consistent_with(g, c, ex)) throw InconsistencyError("no graph is consistent with the examples");
    return g;
}

std::uint64_t max_edge_mask(int n) {
    int pairs = n * (n - 1) / 2;
    return pairs >= 64 ? ~0ULL : (std::uint64_t{1} << pairs) - 1;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if (mask & (std::uint64_t{1} << bit)) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph consistent_hypothesis(const Concept& c, const ExampleSet& ex, int exhaustive_limit) {
    if (ex.n < 1) throw ContractError("example set universe must be positive");
    if (auto direct = read_off_pair_shape(c, ex)) return *direct;
    if (ex.n > exhaustive_limit)
        throw CapacityError("consistency search capped at " + std::to_string(exhaustive_limit) + " vertices");
    for (std::uint64_t mask = 0; mask <= max_edge_mask(ex.n); ++mask) {
        Graph h = graph_from_edge_mask(ex.n, mask);
        if (consistent_with(h, c, ex)) return h;
    }
    throw InconsistencyError("no graph is consistent with the examples");
}

Graph adversarial_consistent_graph(int n, int k, const std::vector<VertexSet>& negatives, const VertexSet& missing) {
    if (k < 2 || k > n) throw ContractError("cardinality must satisfy 2 <= k <= n");
    if (missing.universe() != n || missing.size() != k) throw ContractError("missing set must have cardinality k");
    for (const auto& s : negatives) {
        if (s.universe() != n || s.size() != k) throw ContractError("negatives must be k-subsets");
        if (s == missing) throw ContractError("missing set must not be among the negatives");
    }
    // Every vertex outside `missing` is adjacent to everything else.
    Graph h(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!missing.contains(u) || !missing.contains(v)) h.add_edge(u, v);
    return h;
}

bool verify_teaching_set(const Graph& g, const Concept& c, const ExampleSet& ex, std::uint64_t seed) {
    if (ex.n != g.order()) throw ContractError("example set universe does not match graph order");
    const int n = g.order();
    EnumCaps caps;
    auto equivalent_to_g = [&](const Graph& h) {
        return !equivalent(c, g, Hypothesis::graph_form(h), caps).has_value();
    };
    if (n <= 5) {
        for (std::uint64_t mask = 0;; ++mask) {
            Graph h = graph_from_edge_mask(n, mask);
            if (consistent_with(h, c, ex) && !equivalent_to_g(h)) return false;
            if (mask == max_edge_mask(n)) break;
        }
        return true;
    }
    if (n <= 8) {
        SplitMix64 rng(seed);
        for (int i = 0; i < 10'000; ++i) {
            Graph h = graph_from_edge_mask(n, rng.next() & max_edge_mask(n));
            if (consistent_with(h, c, ex) && !equivalent_to_g(h)) return false;
        }
        return true;
    }
    throw CapacityError("teaching-set verification capped at 8 vertices");
}

}  // namespace vertexlearn
