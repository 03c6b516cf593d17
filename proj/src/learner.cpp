// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/learner.hpp"

#include <algorithm>
#include <set>

namespace vertexlearn {

Graph NonEdgeLedger::hypothesis() const {
    Graph g = Graph::complete(n);
    for (auto [u, v] : deduced) g.remove_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> deduce_non_edges_vc(int n, const VertexSet& cex) {
    if (cex.universe() != n) throw ContractError("counterexample universe mismatch");
    VertexSet outside = cex.complement();
    if (outside.size() < 2)
        throw ProtocolViolation("positive cover counterexample must omit at least two vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = outside.first_member(); u != 0; u = outside.next_member(u))
        for (int v = outside.next_member(u); v != 0; v = outside.next_member(v)) pairs.emplace_back(u, v);
    return pairs;
}

std::vector<std::pair<int, int>> deduce_non_edges_is(const VertexSet& cex) {
    if (cex.size() < 2)
        throw ProtocolViolation("positive independent-set counterexample must contain at least two vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = cex.first_member(); u != 0; u = cex.next_member(u))
        for (int v = cex.next_member(u); v != 0; v = cex.next_member(v)) pairs.emplace_back(u, v);
    return pairs;
}

namespace {

Graph run_edge_elimination_learner(int n, const LearnerCallbacks& teacher, BaseLearner kind) {
    Graph hypothesis = Graph::complete(n);
    // Bounded intrinsically: every accepted counterexample removes an edge.
    while (true) {
        EquivResult reply = teacher.equivalence(Hypothesis::graph_form(hypothesis));
        if (!reply) return hypothesis;
        if (reply->polarity != Polarity::Positive)
            throw ProtocolViolation("hypothesis edges always include the secret's; negative counterexample impossible");
        auto non_edges = kind == BaseLearner::VertexCover ? deduce_non_edges_vc(n, reply->witness)
                                                          : deduce_non_edges_is(reply->witness);
        bool removed = false;
        for (auto [u, v] : non_edges) {
            if (hypothesis.has_edge(u, v)) {
                hypothesis.remove_edge(u, v);
                removed = true;
            }
        }
        if (!removed) throw ProtocolViolation("counterexample eliminated no edge");
    }
}

}  // namespace

Graph run_vc_learner(int n, const LearnerCallbacks& teacher) {
    return run_edge_elimination_learner(n, teacher, BaseLearner::VertexCover);
}

Graph run_is_learner(int n, const LearnerCallbacks& teacher) {
    return run_edge_elimination_learner(n, teacher, BaseLearner::IndependentSet);
}

VertexSet grow_to_maximal_negative(const VertexSet& start, const std::function<bool(const VertexSet&)>& membership) {
    // The empty set never dominates a nonempty graph; anything else gets checked.
    if (!start.empty() && membership(start)) throw ContractError("start set already dominates");
    VertexSet grown = start;
    for (int v = 1; v <= grown.universe(); ++v) {
        if (grown.contains(v)) continue;
        VertexSet candidate = grown;
        candidate.insert(v);
        if (!membership(candidate)) grown = candidate;
    }
    return grown;
}

Hypothesis run_ds_learner(int n, const LearnerCallbacks& teacher) {
    ConstraintFamily family{n, {}};
    while (true) {
        Hypothesis h = family.identified.empty() ? Hypothesis::graph_form(Graph::complete(n))
                                                 : Hypothesis::transversal_form(n, family.identified);
        EquivResult reply = teacher.equivalence(h);
        if (!reply) {
            if (family.identified.empty())
                return Hypothesis::transversal_form(n, {VertexSet::full(n)});
            return h;
        }
        if (reply->polarity != Polarity::Negative)
            throw ProtocolViolation("transversal hypothesis never rejects a true dominating set");
        VertexSet maximal = grow_to_maximal_negative(reply->witness, teacher.membership);
        VertexSet constraint = maximal.complement();
        if (constraint.empty()) throw ProtocolViolation("grown counterexample covers the whole universe");
        if (std::find(family.identified.begin(), family.identified.end(), constraint) != family.identified.end())
            throw ProtocolViolation("counterexample yielded an already-identified neighborhood");
        if (static_cast<int>(family.identified.size()) >= n)
            throw ProtocolViolation("more constraints than vertices");
        family.identified.push_back(constraint);
    }
}

Graph hypothesis_from_cover_list(int n, const std::vector<VertexSet>& list) {
    Graph g(n);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            bool compatible = true;
            for (const auto& cover : list) {
                if (cover.universe() != n) throw ContractError("cover list universe mismatch");
                if (!cover.contains(u) && !cover.contains(v)) {
                    compatible = false;
                    break;
                }
            }
            if (compatible) g.add_edge(u, v);
        }
    }
    return g;
}

namespace {

struct KvcSearch {
    int n;
    int k;
    const LearnerCallbacks& teacher;
    KvcOptions options;
    std::size_t list_limit;  // a secret with a k-cover has at most 2^k minimal covers

    using CoverList = std::vector<VertexSet>;
    struct ListLess {
        bool operator()(const CoverList& a, const CoverList& b) const {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), VertexSetLex{});
        }
    };
    std::set<CoverList, ListLess> visited;

    std::optional<Graph> visit(const CoverList& list) {
        if (options.memoize && !visited.insert(list).second) return std::nullopt;
        Graph h = hypothesis_from_cover_list(n, list);
        EquivResult reply = teacher.equivalence(Hypothesis::graph_form(h));
        if (!reply) return h;
        if (reply->polarity == Polarity::Negative) return std::nullopt;  // some guess was wrong
        const VertexSet& q = reply->witness;
        if (q.size() != k) throw ProtocolViolation("counterexample cardinality differs from k");
        std::vector<int> members = q.members();
        // One child per subset of the counterexample: the guess that this subset
        // is a newly discovered minimal cover. The empty guess forces the edgeless
        // hypothesis and is correct exactly when the secret has no edges; it goes
        // last so that it never inflates runs on secrets with edges.
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << members.size()); ++bits) {
            if (auto won = descend(list, q, bits, members)) return won;
        }
        if (auto won = descend(list, q, 0, members)) return won;
        return std::nullopt;
    }

    std::optional<Graph> descend(const CoverList& list, const VertexSet& q, std::uint64_t bits,
                                 const std::vector<int>& members) {
        VertexSet guess(q.universe());
        for (std::size_t i = 0; i < members.size(); ++i)
            if (bits & (std::uint64_t{1} << i)) guess.insert(members[i]);
        CoverList child = list;
        if (std::find(child.begin(), child.end(), guess) != child.end()) return std::nullopt;
        child.push_back(guess);
        std::sort(child.begin(), child.end(), VertexSetLex{});
        if (child.size() > list_limit) return std::nullopt;  // not all members can be minimal covers
        return visit(child);
    }
};

}  // namespace

Graph run_kvc_learner(int n, int k, const LearnerCallbacks& teacher, const KvcOptions& options) {
    if (k < 1 || k > n) throw ContractError("cardinality must satisfy 0 < k <= n");
    KvcSearch search{n, k, teacher, options, std::size_t{1} << std::min(k, 20), {}};
    auto won = search.visit({});
    if (!won) throw InternalError("cover-list search exhausted without an equivalent hypothesis");
    return *won;
}

Graph run_fixed_cardinality(BaseLearner base, int k, int n, const LearnerCallbacks& teacher) {
    if (k < 1 || k > n) throw ContractError("cardinality must satisfy 0 < k <= n");
    // The cardinality restriction lives entirely in the teacher; the base
    // learner runs unchanged and inherits its round bound.
    return base == BaseLearner::VertexCover ? run_vc_learner(n, teacher) : run_is_learner(n, teacher);
}

}  // namespace vertexlearn
