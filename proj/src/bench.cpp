// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/bench.hpp"

#include <ostream>

#include "vertexlearn/session.hpp"
#include "vertexlearn/teaching.hpp"

namespace vertexlearn {

namespace {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if (mask & (std::uint64_t{1} << bit)) g.add_edge(u, v);
    return g;
}

std::uint64_t labeled_graph_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

struct PolicyRow {
    TeacherPolicy policy;
    std::string name;
    std::uint64_t seed;
};

std::vector<PolicyRow> policy_grid(int random_seeds) {
    std::vector<PolicyRow> rows = {
        {{PolicySelector::LexMin, 0}, "lex-min", 0},
        {{PolicySelector::LexMax, 0}, "lex-max", 0},
        {{PolicySelector::MinCardinality, 0}, "min-card", 0},
        {{PolicySelector::MaxCardinality, 0}, "max-card", 0},
    };
    for (int s = 1; s <= random_seeds; ++s)
        rows.push_back({{PolicySelector::SeededRandom, static_cast<std::uint64_t>(s)}, "random", static_cast<std::uint64_t>(s)});
    return rows;
}

void edge_elimination_suite(BaseConcept base, std::ostream& out) {
    out << "concept,n,graph,policy,seed,equivalence_queries,membership_queries,bound,within_bound\n";
    LearnerKind learner = base == BaseConcept::VertexCover ? LearnerKind::VertexCover : LearnerKind::IndependentSet;
    for (int n : {3, 4}) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph secret = graph_from_edge_mask(n, mask);
            for (const auto& row : policy_grid(5)) {
                SessionConfig cfg;
                cfg.learner = learner;
                cfg.target_concept = Concept::all(base);
                cfg.policy = row.policy;
                SessionResult r = run_session(cfg, secret);
                std::int64_t bound = round_bound(learner, n, 0);
                out << to_string(base) << ',' << n << ',' << mask << ',' << row.name << ',' << row.seed << ','
                    << r.transcript.equivalence_count << ',' << r.transcript.membership_count << ',' << bound << ','
                    << (r.transcript.equivalence_count <= bound ? 1 : 0) << '\n';
            }
        }
    }
}

void ds_suite(std::ostream& out) {
    out << "n,graph,policy,seed,equivalence_queries,equivalence_bound,membership_queries,membership_bound,within_bounds\n";
    auto emit = [&](int n, const std::string& graph_id, const Graph& secret, const PolicyRow& row) {
        SessionConfig cfg;
        cfg.learner = LearnerKind::DominatingSet;
        cfg.target_concept = Concept::all(BaseConcept::DominatingSet);
        cfg.policy = row.policy;
        SessionResult r = run_session(cfg, secret);
        std::int64_t eq_bound = n + 1;
        std::int64_t mem_bound = static_cast<std::int64_t>(n) * (n + 1);
        bool ok = r.transcript.equivalence_count <= eq_bound && r.transcript.membership_count <= mem_bound;
        out << n << ',' << graph_id << ',' << row.name << ',' << row.seed << ',' << r.transcript.equivalence_count
            << ',' << eq_bound << ',' << r.transcript.membership_count << ',' << mem_bound << ',' << (ok ? 1 : 0)
            << '\n';
    };
    std::vector<PolicyRow> small_policies = {{{PolicySelector::LexMin, 0}, "lex-min", 0},
                                             {{PolicySelector::MinCardinality, 0}, "min-card", 0}};
    for (int n : {2, 3, 4}) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph secret = graph_from_edge_mask(n, mask);
            for (const auto& row : small_policies) emit(n, std::to_string(mask), secret, row);
        }
    }
    const auto policies = policy_grid(3);
    for (int seed = 1; seed <= 20; ++seed) {
        Graph secret = Graph::random(12, 0.5, static_cast<std::uint64_t>(seed));
        emit(12, "random-" + std::to_string(seed), secret, policies[static_cast<std::size_t>(seed) % policies.size()]);
    }
}

void kvc_suite(std::ostream& out) {
    out << "n,k,family,seed,queries,bound,within_bound\n";
    for (int k : {1, 2}) {
        for (int n : {6, 8, 10, 12}) {
            std::int64_t bound = round_bound(LearnerKind::FixedVertexCoverTree, n, k);
            auto emit = [&](const std::string& family, std::uint64_t seed, const Graph& secret) {
                SessionConfig cfg;
                cfg.learner = LearnerKind::FixedVertexCoverTree;
                cfg.target_concept = Concept::exactly(BaseConcept::VertexCover, k);
                cfg.policy = {PolicySelector::LexMin, 0};
                SessionResult r = run_session(cfg, secret);
                out << n << ',' << k << ',' << family << ',' << seed << ',' << r.transcript.equivalence_count << ','
                    << bound << ',' << (r.transcript.equivalence_count <= bound ? 1 : 0) << '\n';
            };
            Graph single_edge(n);
            single_edge.add_edge(1, 2);
            emit("single-edge", 0, single_edge);
            for (std::uint64_t seed = 1; seed <= 10; ++seed)
                emit("random", seed, Graph::random(n, 3.0 / static_cast<double>(binomial(n, 2)), seed));
        }
    }
}

void minimal_cover_suite(std::ostream& out) {
    out << "n,graph,minimal_covers,cover_number,limit,within_limit\n";
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            auto covers = enumerate_minimal_vertex_covers(g);
            int m = vertex_cover_number(g);
            std::int64_t limit = std::int64_t{1} << m;
            out << n << ',' << mask << ',' << covers.size() << ',' << m << ',' << limit << ','
                << (static_cast<std::int64_t>(covers.size()) <= limit ? 1 : 0) << '\n';
        }
    }
}

void teaching_suite(std::ostream& out) {
    out << "concept,n,graph,positives,negatives,total,expected,verified\n";
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            for (BaseConcept base : {BaseConcept::VertexCover, BaseConcept::IndependentSet}) {
                ExampleSet ex = base == BaseConcept::VertexCover ? teaching_set_vc(g) : teaching_set_is(g);
                bool verified = verify_teaching_set(g, Concept::all(base), ex);
                out << to_string(base) << ',' << n << ',' << mask << ',' << ex.positives.size() << ','
                    << ex.negatives.size() << ',' << ex.positives.size() + ex.negatives.size() << ','
                    << binomial(n, 2) << ',' << (verified ? 1 : 0) << '\n';
            }
        }
    }
}

}  // namespace

std::vector<std::string> bench_suites() {
    return {"vc-rounds", "is-rounds", "ds-rounds", "kvc-independence", "lemma25", "teaching"};
}

void run_bench(const std::string& suite, std::ostream& out) {
    if (suite == "vc-rounds") return edge_elimination_suite(BaseConcept::VertexCover, out);
    if (suite == "is-rounds") return edge_elimination_suite(BaseConcept::IndependentSet, out);
    if (suite == "ds-rounds") return ds_suite(out);
    if (suite == "kvc-independence") return kvc_suite(out);
    if (suite == "lemma25") return minimal_cover_suite(out);
    if (suite == "teaching") return teaching_suite(out);
    throw UsageError("unknown bench suite: " + suite);
}

}  // namespace vertexlearn
