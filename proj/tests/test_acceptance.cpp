// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance runs. Every case sweeps its full input grid, checks the
// advertised query bounds and equivalence guarantees against the independent
// mask-level oracles in testutil.hpp, and prints one PASS/FAIL line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "testutil.hpp"
#include "vertexlearn/net.hpp"
#include "vertexlearn/rng.hpp"
#include "vertexlearn/teaching.hpp"

using namespace vertexlearn;

namespace {

struct Criterion {
    const char* label;
    double budget_seconds;
    long violations = 0;
    long cases = 0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void expect(bool ok) {
        ++cases;
        if (!ok) ++violations;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }

    void finish() {
        double secs = elapsed();
        std::printf("[%s] %s: %ld cases, %ld violations, %.1fs — %s\n", violations == 0 ? "PASS" : "FAIL", label,
                    cases, violations, secs, violations == 0 ? "ok" : "see assertions");
        std::fflush(stdout);
        CHECK(violations == 0);
        CHECK(secs < budget_seconds);
    }
};

std::vector<TeacherPolicy> full_policy_grid() {
    std::vector<TeacherPolicy> out = {{PolicySelector::LexMin, 0},
                                      {PolicySelector::LexMax, 0},
                                      {PolicySelector::MinCardinality, 0},
                                      {PolicySelector::MaxCardinality, 0}};
    for (std::uint64_t s = 1; s <= 5; ++s) out.push_back({PolicySelector::SeededRandom, s});
    return out;
}

void edge_elimination_criterion(Criterion& crit, BaseConcept base, LearnerKind learner) {
    for (int n : {3, 4, 5}) {
        std::int64_t bound = binomial(n, 2) + 1;
        for (std::uint64_t gm = 0; gm < testutil::graph_count(n); ++gm) {
            Graph secret = testutil::graph_from_mask(n, gm);
            for (const auto& policy : full_policy_grid()) {
                SessionConfig cfg;
                cfg.learner = learner;
                cfg.target_concept = Concept::all(base);
                cfg.policy = policy;
                SessionResult r = run_session(cfg, secret);
                crit.expect(r.transcript.outcome == "finished");
                crit.expect(r.final_hypothesis.graph() == secret);
                crit.expect(r.transcript.equivalence_count <= bound);
                crit.expect(r.transcript.membership_count == 0);
            }
        }
    }
}

}  // namespace

TEST_CASE("1: vertex-cover learner, exhaustive small graphs, every policy") {
    Criterion crit{"1 vertex-cover learner", 120.0};
    edge_elimination_criterion(crit, BaseConcept::VertexCover, LearnerKind::VertexCover);
    crit.finish();
}

TEST_CASE("2: independent-set learner, exhaustive small graphs, every policy") {
    Criterion crit{"2 independent-set learner", 120.0};
    edge_elimination_criterion(crit, BaseConcept::IndependentSet, LearnerKind::IndependentSet);
    crit.finish();
}

TEST_CASE("3: dominating-set learner bounds and equivalence") {
    Criterion crit{"3 dominating-set learner", 300.0};
    auto policies = full_policy_grid();

    auto check_session = [&](const Graph& secret, const TeacherPolicy& policy) {
        int n = secret.order();
        SessionConfig cfg;
        cfg.learner = LearnerKind::DominatingSet;
        cfg.target_concept = Concept::all(BaseConcept::DominatingSet);
        cfg.policy = policy;
        SessionResult r = run_session(cfg, secret);
        crit.expect(r.transcript.outcome == "finished");
        crit.expect(r.transcript.equivalence_count <= n + 1);
        crit.expect(r.transcript.membership_count <= static_cast<long>(n) * (n + 1));
        // independent route: compare acceptance of the final transversal
        // hypothesis with mask-level domination over every subset
        bool equivalent_everywhere = true;
        auto edges = secret.edges();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            bool dominates = testutil::mask_dominates(m, n, edges);
            bool accepted = eval_hypothesis(r.final_hypothesis, VertexSet::from_mask(n, m));
            if (dominates != accepted) {
                equivalent_everywhere = false;
                break;
            }
        }
        crit.expect(equivalent_everywhere);
    };

    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t gm = 0; gm < testutil::graph_count(n); ++gm) {
            Graph secret = testutil::graph_from_mask(n, gm);
            check_session(secret, {PolicySelector::LexMin, 0});
            check_session(secret, {PolicySelector::MaxCardinality, 0});
        }

    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        double p = seed % 3 == 0 ? 0.25 : (seed % 3 == 1 ? 0.5 : 0.75);
        Graph secret = Graph::random(12, p, seed);
        check_session(secret, policies[seed % policies.size()]);
    }
    crit.finish();
}

TEST_CASE("4: fixed-cardinality cover search, size-independent query counts") {
    Criterion crit{"4 fixed-cardinality cover search", 600.0};
    auto policies = full_policy_grid();
    for (int k : {1, 2}) {
        std::int64_t bound = round_bound(LearnerKind::FixedVertexCoverTree, 0, k);
        crit.expect(bound == (k == 1 ? 4 : 256));
        for (int n : {6, 8, 10, 12}) {
            for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                double p = seed % 2 == 0 ? 3.0 / static_cast<double>(binomial(n, 2)) : 0.5;
                Graph secret = Graph::random(n, p, seed);
                SessionConfig cfg;
                cfg.learner = LearnerKind::FixedVertexCoverTree;
                cfg.target_concept = Concept::exactly(BaseConcept::VertexCover, k);
                cfg.policy = policies[seed % policies.size()];
                SessionResult r = run_session(cfg, secret);
                crit.expect(r.transcript.outcome == "finished");
                crit.expect(r.transcript.equivalence_count <= bound);
                crit.expect(r.transcript.membership_count == 0);
                crit.expect(testutil::brute_disagreements(BaseConcept::VertexCover, k, n, secret.edges(),
                                                          r.final_hypothesis.graph().edges())
                                .empty());
            }
            // the single-edge family: three queries at every order
            for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}) {
                if (k != 1) continue;
                Graph secret(n);
                secret.add_edge(u, v);
                SessionConfig cfg;
                cfg.learner = LearnerKind::FixedVertexCoverTree;
                cfg.target_concept = Concept::exactly(BaseConcept::VertexCover, 1);
                cfg.policy = {PolicySelector::LexMin, 0};
                SessionResult r = run_session(cfg, secret);
                crit.expect(r.transcript.equivalence_count == 3);
            }
        }
    }
    crit.finish();
}

TEST_CASE("5: equivalence-only wrapper learns exact-size cover variants") {
    Criterion crit{"5 exact-size wrapper", 120.0};
    std::vector<TeacherPolicy> policies = {{PolicySelector::LexMin, 0},
                                           {PolicySelector::LexMax, 0},
                                           {PolicySelector::MinCardinality, 0},
                                           {PolicySelector::MaxCardinality, 0}};
    for (int n = 1; n <= 5; ++n) {
        std::int64_t bound = binomial(n, 2) + 1;
        for (std::uint64_t gm = 0; gm < testutil::graph_count(n); ++gm) {
            Graph secret = testutil::graph_from_mask(n, gm);
            for (int k = 1; k <= std::min(n, 3); ++k) {
                for (const auto& policy : policies) {
                    SessionConfig cfg;
                    cfg.learner = LearnerKind::VertexCover;
                    cfg.target_concept = Concept::exactly(BaseConcept::VertexCover, k);
                    cfg.policy = policy;
                    SessionResult r = run_session(cfg, secret);
                    crit.expect(r.transcript.outcome == "finished");
                    crit.expect(r.transcript.equivalence_count <= bound);
                    crit.expect(testutil::brute_disagreements(BaseConcept::VertexCover, k, n, secret.edges(),
                                                              r.final_hypothesis.graph().edges())
                                    .empty());
                }
            }
        }
    }
    crit.finish();
}

TEST_CASE("6: minimal cover counts never exceed two to the cover number") {
    Criterion crit{"6 minimal cover bound", 300.0};
    bool equality_attained = false;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t gm = 0; gm < testutil::graph_count(n); ++gm) {
            Graph g = testutil::graph_from_mask(n, gm);
            auto covers = enumerate_minimal_vertex_covers(g);
            int m = vertex_cover_number(g);
            std::int64_t limit = std::int64_t{1} << m;
            crit.expect(static_cast<std::int64_t>(covers.size()) <= limit);
            if (static_cast<std::int64_t>(covers.size()) == limit && m > 0) equality_attained = true;
        }
    }
    crit.expect(equality_attained);  // stars meet the bound exactly
    crit.finish();
}

TEST_CASE("7: pair teaching sets determine the secret exactly") {
    Criterion crit{"7 teaching sets", 180.0};
    for (int n = 1; n <= 5; ++n) {
        std::int64_t pair_count = binomial(n, 2);
        for (std::uint64_t gm = 0; gm < testutil::graph_count(n); ++gm) {
            Graph g = testutil::graph_from_mask(n, gm);
            ExampleSet vc = teaching_set_vc(g);
            ExampleSet is = teaching_set_is(g);
            crit.expect(static_cast<std::int64_t>(vc.positives.size() + vc.negatives.size()) == pair_count);
            crit.expect(static_cast<std::int64_t>(is.positives.size() + is.negatives.size()) == pair_count);
            crit.expect(verify_teaching_set(g, Concept::all(BaseConcept::VertexCover), vc));
            crit.expect(verify_teaching_set(g, Concept::all(BaseConcept::IndependentSet), is));
            crit.expect(consistent_hypothesis(Concept::all(BaseConcept::VertexCover), vc) == g);
            crit.expect(consistent_hypothesis(Concept::all(BaseConcept::IndependentSet), is) == g);
        }
    }
    crit.finish();
}

TEST_CASE("8: too few negatives never teach the exact-size independent sets of a clique") {
    Criterion crit{"8 adversarial consistency", 180.0};
    for (int n : {4, 5, 6}) {
        for (int k : {2, 3}) {
            std::vector<VertexSet> all_k_subsets;
            for_each_subset(n, EnumOrder::LexAsc, k, 0, [&](const VertexSet& s) {
                all_k_subsets.push_back(s);
                return true;
            });
            const std::size_t family = all_k_subsets.size();
            auto check_subset = [&](std::uint64_t chosen) {
                std::vector<VertexSet> negatives;
                VertexSet missing(n);
                bool missing_found = false;
                for (std::size_t i = 0; i < family; ++i) {
                    if (chosen & (std::uint64_t{1} << i)) {
                        negatives.push_back(all_k_subsets[i]);
                    } else if (!missing_found) {
                        missing = all_k_subsets[i];
                        missing_found = true;
                    }
                }
                Graph h = adversarial_consistent_graph(n, k, negatives, missing);
                bool consistent = true;
                for (const auto& neg : negatives)
                    if (is_independent_set(h, neg)) consistent = false;
                crit.expect(consistent);
                crit.expect(is_independent_set(h, missing));
                crit.expect(!is_independent_set(Graph::complete(n), missing));
            };
            if (family <= 12) {
                for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << family) - 1; ++chosen)
                    check_subset(chosen);
            } else {
                SplitMix64 rng(1000 + static_cast<std::uint64_t>(n * 10 + k));
                std::uint64_t everyone = family == 64 ? ~0ULL : (std::uint64_t{1} << family) - 1;
                for (int trial = 0; trial < 1000; ++trial) {
                    std::uint64_t chosen = rng.next() & everyone;
                    if (chosen == everyone) chosen = 0;
                    check_subset(chosen);
                }
            }
        }
    }
    crit.finish();
}

TEST_CASE("9: loopback sessions replay in-process transcripts byte for byte") {
    Criterion crit{"9 protocol fidelity", 120.0};
    auto policies = full_policy_grid();
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        SplitMix64 rng(seed * 31);
        int n = 4 + static_cast<int>(rng.below(5));  // 4..8
        double p = 0.2 + 0.15 * static_cast<double>(rng.below(4));
        Graph secret = Graph::random(n, p, rng.next());

        LearnerKind learner;
        Concept c = Concept::all(BaseConcept::VertexCover);
        switch (seed % 5) {
            case 0:
                learner = LearnerKind::VertexCover;
                break;
            case 1:
                learner = LearnerKind::IndependentSet;
                c = Concept::all(BaseConcept::IndependentSet);
                break;
            case 2:
                learner = LearnerKind::DominatingSet;
                c = Concept::all(BaseConcept::DominatingSet);
                break;
            case 3:
                learner = LearnerKind::FixedVertexCoverTree;
                c = Concept::exactly(BaseConcept::VertexCover, 1 + static_cast<int>(seed % 2));
                break;
            default:
                learner = LearnerKind::VertexCover;  // the exact-size wrapper
                c = Concept::exactly(BaseConcept::VertexCover, 2);
                break;
        }
        TeacherPolicy policy = policies[seed % policies.size()];

        SessionConfig cfg;
        cfg.learner = learner;
        cfg.target_concept = c;
        cfg.policy = policy;
        SessionResult local = run_session(cfg, secret);

        TeacherServer server("127.0.0.1", 0, secret, c, policy);
        server.start();
        SessionResult remote = run_remote_session("127.0.0.1", server.port(), learner, c, n);
        server.stop();

        crit.expect(local.transcript.to_jsonl() == remote.transcript.to_jsonl());
        crit.expect(hypothesis_to_json(local.final_hypothesis) == hypothesis_to_json(remote.final_hypothesis));
    }
    crit.finish();
}
