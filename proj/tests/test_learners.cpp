// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"
#include "vertexlearn/session.hpp"

using namespace vertexlearn;

namespace {

Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }
Graph triangle() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }

/// Learner-side view of an in-process teacher, with query counting.
struct CountingTeacher {
    TeacherSession session;
    long membership = 0;
    long equivalence = 0;

    CountingTeacher(Graph secret, Concept c, TeacherPolicy policy, TeacherMode mode = TeacherMode::Auto)
        : session(std::move(secret), c, policy, mode) {}

    LearnerCallbacks callbacks() {
        return LearnerCallbacks{
            [this](const VertexSet& s) {
                ++membership;
                return session.answer_membership(s);
            },
            [this](const Hypothesis& h) {
                ++equivalence;
                return session.answer_equivalence(h);
            },
        };
    }
};

bool same_k_solutions(BaseConcept base, int k, const Graph& a, const Graph& b) {
    return testutil::brute_disagreements(base, k, a.order(), a.edges(), b.edges()).empty();
}

}  // namespace

TEST_CASE("non-edge deduction from cover counterexamples") {
    auto pairs = deduce_non_edges_vc(4, VertexSet::of(4, {1, 2}));
    REQUIRE(pairs == std::vector<std::pair<int, int>>{{3, 4}});
    CHECK(deduce_non_edges_vc(5, VertexSet::of(5, {1})).size() == 6);
    CHECK_THROWS_AS(deduce_non_edges_vc(3, VertexSet::full(3)), ProtocolViolation);
}

TEST_CASE("non-edge deduction from independent-set counterexamples") {
    auto pairs = deduce_non_edges_is(VertexSet::of(5, {1, 3, 5}));
    REQUIRE(pairs == std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {3, 5}});
    CHECK(deduce_non_edges_is(VertexSet::of(4, {2, 4})) == std::vector<std::pair<int, int>>{{2, 4}});
    CHECK_THROWS_AS(deduce_non_edges_is(VertexSet::of(3, {2})), ProtocolViolation);
}

TEST_CASE("non-edge ledger hypothesis") {
    NonEdgeLedger ledger{4, {{1, 2}, {3, 4}}};
    Graph h = ledger.hypothesis();
    CHECK(h.edge_count() == 4);
    CHECK_FALSE(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(3, 4));
    CHECK(h.has_edge(1, 3));
}

TEST_CASE("cover learner on canonical secrets") {
    Concept vc = Concept::all(BaseConcept::VertexCover);
    for (int n : {2, 4, 6}) {
        CountingTeacher t(Graph::complete(n), vc, {PolicySelector::LexMin, 0});
        CHECK(run_vc_learner(n, t.callbacks()) == Graph::complete(n));
        CHECK(t.equivalence == 1);
    }

    // the smallest counterexample to the complete hypothesis empties it at once
    CountingTeacher quick(Graph(4), vc, {PolicySelector::MinCardinality, 0});
    CHECK(run_vc_learner(4, quick.callbacks()) == Graph(4));
    CHECK(quick.equivalence == 2);

    // maximal counterexamples reveal one non-edge per round: the full bound
    CountingTeacher slow(Graph(4), vc, {PolicySelector::MaxCardinality, 0});
    CHECK(run_vc_learner(4, slow.callbacks()) == Graph(4));
    CHECK(slow.equivalence == 7);  // C(4,2) + 1
}

TEST_CASE("cover learner recovers every small secret under every policy") {
    Concept vc = Concept::all(BaseConcept::VertexCover);
    std::vector<TeacherPolicy> policies = {{PolicySelector::LexMin, 0},
                                           {PolicySelector::LexMax, 0},
                                           {PolicySelector::MinCardinality, 0},
                                           {PolicySelector::MaxCardinality, 0},
                                           {PolicySelector::SeededRandom, 1},
                                           {PolicySelector::SeededRandom, 2}};
    for (std::uint64_t gm = 0; gm < testutil::graph_count(3); ++gm) {
        Graph secret = testutil::graph_from_mask(3, gm);
        for (const auto& policy : policies) {
            CountingTeacher t(secret, vc, policy);
            CHECK(run_vc_learner(3, t.callbacks()) == secret);
            CHECK(t.equivalence <= 4);
        }
    }
}

TEST_CASE("independent-set learner") {
    Concept is_all = Concept::all(BaseConcept::IndependentSet);
    CountingTeacher complete(Graph::complete(5), is_all, {PolicySelector::LexMin, 0});
    CHECK(run_is_learner(5, complete.callbacks()) == Graph::complete(5));
    CHECK(complete.equivalence == 1);

    CountingTeacher p3(path3(), is_all, {PolicySelector::LexMin, 0});
    CHECK(run_is_learner(3, p3.callbacks()) == path3());
    CHECK(p3.equivalence == 2);  // {1,3} is the only disagreement with K3

    CountingTeacher e4(Graph(4), is_all, {PolicySelector::MaxCardinality, 0});
    CHECK(run_is_learner(4, e4.callbacks()) == Graph(4));
    CHECK(e4.equivalence == 2);  // the whole vertex set removes all six edges
}

TEST_CASE("growing a negative example to maximality") {
    auto membership_for = [](const Graph& secret, long& count) {
        return [&secret, &count](const VertexSet& s) {
            ++count;
            return is_dominating_set(secret, s);
        };
    };

    Graph p3 = path3();
    long q = 0;
    VertexSet grown = grow_to_maximal_negative(VertexSet::of(3, {1}), membership_for(p3, q));
    CHECK(grown == VertexSet::of(3, {1}));
    CHECK(grown.complement() == p3.closed_neighborhood(3));
    CHECK(q == 3);  // start check plus one try per remaining vertex

    Graph e4(4);
    q = 0;
    grown = grow_to_maximal_negative(VertexSet(4), membership_for(e4, q));
    CHECK(grown == VertexSet::of(4, {1, 2, 3}));
    CHECK(grown.complement() == VertexSet::of(4, {4}));
    CHECK(q == 4);  // empty start needs no check

    Graph k3 = triangle();
    q = 0;
    grown = grow_to_maximal_negative(VertexSet(3), membership_for(k3, q));
    CHECK(grown == VertexSet(3));
    CHECK(q == 3);
    VertexSet complement = grown.complement();
    bool is_some_neighborhood = false;
    for (int x = 1; x <= 3; ++x) is_some_neighborhood |= complement == k3.closed_neighborhood(x);
    CHECK(is_some_neighborhood);

    long unused = 0;
    CHECK_THROWS_AS(grow_to_maximal_negative(VertexSet::of(3, {2}), membership_for(p3, unused)), ContractError);
}

TEST_CASE("grown complements are always closed neighborhoods") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = Graph::random(8, 0.3, seed);
        for (std::uint64_t m = 0; m < 256; m += 5) {
            VertexSet start = VertexSet::from_mask(8, m);
            if (is_dominating_set(g, start)) continue;
            long q = 0;
            VertexSet grown = grow_to_maximal_negative(start, [&](const VertexSet& s) {
                ++q;
                return is_dominating_set(g, s);
            });
            REQUIRE(q <= 8);
            REQUIRE_FALSE(is_dominating_set(g, grown));
            VertexSet complement = grown.complement();
            bool found = false;
            for (int x = 1; x <= 8 && !found; ++x) found = complement == g.closed_neighborhood(x);
            REQUIRE(found);
        }
    }
}

TEST_CASE("dominating-set learner") {
    Concept ds = Concept::all(BaseConcept::DominatingSet);

    CountingTeacher complete(Graph::complete(5), ds, {PolicySelector::LexMin, 0});
    Hypothesis h = run_ds_learner(5, complete.callbacks());
    CHECK(complete.equivalence == 1);
    REQUIRE(h.kind() == Hypothesis::Kind::TransversalForm);
    CHECK(h.family() == std::vector<VertexSet>{VertexSet::full(5)});

    CountingTeacher p3(path3(), ds, {PolicySelector::LexMin, 0});
    Hypothesis hp3 = run_ds_learner(3, p3.callbacks());
    CHECK(p3.equivalence == 3);
    CHECK(p3.membership == 6);
    REQUIRE(hp3.kind() == Hypothesis::Kind::TransversalForm);
    CHECK(hp3.family() == std::vector<VertexSet>{VertexSet::of(3, {1, 2}), VertexSet::of(3, {2, 3})});

    CountingTeacher e4(Graph(4), ds, {PolicySelector::LexMin, 0});
    Hypothesis he4 = run_ds_learner(4, e4.callbacks());
    CHECK(e4.equivalence <= 5);
    REQUIRE(he4.kind() == Hypothesis::Kind::TransversalForm);
    CHECK(he4.family().size() == 4);
}

TEST_CASE("dominating-set learner against every policy on random graphs") {
    Concept ds = Concept::all(BaseConcept::DominatingSet);
    std::vector<TeacherPolicy> policies = {{PolicySelector::LexMin, 0},
                                           {PolicySelector::LexMax, 0},
                                           {PolicySelector::MinCardinality, 0},
                                           {PolicySelector::MaxCardinality, 0},
                                           {PolicySelector::SeededRandom, 9}};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph secret = Graph::random(7, 0.3, seed);
        for (const auto& policy : policies) {
            CountingTeacher t(secret, ds, policy);
            Hypothesis h = run_ds_learner(7, t.callbacks());
            CHECK(t.equivalence <= 8);
            CHECK(t.membership <= 7 * 8);
            // every identified constraint is a real closed neighborhood
            for (const auto& constraint : h.family()) {
                bool genuine = false;
                for (int x = 1; x <= 7 && !genuine; ++x) genuine = constraint == secret.closed_neighborhood(x);
                CHECK(genuine);
            }
            CHECK_FALSE(find_counterexample(ds, secret, h, EnumOrder::SizeLexAsc).has_value());
        }
    }
}

TEST_CASE("maximal consistent graph from a cover list") {
    Graph h1 = hypothesis_from_cover_list(4, {VertexSet::of(4, {1, 2})});
    CHECK(h1.edge_count() == 5);
    CHECK_FALSE(h1.has_edge(3, 4));

    CHECK(hypothesis_from_cover_list(3, {}) == Graph::complete(3));
    CHECK(hypothesis_from_cover_list(3, {VertexSet::of(3, {1}), VertexSet::of(3, {2})}) == Graph(3, {{1, 2}}));
    CHECK(hypothesis_from_cover_list(5, {VertexSet(5)}) == Graph(5));
}

TEST_CASE("fixed-cardinality cover search on canonical secrets") {
    CountingTeacher k3(triangle(), Concept::exactly(BaseConcept::VertexCover, 2), {PolicySelector::LexMin, 0});
    Graph h = run_kvc_learner(3, 2, k3.callbacks());
    CHECK(k3.equivalence == 1);
    CHECK(same_k_solutions(BaseConcept::VertexCover, 2, triangle(), h));

    // single-edge secrets take exactly three queries at any order
    for (int n : {4, 6, 10, 13}) {
        Graph secret(n);
        secret.add_edge(3, 4);
        CountingTeacher t(secret, Concept::exactly(BaseConcept::VertexCover, 1), {PolicySelector::LexMin, 0});
        Graph learned = run_kvc_learner(n, 1, t.callbacks());
        CHECK(t.equivalence == 3);
        CHECK(same_k_solutions(BaseConcept::VertexCover, 1, secret, learned));
        CHECK(learned == secret);
    }
}

TEST_CASE("fixed-cardinality cover search on edgeless secrets") {
    for (int n : {3, 4, 6}) {
        CountingTeacher t(Graph(n), Concept::exactly(BaseConcept::VertexCover, 1), {PolicySelector::LexMin, 0});
        Graph learned = run_kvc_learner(n, 1, t.callbacks());
        CHECK(t.equivalence == 4);  // the empty-guess child wins on the fourth query
        CHECK(same_k_solutions(BaseConcept::VertexCover, 1, Graph(n), learned));
        CHECK(learned == Graph(n));
    }
    CountingTeacher t2(Graph(5), Concept::exactly(BaseConcept::VertexCover, 2), {PolicySelector::LexMin, 0});
    Graph learned = run_kvc_learner(5, 2, t2.callbacks());
    CHECK(t2.equivalence <= 256);
    CHECK(same_k_solutions(BaseConcept::VertexCover, 2, Graph(5), learned));
}

TEST_CASE("fixed-cardinality cover search across policies and random secrets") {
    for (int k : {1, 2}) {
        std::int64_t bound = round_bound(LearnerKind::FixedVertexCoverTree, 0, k);
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            for (int n : {5, 7}) {
                Graph secret = Graph::random(n, 2.5 / static_cast<double>(binomial(n, 2)), seed);
                for (PolicySelector sel : {PolicySelector::LexMin, PolicySelector::MaxCardinality,
                                           PolicySelector::SeededRandom}) {
                    CountingTeacher t(secret, Concept::exactly(BaseConcept::VertexCover, k), {sel, seed});
                    Graph learned = run_kvc_learner(n, k, t.callbacks());
                    CHECK(t.equivalence <= bound);
                    CHECK(same_k_solutions(BaseConcept::VertexCover, k, secret, learned));
                }
            }
        }
    }
}

TEST_CASE("memoization only removes repeat queries") {
    Graph secret = Graph::random(6, 0.15, 5);
    Concept c = Concept::exactly(BaseConcept::VertexCover, 2);
    CountingTeacher with(secret, c, {PolicySelector::LexMin, 0});
    Graph h_with = run_kvc_learner(6, 2, with.callbacks(), {true});
    CountingTeacher without(secret, c, {PolicySelector::LexMin, 0});
    Graph h_without = run_kvc_learner(6, 2, without.callbacks(), {false});
    CHECK(h_with == h_without);
    CHECK(with.equivalence <= without.equivalence);
}

TEST_CASE("the equivalence-only wrapper learns exact-size variants") {
    // final hypothesis agrees on 2-covers: exactly {1,2},{1,3},{2,3} for P3
    CountingTeacher p3(path3(), Concept::exactly(BaseConcept::VertexCover, 2), {PolicySelector::LexMin, 0});
    Graph h = run_fixed_cardinality(BaseLearner::VertexCover, 2, 3, p3.callbacks());
    CHECK(p3.equivalence <= 4);
    CHECK(same_k_solutions(BaseConcept::VertexCover, 2, path3(), h));
    auto two_covers = solution_set(Concept::exactly(BaseConcept::VertexCover, 2), h);
    REQUIRE(two_covers.size() == 3);
    CHECK(two_covers[0] == VertexSet::of(3, {1, 2}));
    CHECK(two_covers[1] == VertexSet::of(3, {1, 3}));
    CHECK(two_covers[2] == VertexSet::of(3, {2, 3}));

    // no 2-independent-sets exist in K3, so the complete hypothesis wins at once
    CountingTeacher k3(triangle(), Concept::exactly(BaseConcept::IndependentSet, 2), {PolicySelector::LexMin, 0});
    Graph hk3 = run_fixed_cardinality(BaseLearner::IndependentSet, 2, 3, k3.callbacks());
    CHECK(k3.equivalence == 1);
    CHECK(solution_set(Concept::exactly(BaseConcept::IndependentSet, 2), hk3).empty());

    // k = n: every graph has the same single k-cover
    CountingTeacher kn(path3(), Concept::exactly(BaseConcept::VertexCover, 3), {PolicySelector::LexMin, 0});
    run_fixed_cardinality(BaseLearner::VertexCover, 3, 3, kn.callbacks());
    CHECK(kn.equivalence == 1);
}

TEST_CASE("wrapper transcripts never exceed the base learner's bound") {
    for (std::uint64_t gm = 0; gm < testutil::graph_count(4); ++gm) {
        Graph secret = testutil::graph_from_mask(4, gm);
        for (int k = 1; k <= 4; ++k) {
            CountingTeacher t(secret, Concept::exactly(BaseConcept::VertexCover, k),
                              {PolicySelector::MaxCardinality, 0});
            Graph h = run_fixed_cardinality(BaseLearner::VertexCover, k, 4, t.callbacks());
            CHECK(t.equivalence <= binomial(4, 2) + 1);
            CHECK(same_k_solutions(BaseConcept::VertexCover, k, secret, h));
        }
    }
}

TEST_CASE("learners reject incompetent teachers") {
    // a negative counterexample to the cover learner
    LearnerCallbacks lying{
        [](const VertexSet&) { return true; },
        [](const Hypothesis&) -> EquivResult {
            return Counterexample{Polarity::Negative, VertexSet::of(3, {1})};
        },
    };
    CHECK_THROWS_AS(run_vc_learner(3, lying), ProtocolViolation);

    // the full vertex set covers everything: never a counterexample
    LearnerCallbacks full_set{
        [](const VertexSet&) { return true; },
        [](const Hypothesis&) -> EquivResult { return Counterexample{Polarity::Positive, VertexSet::full(3)}; },
    };
    CHECK_THROWS_AS(run_vc_learner(3, full_set), ProtocolViolation);

    // repeating a counterexample makes no progress
    LearnerCallbacks repeating{
        [](const VertexSet&) { return true; },
        [](const Hypothesis&) -> EquivResult { return Counterexample{Polarity::Positive, VertexSet::of(4, {1, 2})}; },
    };
    CHECK_THROWS_AS(run_vc_learner(4, repeating), ProtocolViolation);

    // a wrong-cardinality counterexample to the cover-list learner
    LearnerCallbacks off_size{
        [](const VertexSet&) { return true; },
        [](const Hypothesis&) -> EquivResult {
            return Counterexample{Polarity::Positive, VertexSet::of(4, {1, 2, 3})};
        },
    };
    CHECK_THROWS_AS(run_kvc_learner(4, 1, off_size), ProtocolViolation);

    CHECK_THROWS_AS(run_kvc_learner(4, 0, off_size), ContractError);
    CHECK_THROWS_AS(run_fixed_cardinality(BaseLearner::VertexCover, 5, 4, off_size), ContractError);
}
