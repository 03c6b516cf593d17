// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "vertexlearn/rng.hpp"
#include "vertexlearn/teaching.hpp"

using namespace vertexlearn;

namespace {
Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }
Graph triangle() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }
}  // namespace

TEST_CASE("cover teaching sets") {
    ExampleSet p3 = teaching_set_vc(path3());
    CHECK(p3.negatives == std::vector<VertexSet>{VertexSet::of(3, {1}), VertexSet::of(3, {3})});
    CHECK(p3.positives == std::vector<VertexSet>{VertexSet::of(3, {2})});

    ExampleSet k3 = teaching_set_vc(triangle());
    CHECK(k3.positives.empty());
    CHECK(k3.negatives.size() == 3);

    ExampleSet e3 = teaching_set_vc(Graph(3));
    CHECK(e3.negatives.empty());
    CHECK(e3.positives == std::vector<VertexSet>{VertexSet::of(3, {1}), VertexSet::of(3, {2}), VertexSet::of(3, {3})});
}

TEST_CASE("independent-set teaching sets") {
    ExampleSet p3 = teaching_set_is(path3());
    CHECK(p3.negatives == std::vector<VertexSet>{VertexSet::of(3, {1, 2}), VertexSet::of(3, {2, 3})});
    CHECK(p3.positives == std::vector<VertexSet>{VertexSet::of(3, {1, 3})});

    CHECK(teaching_set_is(triangle()).negatives.size() == 3);
    CHECK(teaching_set_is(Graph(4)).positives.size() == 6);
}

TEST_CASE("teaching sets have one example per vertex pair") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = Graph::random(9, 0.4, seed);
        for (const ExampleSet& ex : {teaching_set_vc(g), teaching_set_is(g)}) {
            CHECK(static_cast<std::int64_t>(ex.positives.size() + ex.negatives.size()) == binomial(9, 2));
            for (const auto& p : ex.positives)
                for (const auto& q : ex.negatives) CHECK(p != q);
        }
    }
}

TEST_CASE("consistent hypotheses") {
    CHECK(consistent_hypothesis(Concept::all(BaseConcept::VertexCover), teaching_set_vc(path3())) == path3());
    CHECK(consistent_hypothesis(Concept::all(BaseConcept::IndependentSet), teaching_set_is(triangle())) == triangle());

    ExampleSet empty = ExampleSet::make(3, {}, {});
    CHECK(consistent_hypothesis(Concept::all(BaseConcept::IndependentSet), empty) == Graph(3));

    // the pair-shaped fast path carries past the exhaustive limit
    Graph big = Graph::random(10, 0.5, 4);
    CHECK(consistent_hypothesis(Concept::all(BaseConcept::VertexCover), teaching_set_vc(big)) == big);
    CHECK(consistent_hypothesis(Concept::all(BaseConcept::IndependentSet), teaching_set_is(big)) == big);
    CHECK_THROWS_AS(consistent_hypothesis(Concept::all(BaseConcept::VertexCover), ExampleSet::make(10, {}, {})),
                    CapacityError);

    // an edgeless requirement against a nonempty-cover requirement cannot be met
    std::vector<VertexSet> all_pairs_off;
    for (int u = 1; u <= 3; ++u)
        for (int v = u + 1; v <= 3; ++v) all_pairs_off.push_back(VertexSet::of(3, {u, v}).complement());
    ExampleSet impossible = ExampleSet::make(3, std::move(all_pairs_off), {VertexSet(3)});
    CHECK_THROWS_AS(consistent_hypothesis(Concept::all(BaseConcept::VertexCover), impossible), InconsistencyError);
}

TEST_CASE("example sets validate their invariants") {
    CHECK_THROWS_AS(ExampleSet::make(3, {VertexSet::of(3, {1})}, {VertexSet::of(3, {1})}), ContractError);
    CHECK_THROWS_AS(ExampleSet::make(3, {VertexSet(4)}, {}), ContractError);
}

TEST_CASE("adversarial consistent graphs") {
    Graph h1 = adversarial_consistent_graph(3, 2, {VertexSet::of(3, {1, 2}), VertexSet::of(3, {1, 3})},
                                            VertexSet::of(3, {2, 3}));
    CHECK(h1 == Graph(3, {{1, 2}, {1, 3}}));
    CHECK(is_independent_set(h1, VertexSet::of(3, {2, 3})));

    std::vector<VertexSet> negatives;
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v)
            if (!(u == 3 && v == 4)) negatives.push_back(VertexSet::of(4, {u, v}));
    Graph h2 = adversarial_consistent_graph(4, 2, negatives, VertexSet::of(4, {3, 4}));
    for (const auto& neg : negatives) CHECK_FALSE(is_independent_set(h2, neg));
    CHECK(is_independent_set(h2, VertexSet::of(4, {3, 4})));

    Graph h3 = adversarial_consistent_graph(4, 3, {}, VertexSet::of(4, {1, 2, 3}));
    CHECK(h3 == Graph(4, {{1, 4}, {2, 4}, {3, 4}}));
    CHECK(is_independent_set(h3, VertexSet::of(4, {1, 2, 3})));

    CHECK_THROWS_AS(adversarial_consistent_graph(4, 2, {VertexSet::of(4, {1, 2})}, VertexSet::of(4, {1, 2})),
                    ContractError);
    CHECK_THROWS_AS(adversarial_consistent_graph(4, 2, {}, VertexSet::of(4, {1, 2, 3})), ContractError);
}

TEST_CASE("teaching-set verification") {
    CHECK(verify_teaching_set(path3(), Concept::all(BaseConcept::VertexCover), teaching_set_vc(path3())));

    Concept two_is = Concept::exactly(BaseConcept::IndependentSet, 2);
    ExampleSet partial = ExampleSet::make(3, {}, {VertexSet::of(3, {1, 2}), VertexSet::of(3, {1, 3})});
    CHECK_FALSE(verify_teaching_set(triangle(), two_is, partial));
    ExampleSet complete =
        ExampleSet::make(3, {}, {VertexSet::of(3, {1, 2}), VertexSet::of(3, {1, 3}), VertexSet::of(3, {2, 3})});
    CHECK(verify_teaching_set(triangle(), two_is, complete));

    CHECK_THROWS_AS(verify_teaching_set(Graph(9), Concept::all(BaseConcept::VertexCover),
                                        ExampleSet::make(9, {}, {})),
                    CapacityError);
}

TEST_CASE("pair teaching sets pin down every small graph exactly") {
    for (int n : {2, 3, 4}) {
        for (std::uint64_t gm = 0; gm < testutil::graph_count(n); ++gm) {
            Graph g = testutil::graph_from_mask(n, gm);
            ExampleSet vc = teaching_set_vc(g);
            ExampleSet is = teaching_set_is(g);
            CHECK(verify_teaching_set(g, Concept::all(BaseConcept::VertexCover), vc));
            CHECK(verify_teaching_set(g, Concept::all(BaseConcept::IndependentSet), is));
            CHECK(consistent_hypothesis(Concept::all(BaseConcept::VertexCover), vc) == g);
            CHECK(consistent_hypothesis(Concept::all(BaseConcept::IndependentSet), is) == g);
        }
    }
}

TEST_CASE("sampled verification accepts full teaching sets at n=6") {
    Graph g = Graph::random(6, 0.5, 12);
    CHECK(verify_teaching_set(g, Concept::all(BaseConcept::VertexCover), teaching_set_vc(g)));
}

TEST_CASE("missing negatives always admit an inequivalent consistent graph") {
    // every proper subset of the 2-subsets of a 5-clique leaves a gap
    std::vector<VertexSet> all_pairs;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) all_pairs.push_back(VertexSet::of(5, {u, v}));
    SplitMix64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t subset = rng.next() % ((1ULL << all_pairs.size()) - 1);  // never the full set
        std::vector<VertexSet> negatives;
        VertexSet missing(5);
        bool missing_found = false;
        for (std::size_t i = 0; i < all_pairs.size(); ++i) {
            if (subset & (1ULL << i)) {
                negatives.push_back(all_pairs[i]);
            } else if (!missing_found) {
                missing = all_pairs[i];
                missing_found = true;
            }
        }
        REQUIRE(missing_found);
        Graph h = adversarial_consistent_graph(5, 2, negatives, missing);
        for (const auto& neg : negatives) REQUIRE_FALSE(is_independent_set(h, neg));
        REQUIRE(is_independent_set(h, missing));
        REQUIRE_FALSE(is_independent_set(Graph::complete(5), missing));
    }
}

TEST_CASE("example set json") {
    ExampleSet ex = teaching_set_vc(path3());
    Json j = ex.to_json();
    CHECK(j.dump() == R"({"n":3,"positives":[[2]],"negatives":[[1],[3]]})");
    ExampleSet back = ExampleSet::from_json(j);
    CHECK(back.n == ex.n);
    CHECK(back.positives == ex.positives);
    CHECK(back.negatives == ex.negatives);
    CHECK_THROWS_AS(ExampleSet::from_json(Json::parse(R"({"n":2,"positives":[[1]],"negatives":[[1]]})")), ParseError);
    CHECK_THROWS_AS(ExampleSet::from_json(Json::parse(R"({"n":2,"positives":[]})")), ParseError);
}
