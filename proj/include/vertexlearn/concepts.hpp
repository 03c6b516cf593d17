// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vertexlearn/enumerate.hpp"
#include "vertexlearn/graph.hpp"

namespace vertexlearn {

enum class BaseConcept { VertexCover, IndependentSet, DominatingSet };

/// A vertex-set concept: one of the three base predicates, optionally restricted
/// to sets of one exact cardinality.
struct Concept {
    BaseConcept base;
    std::optional<int> exact_size;  // nullopt = all sizes

    static Concept all(BaseConcept b) { return {b, std::nullopt}; }
    static Concept exactly(BaseConcept b, int k) { return {b, k}; }
};

std::string to_string(BaseConcept b);
std::string to_string(const Concept& c);

/// Does S satisfy the concept in G? With an exact-size restriction, the base
/// predicate is ANDed with |S| == k.
bool holds(const Concept& c, const Graph& g, const VertexSet& s);

/// Boolean expression tree over vertex membership variables.
struct Expr {
    enum class Op { Var, And, Or, Not, Const };

    Op op = Op::Const;
    bool value = false;       // Const
    int var = 0;              // Var
    std::vector<Expr> args;   // And/Or (any arity), Not (exactly one)

    static Expr variable(int i);
    static Expr conjunction(std::vector<Expr> parts);
    static Expr disjunction(std::vector<Expr> parts);
    static Expr negation(Expr e);
    static Expr constant(bool v);

    bool eval(const VertexSet& s) const;
    int max_var() const;
};

/// An AND over the family of ORs over each member's variables: true exactly for
/// the transversals of the family.
Expr transversal_circuit(const std::vector<VertexSet>& family);

/// What a learner submits in an (extended) equivalence query: a graph, a
/// transversal constraint family, or a decision circuit.
class Hypothesis {
  public:
    enum class Kind { GraphForm, TransversalForm, CircuitForm };

    static Hypothesis graph_form(Graph g);
    /// Members must be nonempty; the family is deduplicated and lex-sorted.
    static Hypothesis transversal_form(int universe, std::vector<VertexSet> family);
    static Hypothesis circuit_form(int universe, Expr expr);

    Kind kind() const;
    int universe() const;

    const Graph& graph() const;
    const std::vector<VertexSet>& family() const;
    const Expr& circuit() const;

  private:
    struct Transversal {
        int n;
        std::vector<VertexSet> family;
    };
    struct Circuit {
        int n;
        Expr expr;
    };

    explicit Hypothesis(std::variant<Graph, Transversal, Circuit> v) : v_(std::move(v)) {}
    std::variant<Graph, Transversal, Circuit> v_;
};

/// Accept/reject S under the hypothesis. Graph-form hypotheses are evaluated
/// through the concept (which the session supplies); the other forms are
/// structural and ignore it.
bool eval_hypothesis(const Hypothesis& h, const VertexSet& s, const Concept* c = nullptr);

enum class Polarity { Positive, Negative };

/// Positive: the witness satisfies the concept in the target but not the
/// hypothesis. Negative: the reverse.
struct Counterexample {
    Polarity polarity;
    VertexSet witness;

    bool operator==(const Counterexample& o) const {
        return polarity == o.polarity && witness == o.witness;
    }
};

/// std::nullopt means "finished" (the hypothesis is equivalent).
using EquivResult = std::optional<Counterexample>;

/// Caps for exhaustive candidate enumeration.
struct EnumCaps {
    int max_universe = 16;                  // all-sizes concepts
    std::int64_t max_candidates = 1'000'000;  // exact-size concepts
};

/// Exactly the sets satisfying the concept, in SizeLexAsc order.
std::vector<VertexSet> solution_set(const Concept& c, const Graph& g, const EnumCaps& caps = {});

/// First disagreement between the concept on g and the hypothesis, scanning
/// candidates in the given order; nullopt when they agree everywhere.
/// Exact-size concepts compare only sets of that cardinality.
EquivResult find_counterexample(const Concept& c, const Graph& g, const Hypothesis& h, EnumOrder order,
                                std::uint64_t seed = 0, const EnumCaps& caps = {});

/// Equivalence with structural fast paths: vertex covers / independent sets vs a
/// graph hypothesis compare edge sets; dominating sets vs a graph or transversal
/// hypothesis compare minimal constraint families. Everything else falls back to
/// enumeration under `caps`. Counterexample polarity is always correct, but the
/// particular witness may differ from the enumeration one.
EquivResult equivalent(const Concept& c, const Graph& g, const Hypothesis& h, const EnumCaps& caps = {});

}  // namespace vertexlearn
