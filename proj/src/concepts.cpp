// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/concepts.hpp"

#include <algorithm>

namespace vertexlearn {

std::string to_string(BaseConcept b) {
    switch (b) {
        case BaseConcept::VertexCover: return "vc";
        case BaseConcept::IndependentSet: return "is";
        case BaseConcept::DominatingSet: return "ds";
    }
    throw InternalError("unknown concept");
}

std::string to_string(const Concept& c) {
    std::string s = to_string(c.base);
    if (c.exact_size) s += "[k=" + std::to_string(*c.exact_size) + "]";
    return s;
}

bool holds(const Concept& c, const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw ContractError("vertex set universe does not match graph order");
    if (c.exact_size && s.size() != *c.exact_size) return false;
    switch (c.base) {
        case BaseConcept::VertexCover: return is_vertex_cover(g, s);
        case BaseConcept::IndependentSet: return is_independent_set(g, s);
        case BaseConcept::DominatingSet: return is_dominating_set(g, s);
    }
    throw InternalError("unknown concept");
}

Expr Expr::variable(int i) {
    if (i < 1) throw RangeError("circuit variable index must be positive");
    Expr e;
    e.op = Op::Var;
    e.var = i;
    return e;
}

Expr Expr::conjunction(std::vector<Expr> parts) {
    Expr e;
    e.op = Op::And;
    e.args = std::move(parts);
    return e;
}

Expr Expr::disjunction(std::vector<Expr> parts) {
    Expr e;
    e.op = Op::Or;
    e.args = std::move(parts);
    return e;
}

Expr Expr::negation(Expr inner) {
    Expr e;
    e.op = Op::Not;
    e.args.push_back(std::move(inner));
    return e;
}

Expr Expr::constant(bool v) {
    Expr e;
    e.op = Op::Const;
    e.value = v;
    return e;
}

bool Expr::eval(const VertexSet& s) const {
    switch (op) {
        case Op::Var: return s.contains(var);
        case Op::Const: return value;
        case Op::Not: return !args.at(0).eval(s);
        case Op::And:
            for (const auto& a : args)
                if (!a.eval(s)) return false;
            return true;
        case Op::Or:
            for (const auto& a : args)
                if (a.eval(s)) return true;
            return false;
    }
    throw InternalError("unknown expression node");
}

int Expr::max_var() const {
    int m = op == Op::Var ? var : 0;
    for (const auto& a : args) m = std::max(m, a.max_var());
    return m;
}

Expr transversal_circuit(const std::vector<VertexSet>& family) {
    std::vector<Expr> clauses;
    clauses.reserve(family.size());
    for (const auto& member : family) {
        std::vector<Expr> vars;
        for (int v : member.members()) vars.push_back(Expr::variable(v));
        clauses.push_back(Expr::disjunction(std::move(vars)));
    }
    return Expr::conjunction(std::move(clauses));
}

Hypothesis Hypothesis::graph_form(Graph g) { return Hypothesis(std::variant<Graph, Transversal, Circuit>(std::move(g))); }

Hypothesis Hypothesis::transversal_form(int universe, std::vector<VertexSet> family) {
    if (universe < 1) throw RangeError("hypothesis universe must be positive");
    for (const auto& m : family) {
        if (m.universe() != universe) throw ContractError("family member universe mismatch");
        if (m.empty()) throw ContractError("transversal family members must be nonempty");
    }
    std::sort(family.begin(), family.end(), VertexSetLex{});
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return Hypothesis(std::variant<Graph, Transversal, Circuit>(Transversal{universe, std::move(family)}));
}

Hypothesis Hypothesis::circuit_form(int universe, Expr expr) {
    if (universe < 1) throw RangeError("hypothesis universe must be positive");
    if (expr.max_var() > universe) throw ContractError("circuit variable index exceeds universe");
    return Hypothesis(std::variant<Graph, Transversal, Circuit>(Circuit{universe, std::move(expr)}));
}

Hypothesis::Kind Hypothesis::kind() const {
    if (std::holds_alternative<Graph>(v_)) return Kind::GraphForm;
    if (std::holds_alternative<Transversal>(v_)) return Kind::TransversalForm;
    return Kind::CircuitForm;
}

int Hypothesis::universe() const {
    if (const auto* g = std::get_if<Graph>(&v_)) return g->order();
    if (const auto* t = std::get_if<Transversal>(&v_)) return t->n;
    return std::get<Circuit>(v_).n;
}

const Graph& Hypothesis::graph() const {
    if (const auto* g = std::get_if<Graph>(&v_)) return *g;
    throw ContractError("hypothesis is not in graph form");
}

const std::vector<VertexSet>& Hypothesis::family() const {
    if (const auto* t = std::get_if<Transversal>(&v_)) return t->family;
    throw ContractError("hypothesis is not in transversal form");
}

const Expr& Hypothesis::circuit() const {
    if (const auto* c = std::get_if<Circuit>(&v_)) return c->expr;
    throw ContractError("hypothesis is not in circuit form");
}

bool eval_hypothesis(const Hypothesis& h, const VertexSet& s, const Concept* c) {
    if (s.universe() != h.universe())
        throw ContractError("vertex set universe does not match hypothesis universe");
    switch (h.kind()) {
        case Hypothesis::Kind::GraphForm:
            if (c == nullptr)
                throw ContractError("graph-form hypothesis needs the session concept to evaluate");
            return holds(*c, h.graph(), s);
        case Hypothesis::Kind::TransversalForm:
            for (const auto& member : h.family())
                if (!s.intersects(member)) return false;
            return true;
        case Hypothesis::Kind::CircuitForm:
            return h.circuit().eval(s);
    }
    throw InternalError("unknown hypothesis kind");
}

namespace {

void check_all_sizes_capacity(int n, const EnumCaps& caps) {
    if (n > caps.max_universe)
        throw CapacityError("exhaustive enumeration capped at " + std::to_string(caps.max_universe) + " vertices");
}

void check_exact_capacity(int n, int k, const EnumCaps& caps) {
    if (k < 1 || k > n) throw ContractError("exact cardinality must satisfy 0 < k <= n");
    if (binomial(n, k) > caps.max_candidates)
        throw CapacityError("exact-size enumeration exceeds the candidate cap");
}

}  // namespace

std::vector<VertexSet> solution_set(const Concept& c, const Graph& g, const EnumCaps& caps) {
    if (c.exact_size)
        check_exact_capacity(g.order(), *c.exact_size, caps);
    else
        check_all_sizes_capacity(g.order(), caps);
    std::vector<VertexSet> out;
    for_each_subset(g.order(), EnumOrder::SizeLexAsc, c.exact_size ? *c.exact_size : -1, 0, [&](const VertexSet& s) {
        if (holds(c, g, s)) out.push_back(s);
        return true;
    });
    return out;
}

EquivResult find_counterexample(const Concept& c, const Graph& g, const Hypothesis& h, EnumOrder order,
                                std::uint64_t seed, const EnumCaps& caps) {
    if (h.universe() != g.order()) throw ContractError("hypothesis universe does not match graph order");
    if (c.exact_size)
        check_exact_capacity(g.order(), *c.exact_size, caps);
    else
        check_all_sizes_capacity(g.order(), caps);
    EquivResult found;
    for_each_subset(g.order(), order, c.exact_size ? *c.exact_size : -1, seed, [&](const VertexSet& s) {
        bool in_target = holds(c, g, s);
        bool in_hypothesis = eval_hypothesis(h, s, &c);
        if (in_target == in_hypothesis) return true;
        found = Counterexample{in_target ? Polarity::Positive : Polarity::Negative, s};
        return false;
    });
    return found;
}

namespace {

// Edge-set comparison for all-size vertex covers / independent sets against a
// graph hypothesis. The witness for a differing pair {u,v}:
//   covers      — V - {u,v} covers exactly the side missing the edge
//   independent — {u,v} is independent exactly in the side missing the edge
EquivResult structural_edge_compare(const Concept& c, const Graph& g, const Graph& h) {
    for (int u = 1; u <= g.order(); ++u) {
        for (int v = u + 1; v <= g.order(); ++v) {
            bool in_g = g.has_edge(u, v);
            bool in_h = h.has_edge(u, v);
            if (in_g == in_h) continue;
            VertexSet pair = VertexSet::of(g.order(), {u, v});
            VertexSet witness = c.base == BaseConcept::VertexCover ? pair.complement() : pair;
            // edge only in the hypothesis: the witness satisfies the target, not the hypothesis
            return Counterexample{in_h ? Polarity::Positive : Polarity::Negative, witness};
        }
    }
    return std::nullopt;
}

// Domination compares inclusion-minimal constraint families: a set dominates a
// graph iff it intersects every minimal closed neighborhood, and two antichains
// of nonempty sets with the same transversals are equal.
EquivResult structural_domination_compare(const Graph& g, const std::vector<VertexSet>& hypothesis_family) {
    std::vector<VertexSet> target_family = minimal_closed_neighborhoods(g);
    std::vector<VertexSet> hyp_min = inclusion_minimal(hypothesis_family);
    if (target_family == hyp_min) return std::nullopt;
    // A target constraint with no hypothesis constraint inside it: its complement
    // satisfies the hypothesis but fails to dominate.
    for (const auto& a : target_family) {
        bool implied = false;
        for (const auto& b : hyp_min)
            if (b.is_subset_of(a)) {
                implied = true;
                break;
            }
        if (!implied) return Counterexample{Polarity::Negative, a.complement()};
    }
    // Otherwise some hypothesis constraint is not implied by the target: its
    // complement dominates but is rejected.
    for (const auto& b : hyp_min) {
        bool implied = false;
        for (const auto& a : target_family)
            if (a.is_subset_of(b)) {
                implied = true;
                break;
            }
        if (!implied) return Counterexample{Polarity::Positive, b.complement()};
    }
    throw InternalError("distinct antichains with mutual containment");
}

}  // namespace

EquivResult equivalent(const Concept& c, const Graph& g, const Hypothesis& h, const EnumCaps& caps) {
    if (h.universe() != g.order()) throw ContractError("hypothesis universe does not match graph order");
    if (!c.exact_size) {
        bool cover_like = c.base == BaseConcept::VertexCover || c.base == BaseConcept::IndependentSet;
        if (cover_like && h.kind() == Hypothesis::Kind::GraphForm)
            return structural_edge_compare(c, g, h.graph());
        if (c.base == BaseConcept::DominatingSet && h.kind() == Hypothesis::Kind::GraphForm)
            return structural_domination_compare(g, minimal_closed_neighborhoods(h.graph()));
        if (c.base == BaseConcept::DominatingSet && h.kind() == Hypothesis::Kind::TransversalForm)
            return structural_domination_compare(g, h.family());
    }
    return find_counterexample(c, g, h, EnumOrder::SizeLexAsc, 0, caps);
}

}  // namespace vertexlearn
