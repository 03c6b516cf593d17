// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/wire.hpp"

namespace vertexlearn {

Json set_to_json(const VertexSet& s) {
    Json j = Json::array();
    for (int v : s.members()) j.push_back(v);
    return j;
}

VertexSet set_from_json(const Json& j, int universe) {
    if (!j.is_array()) throw ParseError("vertex set must be a JSON array");
    VertexSet s(universe);
    int prev = 0;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("vertex set members must be integers");
        int v = e.get<int>();
        if (v <= prev) throw ParseError("vertex set must be strictly ascending");
        if (v > universe) throw ParseError("vertex " + std::to_string(v) + " outside universe");
        s.insert(v);
        prev = v;
    }
    return s;
}

Json edges_to_json(const Graph& g) {
    Json j = Json::array();
    for (auto [u, v] : g.edges()) j.push_back(Json::array({u, v}));
    return j;
}

Json expr_to_json(const Expr& e) {
    Json j = Json::object();
    switch (e.op) {
        case Expr::Op::Var:
            j["op"] = "var";
            j["i"] = e.var;
            return j;
        case Expr::Op::Const:
            j["op"] = "const";
            j["val"] = e.value;
            return j;
        case Expr::Op::Not:
            j["op"] = "not";
            j["arg"] = expr_to_json(e.args.at(0));
            return j;
        case Expr::Op::And:
        case Expr::Op::Or: {
            j["op"] = e.op == Expr::Op::And ? "and" : "or";
            Json args = Json::array();
            for (const auto& a : e.args) args.push_back(expr_to_json(a));
            j["args"] = std::move(args);
            return j;
        }
    }
    throw InternalError("unknown expression node");
}

Expr expr_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
        throw ParseError("expression node must be an object with an 'op' field");
    const std::string op = j["op"].get<std::string>();
    if (op == "var") {
        if (!j.contains("i") || !j["i"].is_number_integer()) throw ParseError("var node needs integer 'i'");
        return Expr::variable(j["i"].get<int>());
    }
    if (op == "const") {
        if (!j.contains("val") || !j["val"].is_boolean()) throw ParseError("const node needs boolean 'val'");
        return Expr::constant(j["val"].get<bool>());
    }
    if (op == "not") {
        if (!j.contains("arg")) throw ParseError("not node needs 'arg'");
        return Expr::negation(expr_from_json(j["arg"]));
    }
    if (op == "and" || op == "or") {
        if (!j.contains("args") || !j["args"].is_array()) throw ParseError("and/or node needs 'args' array");
        std::vector<Expr> parts;
        for (const auto& a : j["args"]) parts.push_back(expr_from_json(a));
        return op == "and" ? Expr::conjunction(std::move(parts)) : Expr::disjunction(std::move(parts));
    }
    throw ParseError("unknown expression op: " + op);
}

Json hypothesis_to_json(const Hypothesis& h) {
    Json j = Json::object();
    switch (h.kind()) {
        case Hypothesis::Kind::GraphForm:
            j["kind"] = "graph";
            j["n"] = h.universe();
            j["edges"] = edges_to_json(h.graph());
            return j;
        case Hypothesis::Kind::TransversalForm: {
            j["kind"] = "transversal";
            j["n"] = h.universe();
            Json fam = Json::array();
            for (const auto& m : h.family()) fam.push_back(set_to_json(m));
            j["family"] = std::move(fam);
            return j;
        }
        case Hypothesis::Kind::CircuitForm:
            j["kind"] = "circuit";
            j["n"] = h.universe();
            j["expr"] = expr_to_json(h.circuit());
            return j;
    }
    throw InternalError("unknown hypothesis kind");
}

Hypothesis hypothesis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() || !j.contains("n") ||
        !j["n"].is_number_integer())
        throw ParseError("hypothesis must be an object with 'kind' and 'n'");
    const std::string kind = j["kind"].get<std::string>();
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("hypothesis universe must be positive");
    if (kind == "graph") {
        if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph hypothesis needs 'edges'");
        Graph g(n);
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("edge must be a pair of integers");
            int u = e[0].get<int>();
            int v = e[1].get<int>();
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge endpoint out of range");
            if (u >= v) throw ParseError("edges must satisfy u < v");
            if (g.has_edge(u, v)) throw ParseError("duplicate edge");
            g.add_edge(u, v);
        }
        return Hypothesis::graph_form(std::move(g));
    }
    if (kind == "transversal") {
        if (!j.contains("family") || !j["family"].is_array()) throw ParseError("transversal hypothesis needs 'family'");
        std::vector<VertexSet> family;
        for (const auto& m : j["family"]) family.push_back(set_from_json(m, n));
        try {
            return Hypothesis::transversal_form(n, std::move(family));
        } catch (const ContractError& e) {
            throw ParseError(e.what());
        }
    }
    if (kind == "circuit") {
        if (!j.contains("expr")) throw ParseError("circuit hypothesis needs 'expr'");
        try {
            return Hypothesis::circuit_form(n, expr_from_json(j["expr"]));
        } catch (const ContractError& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown hypothesis kind: " + kind);
}

Json query_to_json(const Query& q) {
    Json j = Json::object();
    switch (q.kind) {
        case Query::Kind::Member:
            j["q"] = "member";
            j["set"] = set_to_json(*q.set);
            return j;
        case Query::Kind::Equiv:
            j["q"] = "equiv";
            j["hyp"] = hypothesis_to_json(*q.hyp);
            return j;
        case Query::Kind::Bye:
            j["q"] = "bye";
            return j;
    }
    throw InternalError("unknown query kind");
}

Query query_from_json(const Json& j, int universe) {
    if (!j.is_object() || !j.contains("q") || !j["q"].is_string())
        throw ParseError("query must be an object with a 'q' field");
    const std::string q = j["q"].get<std::string>();
    if (q == "member") {
        if (!j.contains("set")) throw ParseError("member query needs 'set'");
        return Query{Query::Kind::Member, set_from_json(j["set"], universe), std::nullopt};
    }
    if (q == "equiv") {
        if (!j.contains("hyp")) throw ParseError("equiv query needs 'hyp'");
        return Query{Query::Kind::Equiv, std::nullopt, hypothesis_from_json(j["hyp"])};
    }
    if (q == "bye") return Query{Query::Kind::Bye, std::nullopt, std::nullopt};
    throw ParseError("unknown query kind: " + q);
}

Json answer_to_json(const Answer& a) {
    Json j = Json::object();
    switch (a.kind) {
        case Answer::Kind::Yes:
            j["a"] = "yes";
            return j;
        case Answer::Kind::No:
            j["a"] = "no";
            return j;
        case Answer::Kind::Finished:
            j["a"] = "finished";
            return j;
        case Answer::Kind::Counterexample:
            j["a"] = "counterexample";
            j["polarity"] = a.cex->polarity == Polarity::Positive ? "positive" : "negative";
            j["set"] = set_to_json(a.cex->witness);
            return j;
        case Answer::Kind::Rejected:
            j["a"] = "rejected";
            j["reason"] = a.reason;
            return j;
    }
    throw InternalError("unknown answer kind");
}

Answer answer_from_json(const Json& j, int universe) {
    if (!j.is_object() || !j.contains("a") || !j["a"].is_string())
        throw ParseError("answer must be an object with an 'a' field");
    const std::string a = j["a"].get<std::string>();
    if (a == "yes") return answer_yes_no(true);
    if (a == "no") return answer_yes_no(false);
    if (a == "finished") return answer_finished();
    if (a == "counterexample") {
        if (!j.contains("polarity") || !j["polarity"].is_string() || !j.contains("set"))
            throw ParseError("counterexample needs 'polarity' and 'set'");
        const std::string p = j["polarity"].get<std::string>();
        if (p != "positive" && p != "negative") throw ParseError("polarity must be positive or negative");
        return answer_counterexample(
            Counterexample{p == "positive" ? Polarity::Positive : Polarity::Negative, set_from_json(j["set"], universe)});
    }
    if (a == "rejected") {
        if (!j.contains("reason") || !j["reason"].is_string()) throw ParseError("rejected answer needs 'reason'");
        return answer_rejected(j["reason"].get<std::string>());
    }
    throw ParseError("unknown answer kind: " + a);
}

Answer answer_yes_no(bool yes) { return Answer{yes ? Answer::Kind::Yes : Answer::Kind::No, std::nullopt, {}}; }
Answer answer_finished() { return Answer{Answer::Kind::Finished, std::nullopt, {}}; }
Answer answer_counterexample(Counterexample cex) {
    return Answer{Answer::Kind::Counterexample, std::move(cex), {}};
}
Answer answer_rejected(std::string reason) { return Answer{Answer::Kind::Rejected, std::nullopt, std::move(reason)}; }

}  // namespace vertexlearn
