// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/session.hpp"

#include <limits>

namespace vertexlearn {

LearnerKind learner_from_string(const std::string& name) {
    if (name == "vc") return LearnerKind::VertexCover;
    if (name == "is") return LearnerKind::IndependentSet;
    if (name == "ds") return LearnerKind::DominatingSet;
    if (name == "kvc") return LearnerKind::FixedVertexCoverTree;
    throw UsageError("unknown learner: " + name);
}

std::string to_string(LearnerKind k) {
    switch (k) {
        case LearnerKind::VertexCover: return "vc";
        case LearnerKind::IndependentSet: return "is";
        case LearnerKind::DominatingSet: return "ds";
        case LearnerKind::FixedVertexCoverTree: return "kvc";
    }
    throw InternalError("unknown learner kind");
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        Json line = Json::object();
        line["seq"] = i + 1;
        line["query"] = rounds[i].query;
        line["response"] = rounds[i].response;
        out += line.dump();
        out += "\n";
    }
    return out;
}

bool Transcript::operator==(const Transcript& o) const {
    if (equivalence_count != o.equivalence_count || membership_count != o.membership_count || outcome != o.outcome ||
        rounds.size() != o.rounds.size())
        return false;
    for (std::size_t i = 0; i < rounds.size(); ++i)
        if (rounds[i].is_equivalence != o.rounds[i].is_equivalence || rounds[i].query != o.rounds[i].query ||
            rounds[i].response != o.rounds[i].response)
            return false;
    return true;
}

void validate_learner_concept(LearnerKind learner, const Concept& target_concept) {
    switch (learner) {
        case LearnerKind::VertexCover:
            if (target_concept.base != BaseConcept::VertexCover)
                throw ContractError("vertex-cover learner needs a vertex-cover concept");
            return;
        case LearnerKind::IndependentSet:
            if (target_concept.base != BaseConcept::IndependentSet)
                throw ContractError("independent-set learner needs an independent-set concept");
            return;
        case LearnerKind::DominatingSet:
            if (target_concept.base != BaseConcept::DominatingSet || target_concept.exact_size)
                throw ContractError("dominating-set learner needs the all-sizes dominating-set concept");
            return;
        case LearnerKind::FixedVertexCoverTree:
            if (target_concept.base != BaseConcept::VertexCover || !target_concept.exact_size)
                throw ContractError("cover-list learner needs an exact-size vertex-cover concept");
            return;
    }
    throw InternalError("unknown learner kind");
}

namespace {

Hypothesis dispatch_learner(const SessionConfig& cfg, int n, const LearnerCallbacks& cb) {
    switch (cfg.learner) {
        case LearnerKind::VertexCover:
            return Hypothesis::graph_form(cfg.target_concept.exact_size
                                              ? run_fixed_cardinality(BaseLearner::VertexCover, *cfg.target_concept.exact_size, n, cb)
                                              : run_vc_learner(n, cb));
        case LearnerKind::IndependentSet:
            return Hypothesis::graph_form(cfg.target_concept.exact_size
                                              ? run_fixed_cardinality(BaseLearner::IndependentSet, *cfg.target_concept.exact_size, n, cb)
                                              : run_is_learner(n, cb));
        case LearnerKind::DominatingSet:
            return run_ds_learner(n, cb);
        case LearnerKind::FixedVertexCoverTree:
            return Hypothesis::graph_form(run_kvc_learner(n, *cfg.target_concept.exact_size, cb));
    }
    throw InternalError("unknown learner kind");
}

bool within_verify_caps(const Concept& c, int n, const EnumCaps& caps) {
    if (c.exact_size) return binomial(n, *c.exact_size) <= caps.max_candidates;
    return n <= caps.max_universe;
}

}  // namespace

SessionResult run_session(const SessionConfig& cfg, const Graph& secret) {
    validate_learner_concept(cfg.learner, cfg.target_concept);
    TeacherSession teacher(secret, cfg.target_concept, cfg.policy, cfg.teacher_mode, cfg.teacher_limits);
    Transcript transcript;

    auto check_round_limit = [&]() {
        if (cfg.max_rounds > 0 && static_cast<long>(transcript.rounds.size()) >= cfg.max_rounds)
            throw ProtocolViolation("round limit exceeded");
    };

    LearnerCallbacks cb;
    cb.membership = [&](const VertexSet& s) -> bool {
        check_round_limit();
        Json q = query_to_json(Query{Query::Kind::Member, s, std::nullopt});
        bool yes = false;
        try {
            yes = teacher.answer_membership(s);
        } catch (const QueryRejected& e) {
            transcript.rounds.push_back({false, std::move(q), answer_to_json(answer_rejected(e.reason))});
            ++transcript.membership_count;
            throw;
        }
        transcript.rounds.push_back({false, std::move(q), answer_to_json(answer_yes_no(yes))});
        ++transcript.membership_count;
        if (cfg.audit && yes != holds(cfg.target_concept, secret, s))
            throw InternalError("truthfulness audit failed on a membership answer");
        return yes;
    };
    bool edge_superset_learner =
        cfg.learner == LearnerKind::VertexCover || cfg.learner == LearnerKind::IndependentSet;
    cb.equivalence = [&](const Hypothesis& h) -> EquivResult {
        check_round_limit();
        if (cfg.audit && edge_superset_learner && h.kind() == Hypothesis::Kind::GraphForm) {
            // sound deductions only ever delete non-edges of the secret
            for (auto [u, v] : secret.edges())
                if (!h.graph().has_edge(u, v))
                    throw InternalError("hypothesis lost a secret edge");
        }
        Json q = query_to_json(Query{Query::Kind::Equiv, std::nullopt, h});
        EquivResult r = teacher.answer_equivalence(h);
        transcript.rounds.push_back({true, std::move(q), answer_to_json(r ? answer_counterexample(*r) : answer_finished())});
        ++transcript.equivalence_count;
        if (cfg.audit && r) {
            bool in_target = holds(cfg.target_concept, secret, r->witness);
            bool in_hypothesis = eval_hypothesis(h, r->witness, &cfg.target_concept);
            bool valid = r->polarity == Polarity::Positive ? (in_target && !in_hypothesis)
                                                           : (!in_target && in_hypothesis);
            if (!valid) throw InternalError("truthfulness audit failed on a counterexample");
        }
        return r;
    };

    Hypothesis final_hypothesis = dispatch_learner(cfg, secret.order(), cb);
    transcript.outcome = "finished";

    if (cfg.verify_final && within_verify_caps(cfg.target_concept, secret.order(), cfg.verify_caps)) {
        auto cex = find_counterexample(cfg.target_concept, secret, final_hypothesis, EnumOrder::SizeLexAsc, 0, cfg.verify_caps);
        if (cex) throw InternalError("final hypothesis fails brute-force equivalence");
    }
    return SessionResult{std::move(transcript), std::move(final_hypothesis)};
}

std::int64_t round_bound(LearnerKind learner, int n, int k) {
    switch (learner) {
        case LearnerKind::VertexCover:
        case LearnerKind::IndependentSet:
            return binomial(n, 2) + 1;
        case LearnerKind::DominatingSet:
            return n + 1;  // equivalence queries only; memberships are bounded by n per round
        case LearnerKind::FixedVertexCoverTree: {
            std::int64_t exponent = static_cast<std::int64_t>(k) * (std::int64_t{1} << k);
            if (exponent >= 63) return std::numeric_limits<std::int64_t>::max();
            return std::int64_t{1} << exponent;
        }
    }
    throw InternalError("unknown learner kind");
}

}  // namespace vertexlearn
