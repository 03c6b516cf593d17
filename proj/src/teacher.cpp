// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/teacher.hpp"

#include <algorithm>

#include "vertexlearn/rng.hpp"
#include "vertexlearn/wire.hpp"

namespace vertexlearn {

PolicySelector policy_from_string(const std::string& name) {
    if (name == "lex-min") return PolicySelector::LexMin;
    if (name == "lex-max") return PolicySelector::LexMax;
    if (name == "min-card") return PolicySelector::MinCardinality;
    if (name == "max-card") return PolicySelector::MaxCardinality;
    if (name == "random") return PolicySelector::SeededRandom;
    throw UsageError("unknown policy: " + name);
}

std::string to_string(PolicySelector p) {
    switch (p) {
        case PolicySelector::LexMin: return "lex-min";
        case PolicySelector::LexMax: return "lex-max";
        case PolicySelector::MinCardinality: return "min-card";
        case PolicySelector::MaxCardinality: return "max-card";
        case PolicySelector::SeededRandom: return "random";
    }
    throw InternalError("unknown policy");
}

namespace {

EnumOrder order_for(PolicySelector p) {
    switch (p) {
        case PolicySelector::LexMin: return EnumOrder::LexAsc;
        case PolicySelector::LexMax: return EnumOrder::LexDesc;
        case PolicySelector::MinCardinality: return EnumOrder::SizeLexAsc;
        case PolicySelector::MaxCardinality: return EnumOrder::SizeLexDesc;
        case PolicySelector::SeededRandom: return EnumOrder::Shuffled;
    }
    throw InternalError("unknown policy");
}

}  // namespace

TeacherSession::TeacherSession(Graph secret, Concept target_concept, TeacherPolicy policy, TeacherMode mode,
                               TeacherLimits limits)
    : secret_(std::move(secret)), concept_(target_concept), policy_(policy), mode_(mode), limits_(limits) {
    if (concept_.exact_size && (*concept_.exact_size < 1 || *concept_.exact_size > secret_.order()))
        throw ContractError("exact cardinality must satisfy 0 < k <= n");
}

bool TeacherSession::answer_membership(const VertexSet& s) {
    if (s.universe() != secret_.order()) throw ContractError("membership query universe mismatch");
    if (concept_.exact_size && s.size() != *concept_.exact_size) throw QueryRejected("cardinality");
    ++membership_count_;
    return holds(concept_, secret_, s);
}

bool TeacherSession::within_brute_caps() const {
    if (concept_.exact_size) return binomial(secret_.order(), *concept_.exact_size) <= limits_.brute_max_candidates;
    return secret_.order() <= limits_.brute_max_universe;
}

EquivResult TeacherSession::brute_counterexample(const Hypothesis& h) const {
    EnumCaps caps{limits_.brute_max_universe, limits_.brute_max_candidates};
    return find_counterexample(concept_, secret_, h, order_for(policy_.selector), policy_.seed, caps);
}

EquivResult TeacherSession::answer_equivalence(const Hypothesis& h) {
    if (h.universe() != secret_.order()) throw ContractError("equivalence query universe mismatch");
    ++equivalence_count_;
    switch (mode_) {
        case TeacherMode::BruteForce:
            return brute_counterexample(h);
        case TeacherMode::Structural:
            return structural_counterexample(h);
        case TeacherMode::Auto:
            if (within_brute_caps()) return brute_counterexample(h);
            try {
                return structural_counterexample(h);
            } catch (const UnsupportedError& e) {
                throw CapacityError(std::string("beyond brute-force limits and ") + e.what());
            }
    }
    throw InternalError("unknown teacher mode");
}

std::optional<Counterexample> TeacherSession::structural_counterexample(const Hypothesis& h) const {
    if (h.universe() != secret_.order()) throw ContractError("equivalence query universe mismatch");
    if (concept_.exact_size) throw UnsupportedError("no structural path for exact-size concepts");

    const int n = secret_.order();
    std::vector<Counterexample> candidates;

    if ((concept_.base == BaseConcept::VertexCover || concept_.base == BaseConcept::IndependentSet) &&
        h.kind() == Hypothesis::Kind::GraphForm) {
        const Graph& hg = h.graph();
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                bool in_g = secret_.has_edge(u, v);
                bool in_h = hg.has_edge(u, v);
                if (in_g == in_h) continue;
                VertexSet pair = VertexSet::of(n, {u, v});
                VertexSet witness = concept_.base == BaseConcept::VertexCover ? pair.complement() : pair;
                candidates.push_back({in_h ? Polarity::Positive : Polarity::Negative, witness});
            }
    } else if (concept_.base == BaseConcept::DominatingSet &&
               (h.kind() == Hypothesis::Kind::GraphForm || h.kind() == Hypothesis::Kind::TransversalForm)) {
        std::vector<VertexSet> target_family = minimal_closed_neighborhoods(secret_);
        std::vector<VertexSet> hyp_min = h.kind() == Hypothesis::Kind::GraphForm
                                             ? minimal_closed_neighborhoods(h.graph())
                                             : inclusion_minimal(h.family());
        for (const auto& a : target_family) {
            bool implied = std::any_of(hyp_min.begin(), hyp_min.end(),
                                       [&](const VertexSet& b) { return b.is_subset_of(a); });
            if (!implied) candidates.push_back({Polarity::Negative, a.complement()});
        }
        for (const auto& b : hyp_min) {
            bool implied = std::any_of(target_family.begin(), target_family.end(),
                                       [&](const VertexSet& a) { return a.is_subset_of(b); });
            if (!implied) candidates.push_back({Polarity::Positive, b.complement()});
        }
    } else {
        throw UnsupportedError("no structural path for this concept/hypothesis pair");
    }

    if (candidates.empty()) return std::nullopt;

    auto lex = [](const Counterexample& a, const Counterexample& b) { return lex_less(a.witness, b.witness); };
    auto size_lex = [](const Counterexample& a, const Counterexample& b) {
        return size_lex_less(a.witness, b.witness);
    };
    auto size_desc_lex = [](const Counterexample& a, const Counterexample& b) {
        if (a.witness.size() != b.witness.size()) return a.witness.size() > b.witness.size();
        return lex_less(a.witness, b.witness);
    };

    switch (policy_.selector) {
        case PolicySelector::LexMin:
            return *std::min_element(candidates.begin(), candidates.end(), lex);
        case PolicySelector::LexMax:
            return *std::max_element(candidates.begin(), candidates.end(), lex);
        case PolicySelector::MinCardinality:
            return *std::min_element(candidates.begin(), candidates.end(), size_lex);
        case PolicySelector::MaxCardinality:
            return *std::min_element(candidates.begin(), candidates.end(), size_desc_lex);
        case PolicySelector::SeededRandom: {
            // pure in (hypothesis, seed): repeated identical queries pick identically
            std::uint64_t h_fingerprint = fnv1a(hypothesis_to_json(h).dump());
            SplitMix64 rng(policy_.seed ^ h_fingerprint);
            return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        }
    }
    throw InternalError("unknown policy");
}

}  // namespace vertexlearn
