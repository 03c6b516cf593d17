// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "vertexlearn/concepts.hpp"

namespace vertexlearn {

/// How a teacher picks one counterexample out of the disagreement set. Every
/// selector is deterministic given the secret, concept, hypothesis and seed.
enum class PolicySelector { LexMin, LexMax, MinCardinality, MaxCardinality, SeededRandom };

struct TeacherPolicy {
    PolicySelector selector = PolicySelector::MinCardinality;
    std::uint64_t seed = 0;  // only SeededRandom reads it
};

PolicySelector policy_from_string(const std::string& name);
std::string to_string(PolicySelector p);

/// BruteForce scans every candidate set (capacity-capped); Structural answers
/// from edge/neighborhood structure with no size cap but limited concept and
/// hypothesis coverage; Auto uses brute force within caps, structure beyond.
enum class TeacherMode { Auto, BruteForce, Structural };

struct TeacherLimits {
    int brute_max_universe = 14;
    std::int64_t brute_max_candidates = 1'000'000;
};

/// Holds the secret graph and answers queries truthfully. Single-threaded;
/// distinct sessions share nothing.
class TeacherSession {
  public:
    TeacherSession(Graph secret, Concept target_concept, TeacherPolicy policy, TeacherMode mode = TeacherMode::Auto,
                   TeacherLimits limits = {});

    /// True = yes. Throws QueryRejected("cardinality") when the concept is
    /// size-restricted and |S| != k.
    bool answer_membership(const VertexSet& s);

    /// nullopt = finished. Under an exact-size concept only cardinality-k sets
    /// are compared, and any counterexample has cardinality k.
    EquivResult answer_equivalence(const Hypothesis& h);

    /// Structure-only answer; throws UnsupportedError for unsupported
    /// (concept, hypothesis) pairs. Agrees with brute force on finished-vs-not.
    std::optional<Counterexample> structural_counterexample(const Hypothesis& h) const;

    const Graph& secret() const { return secret_; }
    const Concept& target_concept() const { return concept_; }
    long membership_count() const { return membership_count_; }
    long equivalence_count() const { return equivalence_count_; }

  private:
    bool within_brute_caps() const;
    EquivResult brute_counterexample(const Hypothesis& h) const;

    Graph secret_;
    Concept concept_;
    TeacherPolicy policy_;
    TeacherMode mode_;
    TeacherLimits limits_;
    long membership_count_ = 0;
    long equivalence_count_ = 0;
};

}  // namespace vertexlearn
