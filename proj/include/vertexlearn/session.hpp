// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vertexlearn/learner.hpp"
#include "vertexlearn/teacher.hpp"
#include "vertexlearn/wire.hpp"

namespace vertexlearn {

enum class LearnerKind { VertexCover, IndependentSet, DominatingSet, FixedVertexCoverTree };

LearnerKind learner_from_string(const std::string& name);
std::string to_string(LearnerKind k);

/// Throws ContractError when the learner cannot serve the concept.
void validate_learner_concept(LearnerKind learner, const Concept& target_concept);

/// One query/response exchange.
struct Round {
    bool is_equivalence = false;
    Json query;
    Json response;
};

/// Ordered record of a whole session. jsonl lines look like
/// {"seq":1,"query":{...},"response":{...}} and are byte-stable.
struct Transcript {
    std::vector<Round> rounds;
    long equivalence_count = 0;
    long membership_count = 0;
    std::string outcome;  // "finished" on success

    std::string to_jsonl() const;
    bool operator==(const Transcript& o) const;
};

struct SessionResult {
    Transcript transcript;
    Hypothesis final_hypothesis;
};

struct SessionConfig {
    LearnerKind learner = LearnerKind::VertexCover;
    Concept target_concept = Concept::all(BaseConcept::VertexCover);
    TeacherPolicy policy;
    TeacherMode teacher_mode = TeacherMode::Auto;
    TeacherLimits teacher_limits;
    long max_rounds = 0;  // 0 = unlimited
    /// Re-check every teacher reply against the secret. Only possible in
    /// simulation, where the runner holds the secret.
    bool audit = true;
    /// Brute-force-verify the final hypothesis when within these caps.
    bool verify_final = true;
    EnumCaps verify_caps{12, 100'000};
};

/// Pair the learner with an in-process teacher over the secret and drive the
/// session to completion. Deterministic in all inputs.
SessionResult run_session(const SessionConfig& config, const Graph& secret);

/// Expected query bound for the configured learner, used by benches and tests.
std::int64_t round_bound(LearnerKind learner, int n, int k);

}  // namespace vertexlearn
