// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "vertexlearn/concepts.hpp"

namespace vertexlearn {

/// ordered_json everywhere on the wire: emitted key order is insertion order,
/// which keeps transcripts byte-comparable.
using Json = nlohmann::ordered_json;

/// Sorted ascending member array.
Json set_to_json(const VertexSet& s);
/// Strict parse: members must be ascending, in range, without duplicates.
VertexSet set_from_json(const Json& j, int universe);

Json edges_to_json(const Graph& g);

Json expr_to_json(const Expr& e);
Expr expr_from_json(const Json& j);

/// {"kind":"graph","n":N,"edges":[[u,v],...]} |
/// {"kind":"transversal","n":N,"family":[[...],...]} |
/// {"kind":"circuit","n":N,"expr":{...}}
Json hypothesis_to_json(const Hypothesis& h);
Hypothesis hypothesis_from_json(const Json& j);

/// Learner -> Teacher messages.
struct Query {
    enum class Kind { Member, Equiv, Bye };
    Kind kind;
    std::optional<VertexSet> set;     // Member
    std::optional<Hypothesis> hyp;    // Equiv
};

/// Teacher -> Learner messages.
struct Answer {
    enum class Kind { Yes, No, Finished, Counterexample, Rejected };
    Kind kind;
    std::optional<vertexlearn::Counterexample> cex;  // Counterexample
    std::string reason;                              // Rejected
};

Json query_to_json(const Query& q);
/// `universe` is the secret's order; member sets are parsed against it.
Query query_from_json(const Json& j, int universe);

Json answer_to_json(const Answer& a);
Answer answer_from_json(const Json& j, int universe);

Answer answer_yes_no(bool yes);
Answer answer_finished();
Answer answer_counterexample(Counterexample cex);
Answer answer_rejected(std::string reason);

}  // namespace vertexlearn
