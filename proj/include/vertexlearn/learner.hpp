// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "vertexlearn/concepts.hpp"

namespace vertexlearn {

/// How a learner talks to its teacher. `membership` returns true for yes.
/// Teacher refusals surface as QueryRejected.
struct LearnerCallbacks {
    std::function<bool(const VertexSet&)> membership;
    std::function<EquivResult(const Hypothesis&)> equivalence;
};

/// Non-edges deduced so far; the current hypothesis is the complete graph minus
/// these pairs, so its edge set always contains the secret's.
struct NonEdgeLedger {
    int n;
    std::vector<std::pair<int, int>> deduced;

    Graph hypothesis() const;
};

/// From a positive cover counterexample: every pair outside the counterexample
/// is a non-edge. Requires at least two vertices outside it.
std::vector<std::pair<int, int>> deduce_non_edges_vc(int n, const VertexSet& cex);

/// From a positive independent-set counterexample: every pair inside it is a
/// non-edge. Requires at least two members.
std::vector<std::pair<int, int>> deduce_non_edges_is(const VertexSet& cex);

/// Learn all vertex covers with equivalence queries only, starting from the
/// complete graph. At most C(n,2)+1 equivalence queries.
Graph run_vc_learner(int n, const LearnerCallbacks& teacher);

/// Same scheme for independent sets.
Graph run_is_learner(int n, const LearnerCallbacks& teacher);

/// Extend a non-dominating set by ascending vertex index until every further
/// vertex would make it dominating. The complement of the result is the closed
/// neighborhood of some vertex. Uses at most n membership queries, including
/// one initial check when `start` is nonempty.
VertexSet grow_to_maximal_negative(const VertexSet& start, const std::function<bool(const VertexSet&)>& membership);

/// Discovered closed neighborhoods; grows monotonically during a run.
struct ConstraintFamily {
    int n;
    std::vector<VertexSet> identified;
};

/// Learn all dominating sets with extended equivalence and membership queries:
/// each negative counterexample is grown maximally and its complement joins the
/// transversal hypothesis. At most n+1 equivalence queries.
Hypothesis run_ds_learner(int n, const LearnerCallbacks& teacher);

/// The unique maximal graph consistent with a list of covers: edge uv is present
/// iff every list member contains u or v. Empty list gives the complete graph;
/// a member that is the empty set forces the edgeless graph.
Graph hypothesis_from_cover_list(int n, const std::vector<VertexSet>& list);

struct KvcOptions {
    /// Skip nodes whose cover list was already visited. The replies are a pure
    /// function of the hypothesis, so skipping only removes repeat queries;
    /// disable to reproduce the unpruned search tree.
    bool memoize = true;
};

/// Learn the cardinality-k vertex covers by a depth-first search over guessed
/// minimal-cover lists. Query count is bounded by 2^(k*2^k) regardless of n.
Graph run_kvc_learner(int n, int k, const LearnerCallbacks& teacher, const KvcOptions& options = {});

enum class BaseLearner { VertexCover, IndependentSet };

/// Run an equivalence-query-only learner unchanged against a teacher that
/// compares only cardinality-k sets. Terminates within the base learner's
/// bound; the result agrees with the secret on cardinality-k sets.
Graph run_fixed_cardinality(BaseLearner base, int k, int n, const LearnerCallbacks& teacher);

}  // namespace vertexlearn
