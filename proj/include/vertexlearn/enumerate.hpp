// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "vertexlearn/vertexset.hpp"

namespace vertexlearn {

/// Deterministic enumeration orders over subsets of {1..n}.
///   LexAsc      — lexicographic on ascending member sequences: {} {1} {1,2} ... {n}
///   LexDesc     — exact reverse of LexAsc
///   SizeLexAsc  — by cardinality, lex inside each size
///   SizeLexDesc — by descending cardinality, lex inside each size
///   Shuffled    — a seed-determined permutation of SizeLexAsc
enum class EnumOrder { LexAsc, LexDesc, SizeLexAsc, SizeLexDesc, Shuffled };

/// Visit subsets of {1..n} in `order`; k >= 0 restricts to subsets of that exact
/// cardinality, k == -1 visits all. The visitor returns false to stop early.
/// Returns false iff the visitor stopped the walk.
bool for_each_subset(int n, EnumOrder order, int k, std::uint64_t seed,
                     const std::function<bool(const VertexSet&)>& visit);

/// C(n, k), saturating at max int64.
std::int64_t binomial(int n, int k);

}  // namespace vertexlearn
