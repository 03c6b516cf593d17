// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "vertexlearn/errors.hpp"

namespace vertexlearn {

/// A subset of the vertex universe {1..n}. Equality is extensional and only
/// defined between sets over the same universe.
class VertexSet {
  public:
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vs);
    static VertexSet from_members(int universe, const std::vector<int>& vs);
    /// Bit i-1 of `mask` encodes membership of vertex i. Universe must be <= 64.
    static VertexSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return n_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const;
    bool empty() const { return size() == 0; }

    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    VertexSet complement() const;
    VertexSet set_union(const VertexSet& o) const;
    VertexSet set_intersection(const VertexSet& o) const;
    VertexSet set_difference(const VertexSet& o) const;

    /// Members in ascending order.
    std::vector<int> members() const;
    /// Smallest member, or 0 when empty.
    int first_member() const;
    /// Smallest member strictly greater than v, or 0 when none.
    int next_member(int v) const;

    std::uint64_t to_mask() const;

    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// "{1,3,4}" — for diagnostics and test output.
    std::string to_string() const;

  private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending member sequences:
/// {} < {1} < {1,2} < {1,3} < {2} < {2,3} < {3}. Sets over a smaller universe
/// sort first so the order is total across universes.
bool lex_less(const VertexSet& a, const VertexSet& b);

/// (|S|, lex) ascending.
bool size_lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetLex {
    bool operator()(const VertexSet& a, const VertexSet& b) const { return lex_less(a, b); }
};

/// Inclusion-minimal members of a family, deduplicated and lex-sorted.
std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> family);

}  // namespace vertexlearn
