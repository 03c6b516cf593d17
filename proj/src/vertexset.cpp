// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/vertexset.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace vertexlearn {

namespace {
constexpr int kWordBits = 64;

std::size_t word_count(int n) { return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits); }
}  // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw RangeError("vertex universe must be non-negative");
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 1; v <= universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::from_members(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > kWordBits) throw RangeError("mask construction limited to universes of at most 64");
    VertexSet s(universe);
    if (universe > 0) {
        std::uint64_t valid = universe == kWordBits ? ~0ULL : ((1ULL << universe) - 1);
        if (mask & ~valid) throw RangeError("mask has bits outside the universe");
        if (!s.words_.empty()) s.words_[0] = mask;
    } else if (mask != 0) {
        throw RangeError("mask has bits outside the universe");
    }
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 1 || v > n_) throw RangeError("vertex " + std::to_string(v) + " outside universe {1.." + std::to_string(n_) + "}");
}

bool VertexSet::contains(int v) const {
    check_vertex(v);
    return (words_[static_cast<std::size_t>(v - 1) / kWordBits] >> ((v - 1) % kWordBits)) & 1ULL;
}

void VertexSet::insert(int v) {
    check_vertex(v);
    words_[static_cast<std::size_t>(v - 1) / kWordBits] |= 1ULL << ((v - 1) % kWordBits);
}

void VertexSet::erase(int v) {
    check_vertex(v);
    words_[static_cast<std::size_t>(v - 1) / kWordBits] &= ~(1ULL << ((v - 1) % kWordBits));
}

int VertexSet::size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

namespace {
void check_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        throw ContractError("vertex sets over different universes (" + std::to_string(a.universe()) + " vs " +
                            std::to_string(b.universe()) + ")");
}
}  // namespace

bool VertexSet::intersects(const VertexSet& o) const {
    check_same_universe(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same_universe(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    // clear bits beyond n
    int tail = n_ % kWordBits;
    if (tail != 0 && !s.words_.empty()) s.words_.back() &= (1ULL << tail) - 1;
    return s;
}

VertexSet VertexSet::set_union(const VertexSet& o) const {
    check_same_universe(*this, o);
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] | o.words_[i];
    return s;
}

VertexSet VertexSet::set_intersection(const VertexSet& o) const {
    check_same_universe(*this, o);
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & o.words_[i];
    return s;
}

VertexSet VertexSet::set_difference(const VertexSet& o) const {
    check_same_universe(*this, o);
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & ~o.words_[i];
    return s;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<int>(i) * kWordBits + bit + 1);
            w &= w - 1;
        }
    }
    return out;
}

int VertexSet::first_member() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]) + 1;
    return 0;
}

int VertexSet::next_member(int v) const {
    if (v < 0) throw RangeError("next_member from negative vertex");
    if (v >= n_) return 0;
    // vertex v+1 lives at bit index v
    std::size_t i = static_cast<std::size_t>(v) / kWordBits;
    std::uint64_t w = words_[i] & (~0ULL << (v % kWordBits));
    while (true) {
        if (w) return static_cast<int>(i) * kWordBits + std::countr_zero(w) + 1;
        ++i;
        if (i >= words_.size()) return 0;
        w = words_[i];
    }
}

std::uint64_t VertexSet::to_mask() const {
    if (n_ > kWordBits) throw RangeError("to_mask limited to universes of at most 64");
    return words_.empty() ? 0 : words_[0];
}

bool VertexSet::operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe()) return a.universe() < b.universe();
    int x = a.first_member();
    int y = b.first_member();
    while (x != 0 && y != 0) {
        if (x != y) return x < y;
        x = a.next_member(x);
        y = b.next_member(y);
    }
    return x == 0 && y != 0;  // proper prefix sorts first
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> family) {
    std::vector<VertexSet> out;
    for (const auto& s : family) {
        bool minimal = true;
        for (const auto& t : family) {
            if (t != s && t.is_subset_of(s)) {
                minimal = false;
                break;
            }
        }
        if (minimal && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), VertexSetLex{});
    return out;
}

}  // namespace vertexlearn
