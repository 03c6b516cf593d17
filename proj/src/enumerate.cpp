// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/enumerate.hpp"

#include <limits>
#include <numeric>
#include <vector>

#include "vertexlearn/rng.hpp"

namespace vertexlearn {

namespace {

using Visit = std::function<bool(const VertexSet&)>;

// Preorder over the extension tree = lex-ascending sequence order.
bool walk_lex_asc(int n, VertexSet& cur, int maxv, const Visit& visit) {
    if (!visit(cur)) return false;
    for (int j = maxv + 1; j <= n; ++j) {
        cur.insert(j);
        bool ok = walk_lex_asc(n, cur, j, visit);
        cur.erase(j);
        if (!ok) return false;
    }
    return true;
}

// Children before node, largest extension first: exact reverse of walk_lex_asc.
bool walk_lex_desc(int n, VertexSet& cur, int maxv, const Visit& visit) {
    for (int j = n; j > maxv; --j) {
        cur.insert(j);
        bool ok = walk_lex_desc(n, cur, j, visit);
        cur.erase(j);
        if (!ok) return false;
    }
    return visit(cur);
}

bool walk_combinations(int n, int k, const Visit& visit) {
    if (k == 0) return visit(VertexSet(n));
    if (k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        if (!visit(VertexSet::from_members(n, idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool walk_combinations_reverse(int n, int k, const Visit& visit) {
    if (k == 0) return visit(VertexSet(n));
    if (k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = n - k + 1 + j;
    while (true) {
        if (!visit(VertexSet::from_members(n, idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] - 1 <= (i == 0 ? 0 : idx[static_cast<std::size_t>(i - 1)])) --i;
        if (i < 0) return true;
        --idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = n - (k - 1 - j);
    }
}

constexpr std::int64_t kShuffleCap = std::int64_t{1} << 22;

bool walk_shuffled(int n, int k, std::uint64_t seed, const Visit& visit) {
    std::int64_t count = k >= 0 ? binomial(n, k) : (n <= 62 ? (std::int64_t{1} << n) : std::numeric_limits<std::int64_t>::max());
    if (count > kShuffleCap) throw CapacityError("shuffled enumeration would materialize too many subsets");
    std::vector<VertexSet> all;
    all.reserve(static_cast<std::size_t>(count));
    for_each_subset(n, EnumOrder::SizeLexAsc, k, 0, [&](const VertexSet& s) {
        all.push_back(s);
        return true;
    });
    SplitMix64 rng(seed);
    deterministic_shuffle(all, rng);
    for (const auto& s : all)
        if (!visit(s)) return false;
    return true;
}

}  // namespace

bool for_each_subset(int n, EnumOrder order, int k, std::uint64_t seed, const Visit& visit) {
    if (n < 0) throw RangeError("negative universe");
    if (k > n) return true;
    switch (order) {
        case EnumOrder::LexAsc: {
            if (k >= 0) return walk_combinations(n, k, visit);
            VertexSet cur(n);
            return walk_lex_asc(n, cur, 0, visit);
        }
        case EnumOrder::LexDesc: {
            if (k >= 0) return walk_combinations_reverse(n, k, visit);
            VertexSet cur(n);
            return walk_lex_desc(n, cur, 0, visit);
        }
        case EnumOrder::SizeLexAsc: {
            if (k >= 0) return walk_combinations(n, k, visit);
            for (int s = 0; s <= n; ++s)
                if (!walk_combinations(n, s, visit)) return false;
            return true;
        }
        case EnumOrder::SizeLexDesc: {
            if (k >= 0) return walk_combinations(n, k, visit);
            for (int s = n; s >= 0; --s)
                if (!walk_combinations(n, s, visit)) return false;
            return true;
        }
        case EnumOrder::Shuffled:
            return walk_shuffled(n, k, seed, visit);
    }
    throw InternalError("unknown enumeration order");
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i, watching for overflow
        std::int64_t num = n - k + i;
        if (r > std::numeric_limits<std::int64_t>::max() / num) return std::numeric_limits<std::int64_t>::max();
        r = r * num / i;
    }
    return r;
}

}  // namespace vertexlearn
