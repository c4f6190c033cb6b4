#pragma once

#include <algorithm>
#include <vector>

#include "traceforge/semigroup.hpp"

namespace traceforge {

inline constexpr int kMaxEnumerationGenus = 20;

/// Every numerical semigroup of genus at most max_genus, exactly once.
///
/// Walks the genus tree: the children of S are S \ {g} for the minimal
/// generators g > F(S). Output is sorted lexicographically by gap set.
inline std::vector<NumericalSemigroup> enumerate_semigroups(int max_genus) {
    require(max_genus >= 0, ErrorCode::InvalidArgument, "negative genus bound");
    require(max_genus <= kMaxEnumerationGenus, ErrorCode::BoundTooLarge,
            "genus bound above " + std::to_string(kMaxEnumerationGenus));

    struct Node {
        std::vector<int> gaps;
        NumericalSemigroup s;
    };
    std::vector<std::vector<int>> all_gaps;
    std::vector<Node> frontier{{{}, NumericalSemigroup::natural()}};
    for (int genus = 0; genus <= max_genus; ++genus) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            all_gaps.push_back(node.gaps);
            if (genus == max_genus) continue;
            for (int g : node.s.minimal_generators()) {
                if (g <= node.s.frobenius()) continue;
                auto gaps = node.gaps;
                gaps.push_back(g);
                auto child = NumericalSemigroup::from_gaps(gaps);
                next.push_back({std::move(gaps), std::move(child)});
            }
        }
        frontier = std::move(next);
    }
    std::sort(all_gaps.begin(), all_gaps.end());
    std::vector<NumericalSemigroup> out;
    out.reserve(all_gaps.size());
    for (const auto& g : all_gaps) out.push_back(NumericalSemigroup::from_gaps(g));
    return out;
}

} // namespace traceforge
