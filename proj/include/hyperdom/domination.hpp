#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperdom/graph.hpp"

namespace hyperdom {

// k, floor(k/r), ... down to 0, with a forced -1 step whenever the division
// stalls. Always strictly decreasing, always ends with 0; k=0 gives (0).
std::vector<std::int32_t> derive_sequence(std::int32_t k, double r);

// One level of the hierarchy. Every vertex is assigned to a dominator at
// every level; dominator-only arrays hold -1 elsewhere.
struct DominationLevel {
    std::int32_t k = 0;                       // nominal radius k_j
    std::vector<VertexId> dominators;         // ascending
    std::vector<VertexId> dominator_of;       // size n: assigned dominator of v
    std::vector<std::int32_t> radius;         // size n: effective radius k_{j,u} for dominators
    std::vector<std::int32_t> dominator_index;  // size n: position in `dominators`, -1 if none
    // per dominator position at this level: its level-(j-1) dominators, ascending;
    // empty at level 0
    std::vector<std::vector<VertexId>> children;
};

// Levels bottom-up: levels[0] has k=0 (every vertex dominates itself),
// levels.back() is the user-facing k-dominating set. Cells partition V at
// every level and nest: v's level-j dominator lies in v's level-(j+1) cell.
struct DominationHierarchy {
    std::vector<DominationLevel> levels;

    std::size_t top() const { return levels.size() - 1; }
    const DominationLevel& top_level() const { return levels.back(); }
    std::span<const VertexId> children_of(std::size_t level, VertexId dominator) const {
        const DominationLevel& lvl = levels[level];
        return lvl.children[std::size_t(lvl.dominator_index[dominator])];
    }
};

// Greedy construction: per cell, candidates in degree-descending (id
// ascending) order join the dominator set iff not yet covered; coverage and
// the final closest-dominator assignment (smallest id on ties) both measure
// distances in the whole graph via truncated BFS. `sequence` is descending,
// as produced by derive_sequence.
DominationHierarchy hierarchical_dominating_set(const Graph& g,
                                                std::span<const std::int32_t> sequence);

struct HierarchyReport {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

// Verifies partition, radius bound + tightness, nesting and the bottom level
// against BFS distances. Checks every dominator when the work is small,
// otherwise a seeded sample of `sample_cap` dominators per level.
HierarchyReport hierarchy_check(const Graph& g, const DominationHierarchy& h,
                                std::uint64_t seed = 1, std::size_t sample_cap = 2000);

}  // namespace hyperdom
