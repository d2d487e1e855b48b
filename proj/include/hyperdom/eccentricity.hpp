#pragma once

#include <cstdint>
#include <vector>

#include "hyperdom/graph.hpp"

namespace hyperdom {

struct EccentricityTable {
    std::vector<std::int32_t> ecc;
    std::int32_t radius = 0;
    std::int32_t diameter = 0;
    VertexId central_vertex = 0;  // minimum eccentricity, smallest id on ties
    std::size_t bfs_runs = 0;     // how many launches the bound pruning left
    double mean() const;
};

// Exact eccentricities for every vertex of a connected graph. BFS launches
// are pruned with the usual bounds (lower from observed distances and
// ecc(root)-d, upper from d+ecc(root)); a vertex is resolved only when its
// bounds meet, so the result is exact regardless of the schedule.
EccentricityTable compute_all_eccentricities(const Graph& g);

VertexId pick_central_vertex(const EccentricityTable& table);

}  // namespace hyperdom
