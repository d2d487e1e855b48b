#include "hyperdom/eccentricity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hyperdom/bfs.hpp"
#include "hyperdom/errors.hpp"

namespace hyperdom {

double EccentricityTable::mean() const {
    if (ecc.empty()) return 0.0;
    return double(std::accumulate(ecc.begin(), ecc.end(), std::int64_t(0))) / double(ecc.size());
}

EccentricityTable compute_all_eccentricities(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ParameterError("eccentricities need a nonempty graph");

    EccentricityTable table;
    table.ecc.assign(n, -1);
    if (n == 1) {
        table.ecc[0] = 0;
        return table;
    }

    constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
    std::vector<std::int32_t> lower(n, 0), upper(n, kInf);
    std::vector<std::int32_t> dist(n);
    std::size_t unresolved = n;

    // start from a maximum-degree vertex, then alternate between the loosest
    // upper bound and the loosest lower bound
    VertexId next = 0;
    for (VertexId v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(next)) next = v;
    bool pick_upper = true;

    while (unresolved > 0) {
        VertexId root = next;
        bfs_fill(g, root, dist);
        std::int32_t ecc_root = 0;
        for (std::int32_t d : dist) {
            if (d == kUnreached) throw ParameterError("eccentricities need a connected graph");
            ecc_root = std::max(ecc_root, d);
        }
        if (table.ecc[root] == -1) {
            table.ecc[root] = ecc_root;
            --unresolved;
        }
        ++table.bfs_runs;

        std::int32_t best_upper = -1, best_lower = kInf;
        VertexId next_upper = root, next_lower = root;
        for (VertexId v = 0; v < n; ++v) {
            if (table.ecc[v] != -1) continue;
            lower[v] = std::max({lower[v], dist[v], ecc_root - dist[v]});
            upper[v] = std::min(upper[v], dist[v] + ecc_root);
            if (lower[v] == upper[v]) {
                table.ecc[v] = lower[v];
                --unresolved;
                continue;
            }
            if (upper[v] > best_upper || (upper[v] == best_upper && v < next_upper)) {
                best_upper = upper[v];
                next_upper = v;
            }
            if (lower[v] < best_lower || (lower[v] == best_lower && v < next_lower)) {
                best_lower = lower[v];
                next_lower = v;
            }
        }
        next = pick_upper ? next_upper : next_lower;
        pick_upper = !pick_upper;
    }

    table.radius = *std::min_element(table.ecc.begin(), table.ecc.end());
    table.diameter = *std::max_element(table.ecc.begin(), table.ecc.end());
    table.central_vertex = VertexId(std::min_element(table.ecc.begin(), table.ecc.end()) -
                                    table.ecc.begin());
    return table;
}

VertexId pick_central_vertex(const EccentricityTable& table) { return table.central_vertex; }

}  // namespace hyperdom
