#include "hyperdom/bfs.hpp"

#include <algorithm>
#include <limits>

namespace hyperdom {

void bfs_fill(const Graph& g, VertexId source, std::span<std::int32_t> out) {
    std::fill(out.begin(), out.end(), kUnreached);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    out[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        std::int32_t d = out[v] + 1;
        for (VertexId w : g.neighbors(v)) {
            if (out[w] != kUnreached) continue;
            out[w] = d;
            queue.push_back(w);
        }
    }
}

std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source) {
    std::vector<std::int32_t> dist(g.vertex_count());
    bfs_fill(g, source, dist);
    return dist;
}

std::vector<MultiSourceHit> truncated_multi_source_bfs(
    const Graph& g, std::span<const VertexId> sources, std::int32_t radius,
    const std::function<bool(VertexId)>& filter) {
    std::vector<VertexId> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    BfsWorkspace ws(g.vertex_count());
    std::vector<MultiSourceHit> hits;
    auto pass = [&](VertexId v) { return !filter || filter(v); };
    ws.run(g, sorted, radius, pass,
           [&](VertexId v, std::int32_t d, VertexId s) { hits.push_back({v, d, s}); });
    std::sort(hits.begin(), hits.end(),
              [](const MultiSourceHit& a, const MultiSourceHit& b) { return a.vertex < b.vertex; });
    return hits;
}

}  // namespace hyperdom
