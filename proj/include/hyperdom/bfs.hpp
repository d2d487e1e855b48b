#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hyperdom/graph.hpp"

namespace hyperdom {

constexpr std::int32_t kUnreached = -1;

// Exact hop distances from `source`; kUnreached where not reachable.
std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source);

// Same, writing into a caller-owned buffer of size n (hot loops).
void bfs_fill(const Graph& g, VertexId source, std::span<std::int32_t> out);

// Reusable truncated multi-source BFS. Traversal covers every vertex within
// `radius` of the source set; the filter only limits which vertices are
// reported. Each reported vertex carries its minimum distance and the
// smallest source id attaining it. That tie-break requires `sources` to be
// passed in ascending id order: the queue then stays grouped by source id
// within each BFS level, so the first discoverer has the minimal label.
class BfsWorkspace {
public:
    explicit BfsWorkspace(std::size_t n) : mark_(n, 0), dist_(n, 0), source_(n, 0), queue_() {
        queue_.reserve(n);
    }

    template <typename Filter, typename Visit>
    void run(const Graph& g, std::span<const VertexId> sources, std::int32_t radius,
             Filter&& filter, Visit&& visit) {
        ++epoch_;
        queue_.clear();
        for (VertexId s : sources) {
            if (mark_[s] == epoch_) continue;
            mark_[s] = epoch_;
            dist_[s] = 0;
            source_[s] = s;
            queue_.push_back(s);
        }
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            VertexId v = queue_[head];
            if (filter(v)) visit(v, dist_[v], source_[v]);
            if (dist_[v] == radius) continue;
            for (VertexId w : g.neighbors(v)) {
                if (mark_[w] == epoch_) continue;
                mark_[w] = epoch_;
                dist_[w] = dist_[v] + 1;
                source_[w] = source_[v];
                queue_.push_back(w);
            }
        }
    }

private:
    std::vector<std::uint32_t> mark_;
    std::vector<std::int32_t> dist_;
    std::vector<VertexId> source_;
    std::vector<VertexId> queue_;
    std::uint32_t epoch_ = 0;
};

struct MultiSourceHit {
    VertexId vertex;
    std::int32_t distance;
    VertexId source;
};

// One-shot wrapper over BfsWorkspace; hits are reported in ascending vertex
// id. Sources need not be sorted; an empty filter admits every vertex.
std::vector<MultiSourceHit> truncated_multi_source_bfs(
    const Graph& g, std::span<const VertexId> sources, std::int32_t radius,
    const std::function<bool(VertexId)>& filter = {});

}  // namespace hyperdom
