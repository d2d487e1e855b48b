#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "hyperdom/graph.hpp"

namespace hyperdom {

enum class HubOrdering {
    DegreeDescending,  // default; id ascending on ties
    RandomSeeded,      // exactness is ordering independent, label sizes are not
};

// 2-hop distance labels built by pruned BFS from vertices in hub order.
// Cover property: for every pair (u,v) some hub on a shortest u-v path
// appears in both labels with exact distances, so a merge of the two sorted
// lists yields d(u,v).
class HubLabels {
public:
    static HubLabels build(const Graph& g, HubOrdering ordering = HubOrdering::DegreeDescending,
                           std::uint64_t seed = 0);

    std::int32_t query(VertexId u, VertexId v) const {
        std::size_t i = offsets_[u], iend = offsets_[u + 1];
        std::size_t j = offsets_[v], jend = offsets_[v + 1];
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        while (i < iend && j < jend) {
            VertexId hu = hubs_[i], hv = hubs_[j];
            if (hu == hv) {
                std::int32_t sum = dists_[i] + dists_[j];
                if (sum < best) best = sum;
                ++i;
                ++j;
            } else if (hu < hv) {
                ++i;
            } else {
                ++j;
            }
        }
        return best;
    }

    std::size_t label_size(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const VertexId> label_hubs(VertexId v) const {
        return {hubs_.data() + offsets_[v], hubs_.data() + offsets_[v + 1]};
    }
    std::span<const std::int32_t> label_dists(VertexId v) const {
        return {dists_.data() + offsets_[v], dists_.data() + offsets_[v + 1]};
    }
    const std::vector<VertexId>& construction_order() const { return order_; }
    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

    struct Stats {
        double mean_label_size = 0.0;
        std::size_t max_label_size = 0;
        std::size_t total_entries = 0;
    };
    Stats stats() const;

    // one line per vertex: "v: (h1,d1) (h2,d2) ..."
    void dump(std::ostream& out) const;

private:
    std::vector<std::size_t> offsets_;  // n+1
    std::vector<VertexId> hubs_;        // sorted by hub id within each label
    std::vector<std::int32_t> dists_;
    std::vector<VertexId> order_;       // hub construction order
};

}  // namespace hyperdom
