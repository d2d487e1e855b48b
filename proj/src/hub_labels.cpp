#include "hyperdom/hub_labels.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "hyperdom/errors.hpp"
#include "hyperdom/rng.hpp"

namespace hyperdom {

HubLabels HubLabels::build(const Graph& g, HubOrdering ordering, std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ParameterError("hub labels need a nonempty graph");

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId(0));
    if (ordering == HubOrdering::DegreeDescending) {
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    } else {
        std::mt19937_64 gen(seed);
        rng::shuffle(order, gen);
    }

    constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
    // labels under construction, hubs stored as ranks (ascending per label)
    std::vector<std::vector<std::pair<std::uint32_t, std::int32_t>>> label(n);
    std::vector<std::int32_t> hub_dist(n, kInf);  // rank-indexed scratch for queries
    std::vector<std::int32_t> dist(n, -1);
    std::vector<VertexId> queue;
    queue.reserve(n);
    std::vector<VertexId> touched;
    touched.reserve(n);

    for (std::uint32_t rank = 0; rank < n; ++rank) {
        VertexId hub = order[rank];
        for (auto [r, d] : label[hub]) hub_dist[r] = d;

        queue.clear();
        touched.clear();
        dist[hub] = 0;
        queue.push_back(hub);
        touched.push_back(hub);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            std::int32_t d = dist[v];
            // prune when the current labels already certify d(hub, v) <= d
            std::int32_t certified = kInf;
            for (auto [r, dv] : label[v]) {
                std::int32_t dh = hub_dist[r];
                if (dh != kInf && dh + dv < certified) certified = dh + dv;
            }
            if (certified <= d) continue;
            label[v].emplace_back(rank, d);
            for (VertexId w : g.neighbors(v)) {
                if (dist[w] != -1) continue;
                dist[w] = d + 1;
                queue.push_back(w);
                touched.push_back(w);
            }
        }

        for (VertexId v : touched) dist[v] = -1;
        for (auto [r, d] : label[hub]) hub_dist[r] = kInf;
    }

    HubLabels out;
    out.order_ = std::move(order);
    out.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) out.offsets_[v + 1] = out.offsets_[v] + label[v].size();
    out.hubs_.resize(out.offsets_[n]);
    out.dists_.resize(out.offsets_[n]);
    std::vector<std::pair<VertexId, std::int32_t>> entries;
    for (std::size_t v = 0; v < n; ++v) {
        entries.clear();
        for (auto [r, d] : label[v]) entries.emplace_back(out.order_[r], d);
        std::sort(entries.begin(), entries.end());
        std::size_t base = out.offsets_[v];
        for (std::size_t i = 0; i < entries.size(); ++i) {
            out.hubs_[base + i] = entries[i].first;
            out.dists_[base + i] = entries[i].second;
        }
    }
    return out;
}

HubLabels::Stats HubLabels::stats() const {
    Stats s;
    std::size_t n = vertex_count();
    s.total_entries = hubs_.size();
    for (std::size_t v = 0; v < n; ++v) s.max_label_size = std::max(s.max_label_size, label_size(VertexId(v)));
    s.mean_label_size = n ? double(s.total_entries) / double(n) : 0.0;
    return s;
}

void HubLabels::dump(std::ostream& out) const {
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        out << v << ':';
        auto hubs = label_hubs(VertexId(v));
        auto dists = label_dists(VertexId(v));
        for (std::size_t i = 0; i < hubs.size(); ++i)
            out << " (" << hubs[i] << ',' << dists[i] << ')';
        out << '\n';
    }
}

}  // namespace hyperdom
