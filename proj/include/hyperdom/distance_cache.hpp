#pragma once

#include <array>
#include <cstdint>
#include <list>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperdom/graph.hpp"
#include "hyperdom/hub_labels.hpp"

namespace hyperdom {

// Rectangular block of exact distances between two vertex lists.
struct RectMatrix {
    std::vector<VertexId> rows, cols;
    std::vector<std::int32_t> d;  // rows.size() * cols.size(), row major

    std::int32_t at(std::size_t i, std::size_t j) const { return d[i * cols.size() + j]; }
};

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t bypasses = 0;       // side limit exceeded
    std::uint64_t evictions = 0;
    std::uint64_t label_queries = 0;  // queries spent building matrices
};

// LRU cache of cell-to-cell distance matrices, keyed by (level, dominator,
// dominator); (a,b) and (b,a) are distinct keys. Matrices are handed out as
// shared_ptr so an eviction during recursion never invalidates a frame that
// still holds one. A request whose larger side exceeds `side_limit` returns
// nullptr and the caller queries the labels directly.
class MatrixCache {
public:
    // capacity must be at least 7 (one frame uses up to 7 matrices at once)
    MatrixCache(std::size_t capacity, std::size_t side_limit, bool enabled = true);

    std::shared_ptr<const RectMatrix> get(std::int32_t level, VertexId dom_a, VertexId dom_b,
                                          std::span<const VertexId> cell_a,
                                          std::span<const VertexId> cell_b, const HubLabels& labels);

    const CacheStats& stats() const { return stats_; }
    std::size_t size() const { return entries_.size(); }
    bool enabled() const { return enabled_; }

private:
    struct Key {
        std::int32_t level;
        VertexId a, b;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = (std::uint64_t(std::uint32_t(k.level)) << 40) ^
                              (std::uint64_t(k.a) << 20) ^ std::uint64_t(k.b);
            h ^= h >> 33;
            h *= 0xff51afd7ed558ccdULL;
            h ^= h >> 33;
            return std::size_t(h);
        }
    };
    struct Entry {
        Key key;
        std::shared_ptr<const RectMatrix> matrix;
    };

    // direct-mapped fast path in front of the LRU map; the recursion re-reads
    // the same handful of keys millions of times and the map lookup would
    // dominate. Slots are cleared on eviction so LRU behavior stays exact.
    static constexpr std::size_t kMemoSlots = 64;
    struct MemoSlot {
        Key key{-1, 0, 0};
        std::shared_ptr<const RectMatrix> matrix;
    };
    std::size_t slot_of(const Key& k) const { return KeyHash{}(k) & (kMemoSlots - 1); }

    std::size_t capacity_;
    std::size_t side_limit_;
    bool enabled_;
    std::list<Entry> entries_;  // front = most recent
    std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index_;
    std::array<MemoSlot, kMemoSlots> memo_;
    CacheStats stats_;
};

}  // namespace hyperdom
