#include "hyperdom/distance_cache.hpp"

#include <algorithm>

#include "hyperdom/errors.hpp"

namespace hyperdom {

MatrixCache::MatrixCache(std::size_t capacity, std::size_t side_limit, bool enabled)
    : capacity_(capacity), side_limit_(side_limit), enabled_(enabled) {
    if (capacity_ < 7) throw ParameterError("matrix cache capacity must be at least 7");
}

std::shared_ptr<const RectMatrix> MatrixCache::get(std::int32_t level, VertexId dom_a,
                                                   VertexId dom_b,
                                                   std::span<const VertexId> cell_a,
                                                   std::span<const VertexId> cell_b,
                                                   const HubLabels& labels) {
    if (!enabled_) return nullptr;
    if (std::max(cell_a.size(), cell_b.size()) > side_limit_) {
        ++stats_.bypasses;
        return nullptr;
    }
    Key key{level, dom_a, dom_b};
    MemoSlot& slot = memo_[slot_of(key)];
    if (slot.key == key) {
        ++stats_.hits;
        return slot.matrix;
    }
    if (auto it = index_.find(key); it != index_.end()) {
        ++stats_.hits;
        if (it->second != entries_.begin())
            entries_.splice(entries_.begin(), entries_, it->second);
        slot.key = key;
        slot.matrix = entries_.front().matrix;
        return slot.matrix;
    }

    ++stats_.misses;
    auto matrix = std::make_shared<RectMatrix>();
    matrix->rows.assign(cell_a.begin(), cell_a.end());
    matrix->cols.assign(cell_b.begin(), cell_b.end());
    matrix->d.resize(cell_a.size() * cell_b.size());
    std::size_t pos = 0;
    for (VertexId a : cell_a)
        for (VertexId b : cell_b) matrix->d[pos++] = labels.query(a, b);
    stats_.label_queries += matrix->d.size();

    entries_.push_front(Entry{key, matrix});
    index_.emplace(key, entries_.begin());
    slot.key = key;
    slot.matrix = matrix;
    if (entries_.size() > capacity_) {
        const Key& victim = entries_.back().key;
        MemoSlot& vslot = memo_[slot_of(victim)];
        if (vslot.key == victim) vslot = MemoSlot{};
        index_.erase(victim);
        entries_.pop_back();
        ++stats_.evictions;
    }
    return matrix;
}

}  // namespace hyperdom
