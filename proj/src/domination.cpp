#include "hyperdom/domination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hyperdom/bfs.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/rng.hpp"

namespace hyperdom {

std::vector<std::int32_t> derive_sequence(std::int32_t k, double r) {
    if (k < 0) throw ParameterError("max domination distance must be >= 0");
    if (!(r > 1.0)) throw ParameterError("ratio must exceed 1");
    std::vector<std::int32_t> seq{k};
    while (seq.back() > 0) {
        std::int32_t cur = seq.back();
        std::int32_t next = std::min(std::int32_t(std::floor(double(cur) / r)), cur - 1);
        seq.push_back(std::max(next, std::int32_t(0)));
    }
    return seq;
}

namespace {

// Greedy k-domination of `cell` (candidates and coverage restricted to it;
// distances live in the whole graph). Returns the chosen dominators and, via
// the assignment pass, fills dominator_of/radius for the cell's members.
std::vector<VertexId> dominate_cell(const Graph& g, BfsWorkspace& ws, std::int32_t k,
                                    std::span<const VertexId> cell,
                                    std::span<const VertexId> cell_of, VertexId cell_id,
                                    std::vector<char>& dominated, DominationLevel& out) {
    std::vector<VertexId> candidates(cell.begin(), cell.end());
    std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    auto in_cell = [&](VertexId v) { return cell_of.empty() || cell_of[v] == cell_id; };

    std::vector<VertexId> doms;
    for (VertexId c : candidates) {
        if (dominated[c]) continue;
        doms.push_back(c);
        VertexId source[1] = {c};
        ws.run(g, source, k, in_cell, [&](VertexId v, std::int32_t, VertexId) { dominated[v] = 1; });
    }
    std::sort(doms.begin(), doms.end());

    ws.run(g, doms, k, in_cell, [&](VertexId v, std::int32_t d, VertexId s) {
        out.dominator_of[v] = s;
        std::int32_t& rad = out.radius[s];
        if (d > rad) rad = d;
    });
    return doms;
}

}  // namespace

DominationHierarchy hierarchical_dominating_set(const Graph& g,
                                                std::span<const std::int32_t> sequence) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ParameterError("domination needs a nonempty graph");
    if (sequence.empty() || sequence.back() != 0)
        throw ParameterError("domination sequence must end with 0");
    for (std::size_t i = 1; i < sequence.size(); ++i)
        if (sequence[i] >= sequence[i - 1])
            throw ParameterError("domination sequence must be strictly decreasing");

    const std::size_t num_levels = sequence.size();
    DominationHierarchy h;
    h.levels.resize(num_levels);
    // sequence is descending; levels are stored bottom-up
    for (std::size_t j = 0; j < num_levels; ++j) h.levels[j].k = sequence[num_levels - 1 - j];

    BfsWorkspace ws(n);
    std::vector<char> dominated(n, 0);

    for (std::size_t j = num_levels; j-- > 0;) {
        DominationLevel& lvl = h.levels[j];
        lvl.dominator_of.assign(n, 0);
        lvl.radius.assign(n, -1);
        lvl.dominator_index.assign(n, -1);

        if (j == 0 && num_levels > 1) {
            // radius 0: every vertex is its own dominator
            lvl.dominators.resize(n);
            std::iota(lvl.dominators.begin(), lvl.dominators.end(), VertexId(0));
            std::iota(lvl.dominator_of.begin(), lvl.dominator_of.end(), VertexId(0));
            std::fill(lvl.radius.begin(), lvl.radius.end(), 0);
            std::iota(lvl.dominator_index.begin(), lvl.dominator_index.end(), 0);
        } else if (j == num_levels - 1) {
            // top level dominates the whole vertex set
            std::vector<VertexId> all(n);
            std::iota(all.begin(), all.end(), VertexId(0));
            std::fill(dominated.begin(), dominated.end(), 0);
            lvl.dominators = dominate_cell(g, ws, lvl.k, all, {}, 0, dominated, lvl);
            for (std::size_t i = 0; i < lvl.dominators.size(); ++i)
                lvl.dominator_index[lvl.dominators[i]] = std::int32_t(i);
        } else {
            // re-dominate each level-(j+1) cell at radius k_j
            const DominationLevel& parent = h.levels[j + 1];
            std::vector<std::vector<VertexId>> members(parent.dominators.size());
            for (VertexId v = 0; v < n; ++v)
                members[std::size_t(parent.dominator_index[parent.dominator_of[v]])].push_back(v);
            std::fill(dominated.begin(), dominated.end(), 0);
            for (std::size_t pi = 0; pi < parent.dominators.size(); ++pi) {
                VertexId u = parent.dominators[pi];
                auto doms = dominate_cell(g, ws, lvl.k, members[pi], parent.dominator_of, u,
                                          dominated, lvl);
                lvl.dominators.insert(lvl.dominators.end(), doms.begin(), doms.end());
            }
            std::sort(lvl.dominators.begin(), lvl.dominators.end());
            for (std::size_t i = 0; i < lvl.dominators.size(); ++i)
                lvl.dominator_index[lvl.dominators[i]] = std::int32_t(i);
        }

        // children: for each level-(j+1) dominator, the level-j dominators in its cell
        if (j + 1 < num_levels) {
            DominationLevel& parent = h.levels[j + 1];
            parent.children.assign(parent.dominators.size(), {});
            for (VertexId d : lvl.dominators)
                parent.children[std::size_t(parent.dominator_index[parent.dominator_of[d]])]
                    .push_back(d);
        }
    }
    return h;
}

namespace {

std::string violation(std::size_t level, const std::string& what) {
    std::ostringstream out;
    out << "level " << level << ": " << what;
    return out.str();
}

}  // namespace

HierarchyReport hierarchy_check(const Graph& g, const DominationHierarchy& h, std::uint64_t seed,
                                std::size_t sample_cap) {
    const std::size_t n = g.vertex_count();
    HierarchyReport report;
    auto fail = [&](std::size_t level, const std::string& what) {
        report.ok = false;
        report.detail = violation(level, what);
    };

    if (h.levels.empty()) {
        fail(0, "no levels");
        return report;
    }

    // bottom level is all of V at radius 0
    const DominationLevel& bottom = h.levels[0];
    if (bottom.k != 0 || bottom.dominators.size() != n) {
        fail(0, "bottom level must be V at radius 0");
        return report;
    }

    for (std::size_t j = 0; j < h.levels.size() && report.ok; ++j) {
        const DominationLevel& lvl = h.levels[j];
        if (lvl.dominator_of.size() != n || lvl.radius.size() != n) {
            fail(j, "assignment arrays malformed");
            break;
        }
        // partition + membership invariants
        for (VertexId v = 0; v < n && report.ok; ++v) {
            VertexId d = lvl.dominator_of[v];
            if (d >= n || lvl.dominator_index[d] < 0) fail(j, "vertex assigned to a non-dominator");
        }
        for (VertexId d : lvl.dominators) {
            if (lvl.dominator_of[d] != d) {
                fail(j, "dominator not in its own cell");
                break;
            }
            if (lvl.radius[d] < 0 || lvl.radius[d] > lvl.k) {
                fail(j, "effective radius outside [0, k]");
                break;
            }
        }
        if (!report.ok) break;

        // nesting against the level above
        if (j + 1 < h.levels.size()) {
            const DominationLevel& up = h.levels[j + 1];
            for (VertexId v = 0; v < n; ++v)
                if (up.dominator_of[lvl.dominator_of[v]] != up.dominator_of[v]) {
                    fail(j, "level-j dominator escapes the level-(j+1) cell");
                    break;
                }
        }
        if (!report.ok) break;

        // distance checks: radius bound and tightness per dominator, by BFS
        std::vector<std::size_t> cell_size(n, 0);
        for (VertexId v = 0; v < n; ++v) ++cell_size[lvl.dominator_of[v]];
        std::vector<VertexId> sample(lvl.dominators);
        if (sample.size() > sample_cap) {
            std::mt19937_64 gen(seed + j);
            rng::shuffle(sample, gen);
            sample.resize(sample_cap);
        }
        BfsWorkspace ws(n);
        for (VertexId d : sample) {
            std::int32_t seen_max = -1;
            std::size_t covered = 0;
            VertexId source[1] = {d};
            ws.run(
                g, source, lvl.radius[d], [&](VertexId v) { return lvl.dominator_of[v] == d; },
                [&](VertexId, std::int32_t dist, VertexId) {
                    seen_max = std::max(seen_max, dist);
                    ++covered;
                });
            if (covered != cell_size[d]) {
                fail(j, "cell member farther than the recorded radius");
                break;
            }
            if (seen_max != lvl.radius[d]) {
                fail(j, "recorded radius is not tight");
                break;
            }
        }
        if (!report.ok) break;
    }
    return report;
}

}  // namespace hyperdom
