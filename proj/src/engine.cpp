#include "hyperdom/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "hyperdom/bfs.hpp"
#include "hyperdom/errors.hpp"

namespace hyperdom {

AccVal compute_acc_val(const AccValArgs& args) {
    const std::size_t n = args.dist_to_x.size();
    if (args.dist_to_y.size() != n || args.ecc.size() != n || args.dist_to_center.size() != n ||
        args.radius.size() != n)
        throw ParameterError("compute_acc_val: candidate arrays must have equal length");
    AccVal out;
    for (std::size_t i = 0; i < n; ++i) {
        AccValCandidate c{args.dist_to_x[i], args.dist_to_y[i], args.ecc[i],
                          args.dist_to_center[i], args.radius[i]};
        bool valuable = false;
        if (classify_candidate(c, args.d_xy, args.radius_x, args.radius_y,
                               args.twice_delta_lower, valuable)) {
            out.acceptable.push_back(std::uint32_t(i));
            if (valuable) out.valuable.push_back(std::uint32_t(i));
        }
    }
    return out;
}

QuadrupleResult brute_force_hyperbolicity(const Graph& g, std::size_t vertex_limit) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ParameterError("brute force needs a nonempty graph");
    if (n > vertex_limit)
        throw ParameterError("brute force refused: n = " + std::to_string(n) + " exceeds limit " +
                             std::to_string(vertex_limit));
    QuadrupleResult best;  // delta 0 with a degenerate witness covers n < 4
    if (n < 4) return best;
    if (!is_connected(g)) throw ParameterError("brute force needs a connected graph");

    std::vector<std::int32_t> dist(n * n);
    for (VertexId v = 0; v < n; ++v)
        bfs_fill(g, v, std::span<std::int32_t>(dist.data() + std::size_t(v) * n, n));
    auto d = [&](std::size_t a, std::size_t b) { return std::int64_t(dist[a * n + b]); };

    best.witness = {0, 1, 2, 3};
    best.delta.twice = twice_delta4(d(0, 1), d(2, 3), d(0, 2), d(1, 3), d(0, 3), d(1, 2));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t e = c + 1; e < n; ++e) {
                    std::int64_t t =
                        twice_delta4(d(a, b), d(c, e), d(a, c), d(b, e), d(a, e), d(b, c));
                    if (t > best.delta.twice) {
                        best.delta.twice = t;
                        best.witness = {VertexId(a), VertexId(b), VertexId(c), VertexId(e)};
                    }
                }
    return best;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// distances between two cells, either a cached matrix or direct label queries
struct CellDist {
    std::shared_ptr<const RectMatrix> matrix;
    std::span<const VertexId> rows, cols;
    const HubLabels* labels = nullptr;
    std::uint64_t* direct_queries = nullptr;

    std::int32_t at(std::size_t i, std::size_t j) const {
        if (matrix) return matrix->d[i * cols.size() + j];
        ++*direct_queries;
        return labels->query(rows[i], cols[j]);
    }
};

// classification output for one cell against a fixed pair (x', y'), split
// into valuable and acceptable-but-not-valuable. The distances seen during
// classification are kept so the quadruple loop does a single matrix access
// per tau. The split lets the role passes enumerate each unordered (u',v')
// combination exactly once: tau is symmetric in u' and v', so a pair of two
// valuable vertices needs only one orientation.
struct ClassifyWs {
    std::vector<std::uint32_t> acc_idx;  // acceptable and not valuable
    std::vector<std::int32_t> acc_dx, acc_dy;
    std::vector<std::uint32_t> val_idx;
    std::vector<std::int32_t> val_dx, val_dy;
    void clear() {
        acc_idx.clear();
        acc_dx.clear();
        acc_dy.clear();
        val_idx.clear();
        val_dx.clear();
        val_dy.clear();
    }
};

struct AgendaEntry {
    std::int32_t dist;
    std::uint32_t xi, yi;  // indices into the top dominator list
};

struct SearchContext {
    const Graph& g;
    const EngineConfig& config;
    const DominationHierarchy& hier;
    const EccentricityTable& ecc;
    const HubLabels& labels;
    const std::vector<std::int32_t>& dist_center;

    std::span<const VertexId> doms;          // top-level dominators
    const std::vector<std::int32_t>& top_rad;  // top-level effective radii (per vertex)
    std::vector<std::int32_t> top_dist;      // |D|^2
    std::int32_t k_top;
    std::size_t top;

    MatrixCache cache;
    RunStats& stats;

    std::int64_t twice_dl = 0;
    std::array<VertexId, 4> witness{0, 0, 0, 0};

    // top-level classification scratch
    std::vector<std::uint32_t> acc_stamp;
    std::vector<std::uint32_t> val_stamp;
    std::uint32_t stamp = 0;
    std::vector<std::uint32_t> top_val;
    std::vector<std::vector<std::uint32_t>> mates;

    // per-level scratch for explore
    std::vector<ClassifyWs> ws_u, ws_v;

    SearchContext(const Graph& graph, const EngineConfig& cfg, const DominationHierarchy& h,
                  const EccentricityTable& e, const HubLabels& l,
                  const std::vector<std::int32_t>& center, RunStats& rs)
        : g(graph),
          config(cfg),
          hier(h),
          ecc(e),
          labels(l),
          dist_center(center),
          doms(h.top_level().dominators),
          top_rad(h.top_level().radius),
          k_top(h.top_level().k),
          top(h.top()),
          cache(cfg.cache_capacity, cfg.matrix_side_limit, cfg.cache_enabled),
          stats(rs),
          acc_stamp(h.top_level().dominators.size(), 0),
          val_stamp(h.top_level().dominators.size(), 0),
          mates(h.top_level().dominators.size()),
          ws_u(h.levels.size()),
          ws_v(h.levels.size()) {}

    std::int32_t top_d(std::size_t i, std::size_t j) const {
        return top_dist[i * doms.size() + j];
    }

    void improve(std::int64_t twice_tau, VertexId a, VertexId b, VertexId c, VertexId d) {
        if (twice_tau > twice_dl) {
            twice_dl = twice_tau;
            witness = {a, b, c, d};
            stats.delta_trajectory.push_back(twice_tau);
        }
    }

    CellDist fetch(std::int32_t level, VertexId dom_a, VertexId dom_b,
                   std::span<const VertexId> cell_a, std::span<const VertexId> cell_b) {
        CellDist cd;
        cd.matrix = cache.get(level, dom_a, dom_b, cell_a, cell_b, labels);
        cd.rows = cell_a;
        cd.cols = cell_b;
        cd.labels = &labels;
        cd.direct_queries = &stats.direct_label_queries;
        return cd;
    }

    // kLeaf: level-0 cells, where every effective radius is 0 by construction
    // and the constant-folded conditions are noticeably cheaper
    template <bool kLeaf>
    void classify_cell(std::span<const VertexId> cell, const CellDist& to_x, std::size_t xi,
                       const CellDist& to_y, std::size_t yi, std::int32_t d_xy, std::int32_t rx,
                       std::int32_t ry, const std::vector<std::int32_t>& rad, ClassifyWs& ws) {
        ws.clear();
        for (std::size_t i = 0; i < cell.size(); ++i) {
            VertexId z = cell[i];
            AccValCandidate c{to_x.at(i, xi), to_y.at(i, yi), ecc.ecc[z], dist_center[z],
                              kLeaf ? 0 : rad[z]};
            bool valuable = false;
            if (classify_candidate(c, d_xy, kLeaf ? 0 : rx, kLeaf ? 0 : ry, twice_dl, valuable)) {
                if (valuable) {
                    ws.val_idx.push_back(std::uint32_t(i));
                    ws.val_dx.push_back(c.d_zx);
                    ws.val_dy.push_back(c.d_zy);
                } else {
                    ws.acc_idx.push_back(std::uint32_t(i));
                    ws.acc_dx.push_back(c.d_zx);
                    ws.acc_dy.push_back(c.d_zy);
                }
            }
        }
    }

    // Children-level refinement of quadruple (u,v,x,y) in D_{j+1}; children
    // live at level j with their own effective radii. Updates twice_dl.
    std::int64_t explore(VertexId u, VertexId v, VertexId x, VertexId y, std::int32_t j) {
        if (j < 0) {
            stats.direct_label_queries += 6;
            std::int64_t tt = twice_tau4(labels.query(u, v), labels.query(x, y),
                                         labels.query(u, x), labels.query(v, y),
                                         labels.query(u, y), labels.query(v, x));
            improve(tt, u, v, x, y);
            return tt;
        }
        // level 0 has zero radii everywhere: no skip slack, no recursion gate
        if (j == 0) return explore_frame<true>(u, v, x, y, 0);
        return explore_frame<false>(u, v, x, y, j);
    }

    template <bool kLeaf>
    std::int64_t explore_frame(VertexId u, VertexId v, VertexId x, VertexId y, std::int32_t j) {
        auto cu = hier.children_of(std::size_t(j) + 1, u);
        auto cv = hier.children_of(std::size_t(j) + 1, v);
        auto cx = hier.children_of(std::size_t(j) + 1, x);
        auto cy = hier.children_of(std::size_t(j) + 1, y);

        CellDist m_uv = fetch(j, u, v, cu, cv);
        CellDist m_vu = fetch(j, v, u, cv, cu);
        CellDist m_ux = fetch(j, u, x, cu, cx);
        CellDist m_uy = fetch(j, u, y, cu, cy);
        CellDist m_vx = fetch(j, v, x, cv, cx);
        CellDist m_vy = fetch(j, v, y, cv, cy);
        CellDist m_xy = fetch(j, x, y, cx, cy);

        const std::vector<std::int32_t>& rad = hier.levels[std::size_t(j)].radius;
        LevelStats& lstats = stats.levels[std::size_t(j)];
        ClassifyWs& wu = ws_u[std::size_t(j)];
        ClassifyWs& wv = ws_v[std::size_t(j)];

        for (std::size_t xi = 0; xi < cx.size(); ++xi) {
            VertexId x2 = cx[xi];
            // same cell on both sides: the pair space is symmetric, walk it once
            for (std::size_t yi = (x == y ? xi : 0); yi < cy.size(); ++yi) {
                VertexId y2 = cy[yi];
                std::int32_t d_xy = m_xy.at(xi, yi);
                const std::int64_t rad_pair = kLeaf ? 0 : std::int64_t(rad[x2]) + rad[y2];
                if (std::int64_t(d_xy) + rad_pair <= twice_dl) {
                    ++lstats.pair_skips;
                    continue;
                }
                classify_cell<kLeaf>(cu, m_ux, xi, m_uy, yi, d_xy, rad[x2], rad[y2], rad, wu);
                if (v != u)
                    classify_cell<kLeaf>(cv, m_vx, xi, m_vy, yi, d_xy, rad[x2], rad[y2], rad, wv);
                const ClassifyWs& wv_eff = (v == u) ? wu : wv;

                // one block of (valuable a) x (list b) quadruples; triangular
                // walks the symmetric same-list case without duplicates
                auto block = [&](const std::vector<std::uint32_t>& ia,
                                 const std::vector<std::int32_t>& adx,
                                 const std::vector<std::int32_t>& ady,
                                 std::span<const VertexId> ca,
                                 const std::vector<std::uint32_t>& ib,
                                 const std::vector<std::int32_t>& bdx,
                                 const std::vector<std::int32_t>& bdy,
                                 std::span<const VertexId> cb, const CellDist& m_ab,
                                 bool triangular) {
                    for (std::size_t ap = 0; ap < ia.size(); ++ap) {
                        std::uint32_t ui = ia[ap];
                        VertexId u2 = ca[ui];
                        std::int32_t d_ux = adx[ap];
                        std::int32_t d_uy = ady[ap];
                        [[maybe_unused]] std::int64_t rad_u = kLeaf ? 0 : rad[u2];
                        const std::size_t b0 = triangular ? ap : 0;
                        lstats.considered += ib.size() - b0;
                        for (std::size_t bp = b0; bp < ib.size(); ++bp) {
                            std::uint32_t vi = ib[bp];
                            std::int64_t tt = twice_tau4(m_ab.at(ui, vi), d_xy, d_ux, bdy[bp],
                                                         d_uy, bdx[bp]);
                            if (tt > twice_dl) improve(tt, u2, cb[vi], x2, y2);
                            if constexpr (!kLeaf) {
                                // below the leaf the gate can still fire
                                VertexId v2 = cb[vi];
                                std::int64_t k4 = 2 * (rad_u + rad[v2] + rad_pair);
                                if (tt + k4 > twice_dl) {
                                    ++lstats.explored;
                                    explore(u2, v2, x2, y2, j - 1);
                                }
                            }
                        }
                    }
                };
                if (u != v) {
                    // valuable(u-cell) against everything acceptable across, then
                    // valuable(v-cell) against the not-valuable rest
                    block(wu.val_idx, wu.val_dx, wu.val_dy, cu, wv_eff.val_idx, wv_eff.val_dx,
                          wv_eff.val_dy, cv, m_uv, false);
                    block(wu.val_idx, wu.val_dx, wu.val_dy, cu, wv_eff.acc_idx, wv_eff.acc_dx,
                          wv_eff.acc_dy, cv, m_uv, false);
                    block(wv_eff.val_idx, wv_eff.val_dx, wv_eff.val_dy, cv, wu.acc_idx,
                          wu.acc_dx, wu.acc_dy, cu, m_vu, false);
                } else {
                    block(wu.val_idx, wu.val_dx, wu.val_dy, cu, wu.val_idx, wu.val_dx, wu.val_dy,
                          cu, m_uv, true);
                    block(wu.val_idx, wu.val_dx, wu.val_dy, cu, wu.acc_idx, wu.acc_dx, wu.acc_dy,
                          cu, m_uv, false);
                }
            }
        }
        return twice_dl;
    }

    // one sweep over the agenda; pass 1 records per-pair bounds, pass 2 explores
    void run_pass(int pass_no, std::span<const AgendaEntry> agenda, std::vector<std::int64_t>& record) {
        PassStats ps;
        ps.pass = pass_no;
        const bool do_explore = pass_no == 2;
        for (auto& m : mates) m.clear();
        LevelStats& top_stats = stats.levels[top];

        for (std::size_t idx = 0; idx < agenda.size(); ++idx) {
            const AgendaEntry& entry = agenda[idx];
            const bool self = entry.xi == entry.yi;
            if (std::int64_t(entry.dist) + 2 * std::int64_t(k_top) <= twice_dl) {
                ps.stopped_early = true;
                break;
            }
            if (self && twice_dl >= 4 * std::int64_t(k_top)) break;  // self-pair section over

            VertexId x = doms[entry.xi], y = doms[entry.yi];
            std::int32_t rx = top_rad[x], ry = top_rad[y];
            if (std::int64_t(entry.dist) + rx + ry <= twice_dl) {
                ++ps.pairs_skipped_radius;
                ++top_stats.pair_skips;
                continue;  // no mates update: the bound holds for either pair role
            }
            if (do_explore && record[idx] <= twice_dl) {
                ++ps.pairs_skipped_record;
                mates[entry.xi].push_back(entry.yi);
                if (!self) mates[entry.yi].push_back(entry.xi);
                continue;
            }

            // classify all top dominators against (x, y)
            ++stamp;
            top_val.clear();
            for (std::size_t di = 0; di < doms.size(); ++di) {
                VertexId z = doms[di];
                AccValCandidate c{top_d(di, entry.xi), top_d(di, entry.yi), ecc.ecc[z],
                                  dist_center[z], top_rad[z]};
                bool valuable = false;
                if (classify_candidate(c, entry.dist, rx, ry, twice_dl, valuable)) {
                    acc_stamp[di] = stamp;
                    if (valuable) {
                        val_stamp[di] = stamp;
                        top_val.push_back(std::uint32_t(di));
                    }
                }
            }

            for (std::uint32_t ui : top_val) {
                VertexId u = doms[ui];
                for (std::uint32_t vi : mates[ui]) {
                    if (acc_stamp[vi] != stamp) continue;
                    // tau is symmetric in (u,v): a pair of two valuable mates
                    // shows up in both orientations, walk it once
                    if (val_stamp[vi] == stamp && vi < ui) continue;
                    VertexId v = doms[vi];
                    ++top_stats.considered;
                    std::int64_t tt = twice_tau4(top_d(ui, vi), entry.dist, top_d(ui, entry.xi),
                                                 top_d(vi, entry.yi), top_d(ui, entry.yi),
                                                 top_d(vi, entry.xi));
                    improve(tt, u, v, x, y);
                    std::int64_t tub =
                        tt + 2 * (std::int64_t(top_rad[u]) + top_rad[v] + rx + ry);
                    if (!do_explore) {
                        if (tub > record[idx]) record[idx] = tub;
                    } else if (tub > twice_dl) {
                        ++top_stats.explored;
                        explore(u, v, x, y, std::int32_t(top) - 1);
                    }
                }
            }

            {
                // the pair against itself: the quadruple (x,y,x,y) has tau = 0
                // and is never produced by the mates loop, but its dominated
                // block can still hold the maximum (both legs in cell(x) and
                // cell(y))
                ++top_stats.considered;
                std::int64_t tub = 4 * (std::int64_t(rx) + ry);
                if (!do_explore) {
                    if (tub > record[idx]) record[idx] = tub;
                } else if (tub > twice_dl) {
                    ++top_stats.explored;
                    explore(x, y, x, y, std::int32_t(top) - 1);
                }
            }
            if (self) ++ps.self_pairs_processed;

            ++ps.pairs_processed;
            mates[entry.xi].push_back(entry.yi);
            if (!self) mates[entry.yi].push_back(entry.xi);
        }

        ps.twice_delta_end = twice_dl;
        stats.passes.push_back(ps);
    }
};

}  // namespace

HyperbolicityResult compute_hyperbolicity(const Graph& g, const EngineConfig& config) {
    const auto t_start = Clock::now();
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ParameterError("hyperbolicity needs a nonempty graph");
    if (config.max_dom_dist < 0) throw ParameterError("max domination distance must be >= 0");
    if (!(config.ratio > 1.0)) throw ParameterError("ratio must exceed 1");
    if (!is_connected(g))
        throw ParameterError("input graph must be connected (extract a component first)");

    HyperbolicityResult result;
    result.stats.graph = graph_summary(g);

    if (n < 4) {
        // every quadruple repeats a vertex, so delta is 0
        result.stats.brute_forced = true;
        result.upper_bound = result.best.delta;
        result.stats.timings.total = seconds_since(t_start);
        return result;
    }

    auto sequence = derive_sequence(config.max_dom_dist, config.ratio);

    auto t0 = Clock::now();
    DominationHierarchy hier = hierarchical_dominating_set(g, sequence);
    result.stats.timings.hierarchy = seconds_since(t0);

    t0 = Clock::now();
    EccentricityTable ecc = compute_all_eccentricities(g);
    result.stats.timings.eccentricities = seconds_since(t0);
    VertexId center = pick_central_vertex(ecc);
    std::vector<std::int32_t> dist_center = bfs_distances(g, center);

    t0 = Clock::now();
    HubLabels labels = HubLabels::build(g, config.hub_ordering, config.hub_seed);
    result.stats.timings.hub_labels = seconds_since(t0);

    RunStats& stats = result.stats;
    stats.labels = labels.stats();
    stats.radius = ecc.radius;
    stats.diameter = ecc.diameter;
    stats.mean_eccentricity = ecc.mean();
    stats.central_vertex = center;
    stats.eccentricity_bfs_runs = ecc.bfs_runs;
    stats.levels.resize(hier.levels.size());
    for (std::size_t j = 0; j < hier.levels.size(); ++j) {
        const DominationLevel& lvl = hier.levels[j];
        stats.levels[j].k = lvl.k;
        stats.levels[j].dominators = lvl.dominators.size();
        stats.levels[j].radius_histogram.assign(std::size_t(lvl.k) + 1, 0);
        for (VertexId d : lvl.dominators)
            ++stats.levels[j].radius_histogram[std::size_t(lvl.radius[d])];
    }

    // top-level distance matrix, one BFS per dominator
    const std::span<const VertexId> doms = hier.top_level().dominators;
    const std::size_t ds = doms.size();
    if (std::uint64_t(ds) * ds > config.memory_budget_entries)
        throw MemoryBudgetError("top-level matrix needs " + std::to_string(std::uint64_t(ds) * ds) +
                                " entries, over the budget of " +
                                std::to_string(config.memory_budget_entries) +
                                "; increase --max-dom-dist or the budget");
    t0 = Clock::now();
    SearchContext ctx(g, config, hier, ecc, labels, dist_center, stats);
    ctx.top_dist.resize(ds * ds);
    {
        std::vector<std::int32_t> row(n);
        for (std::size_t i = 0; i < ds; ++i) {
            bfs_fill(g, doms[i], row);
            for (std::size_t j = 0; j < ds; ++j) ctx.top_dist[i * ds + j] = row[doms[j]];
        }
    }
    stats.timings.top_matrix = seconds_since(t0);

    // pair agenda: non-increasing distance, lexicographic tie-break, then
    // self-pairs (only useful while delta_L < 2k, so only when k > 0)
    std::vector<AgendaEntry> agenda;
    agenda.reserve(ds * (ds - 1) / 2 + ds);
    for (std::uint32_t i = 0; i < ds; ++i)
        for (std::uint32_t j = i + 1; j < ds; ++j)
            agenda.push_back({ctx.top_d(i, j), i, j});
    std::sort(agenda.begin(), agenda.end(), [](const AgendaEntry& a, const AgendaEntry& b) {
        if (a.dist != b.dist) return a.dist > b.dist;
        if (a.xi != b.xi) return a.xi < b.xi;
        return a.yi < b.yi;
    });
    if (ctx.k_top > 0)
        for (std::uint32_t i = 0; i < ds; ++i) agenda.push_back({0, i, i});

    std::vector<std::int64_t> record(agenda.size(), std::numeric_limits<std::int64_t>::min());
    stats.delta_trajectory.push_back(0);

    t0 = Clock::now();
    ctx.run_pass(1, agenda, record);
    stats.timings.pass1 = seconds_since(t0);

    if (config.pass1_only) {
        result.approximate = true;
        result.best.delta.twice = ctx.twice_dl;
        result.best.witness = ctx.witness;
        result.upper_bound.twice = ctx.twice_dl + 8 * std::int64_t(config.max_dom_dist);
    } else {
        t0 = Clock::now();
        ctx.run_pass(2, agenda, record);
        stats.timings.pass2 = seconds_since(t0);
        result.best.delta.twice = ctx.twice_dl;
        result.best.witness = ctx.witness;
        result.upper_bound = result.best.delta;
    }

    stats.cache = ctx.cache.stats();
    stats.timings.total = seconds_since(t_start);
    return result;
}

}  // namespace hyperdom
