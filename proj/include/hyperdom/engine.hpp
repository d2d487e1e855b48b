#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperdom/distance_cache.hpp"
#include "hyperdom/domination.hpp"
#include "hyperdom/doubled.hpp"
#include "hyperdom/eccentricity.hpp"
#include "hyperdom/graph.hpp"
#include "hyperdom/hub_labels.hpp"

namespace hyperdom {

struct EngineConfig {
    std::int32_t max_dom_dist = 2;  // k: top domination distance
    double ratio = 2.0;             // r: shrink factor between levels
    std::size_t cache_capacity = 10000;
    std::size_t matrix_side_limit = 50000;
    bool cache_enabled = true;
    std::uint64_t memory_budget_entries = 2'000'000'000ULL;  // |D_i|^2 guard
    bool pass1_only = false;  // stop after the first sweep: certified +4k approximation
    HubOrdering hub_ordering = HubOrdering::DegreeDescending;
    std::uint64_t hub_seed = 0;
};

struct QuadrupleResult {
    DoubledValue delta;
    std::array<VertexId, 4> witness{0, 0, 0, 0};
};

struct LevelStats {
    std::int32_t k = 0;
    std::size_t dominators = 0;
    std::uint64_t considered = 0;  // quadruples of this level evaluated
    std::uint64_t explored = 0;    // of those, recursed into the level below
    std::uint64_t pair_skips = 0;
    std::vector<std::uint64_t> radius_histogram;  // index = effective radius
};

struct PassStats {
    int pass = 1;
    std::uint64_t pairs_processed = 0;
    std::uint64_t pairs_skipped_radius = 0;
    std::uint64_t pairs_skipped_record = 0;  // pass 2 only
    std::uint64_t self_pairs_processed = 0;
    bool stopped_early = false;
    std::int64_t twice_delta_end = 0;
};

struct EngineTimings {
    double eccentricities = 0, hub_labels = 0, hierarchy = 0, top_matrix = 0;
    double pass1 = 0, pass2 = 0, total = 0;
};

struct RunStats {
    std::vector<LevelStats> levels;  // bottom-up, index = hierarchy level
    std::vector<PassStats> passes;
    std::vector<std::int64_t> delta_trajectory;  // doubled, non-decreasing
    CacheStats cache;
    std::uint64_t direct_label_queries = 0;  // queries outside matrix builds
    EngineTimings timings;
    GraphSummary graph;
    HubLabels::Stats labels;
    std::int32_t radius = 0, diameter = 0;
    double mean_eccentricity = 0.0;
    VertexId central_vertex = 0;
    std::size_t eccentricity_bfs_runs = 0;
    bool brute_forced = false;  // n < 4 short-circuit
};

struct HyperbolicityResult {
    QuadrupleResult best;
    bool approximate = false;  // pass-1-only run
    DoubledValue upper_bound;  // equals delta when exact, delta + 4k when approximate
    RunStats stats;
};

// Exact hyperbolicity via the hierarchical-domination search: build the
// hierarchy, eccentricities, central-vertex distances, hub labels and the
// top-level distance matrix, then sweep the distance-sorted pair agenda
// twice (pass 1 without recursion to raise the lower bound and record
// per-pair upper bounds, pass 2 with recursion). Requires a connected graph.
HyperbolicityResult compute_hyperbolicity(const Graph& g, const EngineConfig& config = {});

// Theta(n^4) oracle over all quadruples; refuses n above `vertex_limit`.
QuadrupleResult brute_force_hyperbolicity(const Graph& g, std::size_t vertex_limit = 600);

// ---- acceptable / valuable classification ------------------------------

struct AccValCandidate {
    std::int32_t d_zx, d_zy;  // distances from the candidate to the pair
    std::int32_t ecc;
    std::int32_t d_zc;    // distance to the central vertex
    std::int32_t radius;  // candidate's effective radius at its level
};

// The three skip conditions plus the central-vertex bound, all in doubled
// integer units (the half-integral inequalities are multiplied through by 2).
// Returns acceptability; `valuable` is meaningful only when the candidate is
// acceptable.
inline bool classify_candidate(const AccValCandidate& c, std::int32_t d_xy, std::int32_t radius_x,
                               std::int32_t radius_y, std::int64_t twice_delta_lower,
                               bool& valuable) {
    const std::int64_t two_dl = twice_delta_lower;
    const std::int64_t kz = c.radius, kx = radius_x, ky = radius_y;

    // (1) d(z,x) + k_z + k_x > delta_L, same for y
    if (2 * (std::int64_t(c.d_zx) + kz + kx) <= two_dl) return false;
    if (2 * (std::int64_t(c.d_zy) + kz + ky) <= two_dl) return false;

    // (2) 2 ecc(z) + d(x,y) - d(z,x) - d(z,y) + 4k_z + 2k_x + 2k_y >= 4 delta_L + 2.
    // The eccentricity lemma proves tau' > delta_L forces >= 4 delta_L + 2, so
    // only a strictly smaller value may be skipped; the boundary stays in.
    const std::int64_t cond2 =
        2 * std::int64_t(c.ecc) + d_xy - c.d_zx - c.d_zy + 4 * kz + 2 * kx + 2 * ky;
    if (cond2 < 2 * two_dl + 2) return false;

    // (3) ecc(z) + d(x,y) - 3 delta_L - 3/2 + 2k_z + k_x + k_y
    //       >= max(d(z,x) - k_x, d(z,y) - k_y)     (everything times 2)
    // Same boundary rule as (2).
    const std::int64_t lhs3 =
        2 * std::int64_t(c.ecc) + 2 * std::int64_t(d_xy) - 3 * two_dl - 3 + 4 * kz + 2 * kx + 2 * ky;
    const std::int64_t rhs3 = 2 * std::max<std::int64_t>(c.d_zx - kx, c.d_zy - ky);
    if (lhs3 < rhs3) return false;

    // valuable: f_c(z) = (d(x,y) - d(x,z) - d(y,z))/2 + d(z,c) + 2k_z + k_x + k_y > delta_L
    const std::int64_t two_fc =
        std::int64_t(d_xy) - c.d_zx - c.d_zy + 2 * std::int64_t(c.d_zc) + 4 * kz + 2 * kx + 2 * ky;
    valuable = two_fc > two_dl;
    return true;
}

struct AccVal {
    std::vector<std::uint32_t> acceptable;  // indices into the candidate list
    std::vector<std::uint32_t> valuable;    // subset of acceptable
};

struct AccValArgs {
    std::int32_t d_xy = 0;
    std::int32_t radius_x = 0, radius_y = 0;
    std::int64_t twice_delta_lower = 0;
    std::span<const std::int32_t> dist_to_x;       // per candidate
    std::span<const std::int32_t> dist_to_y;       // per candidate
    std::span<const std::int32_t> ecc;             // per candidate
    std::span<const std::int32_t> dist_to_center;  // per candidate
    std::span<const std::int32_t> radius;          // per candidate
};

AccVal compute_acc_val(const AccValArgs& args);

// ---- property-check operations ------------------------------------------

struct CheckReport {
    bool ok = true;
    std::uint64_t samples = 0;
    std::string first_violation;
};

// Sampled quadruples against their top-level dominators:
// delta(doms) - K4 <= delta(quad) <= delta(doms) + K4 with K4 the sum of
// effective radii. Needs all-pairs BFS, so the graph must be small.
CheckReport lemma_sandwich_check(const Graph& g, const DominationHierarchy& h,
                                 std::size_t samples, std::uint64_t seed = 1);

// Sampled quadruples against the pruning bounds: the pairwise delta/tau
// bounds, the contrapositives of the two triple conditions at the tightest
// failing delta_L, and the central-vertex inequality.
CheckReport bound_lemmas_check(const Graph& g, const DominationHierarchy& h, std::size_t samples,
                               std::uint64_t seed = 1);

}  // namespace hyperdom
