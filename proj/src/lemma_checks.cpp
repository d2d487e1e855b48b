#include <sstream>
#include <tuple>

#include "hyperdom/bfs.hpp"
#include "hyperdom/engine.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/rng.hpp"

namespace hyperdom {

namespace {

constexpr std::size_t kAllPairsLimit = 4000;

struct AllPairs {
    std::size_t n;
    std::vector<std::int32_t> d;
    explicit AllPairs(const Graph& g) : n(g.vertex_count()), d(n * n) {
        if (n > kAllPairsLimit)
            throw ParameterError("lemma checks need all-pairs distances; graph too large");
        for (VertexId v = 0; v < n; ++v)
            bfs_fill(g, v, std::span<std::int32_t>(d.data() + std::size_t(v) * n, n));
    }
    std::int64_t operator()(VertexId a, VertexId b) const { return d[std::size_t(a) * n + b]; }
};

std::string describe_quad(const char* what, std::uint64_t sample,
                          const std::array<VertexId, 4>& q) {
    std::ostringstream out;
    out << what << " violated at sample " << sample << " quadruple (" << q[0] << "," << q[1] << ","
        << q[2] << "," << q[3] << ")";
    return out.str();
}

}  // namespace

CheckReport lemma_sandwich_check(const Graph& g, const DominationHierarchy& h, std::size_t samples,
                                 std::uint64_t seed) {
    AllPairs d(g);
    const DominationLevel& top = h.top_level();
    std::mt19937_64 gen(seed);
    CheckReport report;
    for (std::size_t s = 0; s < samples; ++s) {
        std::array<VertexId, 4> q;
        for (auto& v : q) v = VertexId(rng::below(gen, d.n));
        std::array<VertexId, 4> dom;
        std::int64_t twice_k4 = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            dom[i] = top.dominator_of[q[i]];
            twice_k4 += 2 * std::int64_t(top.radius[dom[i]]);
        }
        std::int64_t dq = twice_delta4(d(q[0], q[1]), d(q[2], q[3]), d(q[0], q[2]), d(q[1], q[3]),
                                       d(q[0], q[3]), d(q[1], q[2]));
        std::int64_t dd = twice_delta4(d(dom[0], dom[1]), d(dom[2], dom[3]), d(dom[0], dom[2]),
                                       d(dom[1], dom[3]), d(dom[0], dom[3]), d(dom[1], dom[2]));
        ++report.samples;
        if (dq < dd - twice_k4 || dq > dd + twice_k4) {
            report.ok = false;
            report.first_violation = describe_quad("dominator sandwich", s, q);
            return report;
        }
    }
    return report;
}

CheckReport bound_lemmas_check(const Graph& g, const DominationHierarchy& h, std::size_t samples,
                               std::uint64_t seed) {
    AllPairs d(g);
    const DominationLevel& top = h.top_level();
    EccentricityTable ecc = compute_all_eccentricities(g);
    VertexId c = pick_central_vertex(ecc);
    std::mt19937_64 gen(seed);
    CheckReport report;

    auto radius_of = [&](VertexId dom) { return std::int64_t(top.radius[dom]); };

    for (std::size_t s = 0; s < samples; ++s) {
        std::array<VertexId, 4> q;
        for (auto& v : q) v = VertexId(rng::below(gen, d.n));
        const VertexId du = top.dominator_of[q[0]], dv = top.dominator_of[q[1]];
        const VertexId dx = top.dominator_of[q[2]], dy = top.dominator_of[q[3]];
        const std::int64_t ku = radius_of(du), kv = radius_of(dv);
        const std::int64_t kx = radius_of(dx), ky = radius_of(dy);
        ++report.samples;

        const std::int64_t twice_delta = twice_delta4(d(q[0], q[1]), d(q[2], q[3]), d(q[0], q[2]),
                                                      d(q[1], q[3]), d(q[0], q[3]), d(q[1], q[2]));
        const std::int64_t twice_tau = twice_tau4(d(q[0], q[1]), d(q[2], q[3]), d(q[0], q[2]),
                                                  d(q[1], q[3]), d(q[0], q[3]), d(q[1], q[2]));

        // delta bound through every dominator pair
        const std::array<VertexId, 4> dom{du, dv, dx, dy};
        const std::array<std::int64_t, 4> rad{ku, kv, kx, ky};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (twice_delta > 2 * (rad[i] + rad[j] + d(dom[i], dom[j]))) {
                    report.ok = false;
                    report.first_violation = describe_quad("pairwise delta bound", s, q);
                    return report;
                }

        // tau bound through either pair leg
        if (twice_tau > ku + kv + d(du, dv) || twice_tau > kx + ky + d(dx, dy)) {
            report.ok = false;
            report.first_violation = describe_quad("pair-leg tau bound", s, q);
            return report;
        }

        // contrapositives of the two triple conditions at the tightest failing
        // delta_L (2*delta_L = 2*tau - 1): the conditions would prune every
        // dominated quadruple, so they must fail here
        const std::int64_t t = twice_tau;
        auto corner = [&](VertexId cu, std::int64_t kcu, VertexId p1, VertexId p2,
                          std::int64_t kp1, std::int64_t kp2) -> const char* {
            const std::int64_t lhs1 = 2 * std::int64_t(ecc.ecc[cu]) + d(p1, p2) - d(cu, p1) -
                                      d(cu, p2) + 4 * kcu + 2 * kp1 + 2 * kp2;
            if (lhs1 < 2 * t) return "eccentricity triple condition";
            const std::int64_t lhs2 = 2 * std::int64_t(ecc.ecc[cu]) + 2 * d(p1, p2) - 3 * (t - 1) -
                                      3 + 4 * kcu + 2 * kp1 + 2 * kp2;
            const std::int64_t rhs2 =
                2 * std::max(d(cu, p1) - kp1, d(cu, p2) - kp2);
            if (lhs2 < rhs2) return "far-corner triple condition";
            return nullptr;
        };
        for (auto [cu, kcu, p1, p2, kp1, kp2] :
             {std::tuple{du, ku, dx, dy, kx, ky}, std::tuple{dv, kv, dx, dy, kx, ky},
              std::tuple{dx, kx, du, dv, ku, kv}, std::tuple{dy, ky, du, dv, ku, kv}}) {
            if (const char* what = corner(cu, kcu, p1, p2, kp1, kp2)) {
                report.ok = false;
                report.first_violation = describe_quad(what, s, q);
                return report;
            }
        }

        // central-vertex bound, both orientations
        auto two_fc = [&](VertexId z, std::int64_t kz, VertexId p1, VertexId p2, std::int64_t kp1,
                          std::int64_t kp2) {
            return d(p1, p2) - d(p1, z) - d(p2, z) + 2 * d(z, c) + 4 * kz + 2 * kp1 + 2 * kp2;
        };
        if (2 * twice_tau > two_fc(du, ku, dx, dy, kx, ky) + two_fc(dv, kv, dx, dy, kx, ky) ||
            2 * twice_tau > two_fc(dx, kx, du, dv, ku, kv) + two_fc(dy, ky, du, dv, ku, kv)) {
            report.ok = false;
            report.first_violation = describe_quad("central-vertex bound", s, q);
            return report;
        }
    }
    return report;
}

}  // namespace hyperdom
