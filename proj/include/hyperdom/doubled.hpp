#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

namespace hyperdom {

// Hyperbolicity values are half-integral; storing twice the value keeps all
// engine comparisons in exact integer arithmetic.
struct DoubledValue {
    std::int64_t twice = 0;

    auto operator<=>(const DoubledValue&) const = default;

    double value() const { return double(twice) / 2.0; }

    // "3.0" / "3.5" / "-0.5": one fractional digit, always 0 or 5
    std::string str() const {
        std::int64_t t = twice;
        std::string sign;
        if (t < 0) {
            sign = "-";
            t = -t;
        }
        return sign + std::to_string(t / 2) + (t % 2 ? ".5" : ".0");
    }
};

// 2*delta for the quadruple (u,v,x,y): largest minus second-largest of the
// three pairwise distance sums.
inline std::int64_t twice_delta4(std::int64_t d_uv, std::int64_t d_xy, std::int64_t d_ux,
                                 std::int64_t d_vy, std::int64_t d_uy, std::int64_t d_vx) {
    std::int64_t s1 = d_uv + d_xy;
    std::int64_t s2 = d_ux + d_vy;
    std::int64_t s3 = d_uy + d_vx;
    std::int64_t hi = std::max({s1, s2, s3});
    std::int64_t lo = std::min({s1, s2, s3});
    return hi - (s1 + s2 + s3 - hi - lo);  // largest minus middle
}

// 2*tau: the (u,v)/(x,y) pairing against the better cross pairing. Equals
// 2*delta when s1 dominates, and is <= 0 otherwise.
inline std::int64_t twice_tau4(std::int64_t d_uv, std::int64_t d_xy, std::int64_t d_ux,
                               std::int64_t d_vy, std::int64_t d_uy, std::int64_t d_vx) {
    return d_uv + d_xy - std::max(d_ux + d_vy, d_uy + d_vx);
}

inline DoubledValue delta4(std::int64_t d_uv, std::int64_t d_xy, std::int64_t d_ux,
                           std::int64_t d_vy, std::int64_t d_uy, std::int64_t d_vx) {
    return {twice_delta4(d_uv, d_xy, d_ux, d_vy, d_uy, d_vx)};
}

inline DoubledValue tau4(std::int64_t d_uv, std::int64_t d_xy, std::int64_t d_ux, std::int64_t d_vy,
                         std::int64_t d_uy, std::int64_t d_vx) {
    return {twice_tau4(d_uv, d_xy, d_ux, d_vy, d_uy, d_vx)};
}

}  // namespace hyperdom
