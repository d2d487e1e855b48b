#pragma once

#include <cstdint>
#include <string>

#include "hyperdom/graph.hpp"

namespace hyperdom {

// Deterministic synthetic graphs: the same spec always yields the same edge
// set (seeded mt19937_64 with portable sampling, see rng.hpp).
Graph gen_cycle(std::size_t n);                       // n >= 3
Graph gen_path(std::size_t n);                        // n >= 1
Graph gen_grid(std::size_t rows, std::size_t cols);   // 2 <= rows <= cols, 4-neighbor lattice
Graph gen_tree(std::size_t n, std::uint64_t seed);    // random attachment, n >= 1
Graph gen_random_connected(std::size_t n, double edge_prob, std::uint64_t seed);

// (side+1)x(side+1) grid; delete a `delete_fraction` share of the edges,
// visiting edges in seeded random order and rejecting any deletion that would
// disconnect the graph; finally keep the largest biconnected component.
Graph gen_grid_perturbed(std::size_t side, double delete_fraction, std::uint64_t seed);

enum class GenKind { Cycle, Path, Tree, Grid, GridPerturbed, RandomConnected };

struct GenSpec {
    GenKind kind = GenKind::Cycle;
    std::size_t n = 0;            // cycle/path/tree/random
    std::size_t rows = 0, cols = 0;  // grid
    std::size_t side = 0;         // grid_perturbed
    double delete_fraction = 0.0;
    double edge_prob = 0.0;
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);
std::string describe(const GenSpec& spec);

// Name of the PRNG scheme, echoed into stats output for reproducibility.
const char* generator_identity();

}  // namespace hyperdom
