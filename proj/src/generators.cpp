#include "hyperdom/generators.hpp"

#include <algorithm>
#include <sstream>

#include "hyperdom/bfs.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/rng.hpp"

namespace hyperdom {

const char* generator_identity() { return "mt19937_64+rejection"; }

Graph gen_cycle(std::size_t n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(VertexId(i), VertexId((i + 1) % n));
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(VertexId(i), VertexId(i + 1));
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_grid(std::size_t rows, std::size_t cols) {
    if (rows < 2) throw ParameterError("grid needs at least 2 rows");
    if (rows > cols) throw ParameterError("grid expects rows <= cols");
    auto id = [cols](std::size_t r, std::size_t c) { return VertexId(r * cols + c); };
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(2 * rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph gen_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw ParameterError("tree needs n >= 1");
    std::mt19937_64 gen(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n);
    for (std::size_t v = 1; v < n; ++v)
        edges.emplace_back(VertexId(rng::below(gen, v)), VertexId(v));
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_random_connected(std::size_t n, double edge_prob, std::uint64_t seed) {
    if (n < 2) throw ParameterError("random graph needs n >= 2");
    if (edge_prob <= 0.0 || edge_prob > 1.0) throw ParameterError("edge probability must be in (0, 1]");
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t a = 0; a + 1 < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (rng::unit(gen) < edge_prob) edges.emplace_back(VertexId(a), VertexId(b));
        Graph g = Graph::from_edges(n, std::move(edges));
        if (g.edge_count() > 0 && is_connected(g)) return g;
    }
    throw ParameterError("edge probability too low: no connected sample in 1000 retries");
}

namespace {

// true if a still reaches b once edge (a,b) is ignored
bool connected_without(const std::vector<std::vector<VertexId>>& adj, VertexId a, VertexId b,
                       std::vector<std::uint32_t>& mark, std::uint32_t& epoch,
                       std::vector<VertexId>& queue) {
    ++epoch;
    queue.clear();
    mark[a] = epoch;
    queue.push_back(a);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        for (VertexId w : adj[v]) {
            if (v == a && w == b) continue;
            if (w == b) return true;
            if (mark[w] == epoch) continue;
            mark[w] = epoch;
            queue.push_back(w);
        }
    }
    return false;
}

void drop_edge(std::vector<std::vector<VertexId>>& adj, VertexId a, VertexId b) {
    auto erase_one = [&](VertexId u, VertexId v) {
        auto& list = adj[u];
        list.erase(std::find(list.begin(), list.end(), v));
    };
    erase_one(a, b);
    erase_one(b, a);
}

}  // namespace

Graph gen_grid_perturbed(std::size_t side, double delete_fraction, std::uint64_t seed) {
    if (side < 2) throw ParameterError("perturbed grid needs side >= 2");
    if (delete_fraction < 0.0 || delete_fraction >= 1.0)
        throw ParameterError("deletion fraction must be in [0, 1)");
    Graph grid = gen_grid(side + 1, side + 1);
    std::size_t n = grid.vertex_count();

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(grid.edge_count());
    std::vector<std::vector<VertexId>> adj(n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : grid.neighbors(v)) {
            adj[v].push_back(w);
            if (v < w) edges.emplace_back(v, w);
        }

    std::mt19937_64 gen(seed);
    rng::shuffle(edges, gen);
    std::size_t target = std::size_t(delete_fraction * double(edges.size()));

    std::vector<std::uint32_t> mark(n, 0);
    std::uint32_t epoch = 0;
    std::vector<VertexId> queue;
    queue.reserve(n);
    std::size_t deleted = 0;
    for (std::size_t i = 0; i < edges.size() && deleted < target; ++i) {
        auto [a, b] = edges[i];
        if (!connected_without(adj, a, b, mark, epoch, queue)) continue;
        drop_edge(adj, a, b);
        ++deleted;
    }

    std::vector<std::pair<VertexId, VertexId>> remaining;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : adj[v])
            if (v < w) remaining.emplace_back(v, w);
    Graph pruned = Graph::from_edges(n, std::move(remaining));
    return largest_biconnected_component(pruned).graph;
}

Graph generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::Cycle: return gen_cycle(spec.n);
        case GenKind::Path: return gen_path(spec.n);
        case GenKind::Tree: return gen_tree(spec.n, spec.seed);
        case GenKind::Grid: return gen_grid(spec.rows, spec.cols);
        case GenKind::GridPerturbed: return gen_grid_perturbed(spec.side, spec.delete_fraction, spec.seed);
        case GenKind::RandomConnected: return gen_random_connected(spec.n, spec.edge_prob, spec.seed);
    }
    throw ParameterError("unknown generator kind");
}

std::string describe(const GenSpec& spec) {
    std::ostringstream out;
    switch (spec.kind) {
        case GenKind::Cycle: out << "cycle n=" << spec.n; break;
        case GenKind::Path: out << "path n=" << spec.n; break;
        case GenKind::Tree: out << "tree n=" << spec.n << " seed=" << spec.seed; break;
        case GenKind::Grid: out << "grid " << spec.rows << "x" << spec.cols; break;
        case GenKind::GridPerturbed:
            out << "grid-perturbed side=" << spec.side << " f=" << spec.delete_fraction
                << " seed=" << spec.seed;
            break;
        case GenKind::RandomConnected:
            out << "random n=" << spec.n << " p=" << spec.edge_prob << " seed=" << spec.seed;
            break;
    }
    out << " rng=" << generator_identity();
    return out.str();
}

}  // namespace hyperdom
