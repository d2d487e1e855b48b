#include "hyperdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hyperdom/bfs.hpp"
#include "hyperdom/errors.hpp"

namespace hyperdom {

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                        BuildStats* stats) {
    BuildStats local;
    std::size_t out = 0;
    for (auto& e : edges) {
        if (e.first == e.second) {
            ++local.dropped_loops;
            continue;
        }
        if (e.first > e.second) std::swap(e.first, e.second);
        edges[out++] = e;
    }
    edges.resize(out);
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    local.dropped_duplicates = std::size_t(edges.end() - last);
    edges.erase(last, edges.end());
    if (stats) *stats = local;

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (auto [a, b] : edges) {
        ++g.offsets_[a + 1];
        ++g.offsets_[b + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.neighbors_.resize(edges.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : edges) {
        g.neighbors_[cursor[a]++] = b;
        g.neighbors_[cursor[b]++] = a;
    }
    // edges were sorted by (min,max); the second pass above can interleave, so sort each list
    for (std::size_t v = 0; v < n; ++v)
        std::sort(g.neighbors_.begin() + std::ptrdiff_t(g.offsets_[v]),
                  g.neighbors_.begin() + std::ptrdiff_t(g.offsets_[v + 1]));
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool is_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == '#' || ch == '%' || ch == 'c';
    }
    return true;  // blank line
}

bool parse_u64(std::string_view tok, std::uint64_t& value) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

LoadResult load_edge_list(std::istream& in, EdgeFormat format) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (format == EdgeFormat::Dimacs) {
            std::string head;
            fields >> head;
            if (head == "p") continue;  // problem line, ids come from the edges themselves
            if (head == "e") {
                fields >> a >> b;
            } else {
                a = head;
                fields >> b;
            }
        } else {
            fields >> a >> b;
        }
        if (fields >> extra) throw ParseError(line_no, "expected two vertex ids, got extra token '" + extra + "'");
        std::uint64_t ua = 0, ub = 0;
        if (a.empty() || b.empty() || !parse_u64(a, ua) || !parse_u64(b, ub))
            throw ParseError(line_no, "expected two non-negative vertex ids in '" + line + "'");
        raw.emplace_back(ua, ub);
    }

    LoadResult result;
    std::unordered_map<std::uint64_t, VertexId> dense;
    dense.reserve(raw.size() * 2);
    auto densify = [&](std::uint64_t id) {
        auto [it, inserted] = dense.emplace(id, VertexId(result.original_ids.size()));
        if (inserted) result.original_ids.push_back(id);
        return it->second;
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.size());
    for (auto [ua, ub] : raw) {
        VertexId da = densify(ua);  // sequenced: first-appearance order
        VertexId db = densify(ub);
        edges.emplace_back(da, db);
    }

    result.graph = Graph::from_edges(result.original_ids.size(), std::move(edges), &result.dropped);
    if (result.graph.edge_count() == 0) throw ParseError("no edges: empty graph");
    return result;
}

LoadResult load_edge_list_file(const std::string& path, EdgeFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_edge_list(in, format);
}

void write_edge_list(const Graph& g, std::ostream& out, const std::string& header) {
    if (!header.empty()) out << "# " << header << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) out << v << ' ' << w << '\n';
}

GraphSummary graph_summary(const Graph& g) {
    GraphSummary s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    if (s.n == 0) return s;
    s.min_degree = g.degree(0);
    for (VertexId v = 0; v < s.n; ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.mean_degree = 2.0 * double(s.m) / double(s.n);
    return s;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::int32_t d) { return d == kUnreached; });
}

namespace {

// Iterative Hopcroft-Tarjan block decomposition with an explicit edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<std::int32_t> disc, low;
    std::vector<std::pair<VertexId, VertexId>> edge_stack;
    std::int32_t timer = 0;

    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;  // index into neighbors(v)
    };

    // best block so far
    std::vector<std::pair<VertexId, VertexId>> best_edges;
    std::size_t best_vertices = 0;
    VertexId best_min_id = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), -1) {}

    void consider_block(std::size_t from) {
        std::vector<std::pair<VertexId, VertexId>> edges(edge_stack.begin() + std::ptrdiff_t(from),
                                                         edge_stack.end());
        edge_stack.resize(from);
        std::vector<VertexId> verts;
        verts.reserve(edges.size() * 2);
        for (auto [a, b] : edges) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        bool better = false;
        if (verts.size() != best_vertices)
            better = verts.size() > best_vertices;
        else if (edges.size() != best_edges.size())
            better = edges.size() > best_edges.size();
        else
            better = !verts.empty() && verts.front() < best_min_id;
        if (better) {
            best_edges = std::move(edges);
            best_vertices = verts.size();
            best_min_id = verts.front();
        }
    }

    void run(VertexId root) {
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                VertexId w = nb[f.next++];
                if (disc[w] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                VertexId child = f.v;
                VertexId parent = f.parent;
                stack.pop_back();
                if (stack.empty()) break;
                low[parent] = std::min(low[parent], low[child]);
                if (low[child] >= disc[parent]) {
                    // pop the block rooted at edge (parent, child)
                    std::size_t from = edge_stack.size();
                    while (from > 0 && !(edge_stack[from - 1].first == parent &&
                                         edge_stack[from - 1].second == child))
                        --from;
                    consider_block(from > 0 ? from - 1 : 0);
                }
            }
        }
    }
};

}  // namespace

SubgraphResult largest_biconnected_component(const Graph& g) {
    if (g.vertex_count() < 2) throw ParameterError("biconnected component extraction needs n >= 2");
    if (!is_connected(g)) throw ParameterError("biconnected component extraction needs a connected graph");

    BlockFinder finder(g);
    finder.run(0);

    SubgraphResult result;
    std::vector<VertexId> verts;
    verts.reserve(finder.best_edges.size() * 2);
    for (auto [a, b] : finder.best_edges) {
        verts.push_back(a);
        verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::unordered_map<VertexId, VertexId> dense;
    dense.reserve(verts.size());
    for (VertexId v : verts) dense.emplace(v, VertexId(dense.size()));
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(finder.best_edges.size());
    for (auto [a, b] : finder.best_edges) edges.emplace_back(dense[a], dense[b]);
    result.graph = Graph::from_edges(verts.size(), std::move(edges));
    result.original_ids = std::move(verts);
    return result;
}

}  // namespace hyperdom
