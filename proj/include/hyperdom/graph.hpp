#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperdom {

using VertexId = std::uint32_t;

// Immutable undirected simple graph in CSR form. Neighbor lists are sorted.
// Vertex ids are dense in [0, n). Construction deduplicates edges and drops
// self-loops; everything downstream may assume a clean simple graph.
class Graph {
public:
    Graph() = default;

    struct BuildStats {
        std::size_t dropped_loops = 0;
        std::size_t dropped_duplicates = 0;
    };

    // `edges` may contain duplicates, both orientations and loops.
    static Graph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                            BuildStats* stats = nullptr);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(VertexId u, VertexId v) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::size_t> offsets_;  // n+1
    std::vector<VertexId> neighbors_;   // 2m
};

enum class EdgeFormat { EdgeList, Dimacs };

struct LoadResult {
    Graph graph;
    std::vector<std::uint64_t> original_ids;  // dense id -> id in the input file
    Graph::BuildStats dropped;
};

// Whitespace-separated "u v" pairs, one per line; '#', '%' and 'c' lines are
// comments. With EdgeFormat::Dimacs, 'p ...' lines are ignored and edges may
// be written as 'e u v'. Throws ParseError on malformed lines or if no edge
// survives cleanup.
LoadResult load_edge_list(std::istream& in, EdgeFormat format = EdgeFormat::EdgeList);
LoadResult load_edge_list_file(const std::string& path, EdgeFormat format = EdgeFormat::EdgeList);

// Plain "u v" lines, u < v, ascending. `header` (if nonempty) goes out as a
// '#' comment first.
void write_edge_list(const Graph& g, std::ostream& out, const std::string& header = "");

struct GraphSummary {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    double mean_degree = 0.0;
};
GraphSummary graph_summary(const Graph& g);

bool is_connected(const Graph& g);

struct SubgraphResult {
    Graph graph;
    std::vector<VertexId> original_ids;  // dense id -> id in the input graph
};

// Edge-maximal biconnected subgraph with the most vertices (ties: most edges,
// then smallest minimum input id), densely relabeled. A bridge counts as a
// 2-vertex block. Requires a connected input with n >= 2.
SubgraphResult largest_biconnected_component(const Graph& g);

}  // namespace hyperdom
