#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dng/solver.hpp"

namespace dng {

inline constexpr int kMaxGraphVertices = 20;

// A simple undirected graph: no loops, no duplicate edges.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, sorted

    bool adjacent(int u, int v) const;
};

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

// File format: first line "vertices: n", then one edge "u v" per line with
// 1-based endpoints. Blank lines and '#' comments are ignored.
Graph parse_graph_file(const std::string& contents);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

// "cycle:7", "path:5", "complete:4".
Graph parse_graph_family(const std::string& spec);

// Exact automorphism group by backtracking over vertex images with degree and
// neighborhood pruning. Every returned element is re-checked to map edges to
// edges. Throws CapabilityError past kMaxGraphVertices vertices or when the
// group order would exceed order_cap.
PermGroup automorphism_group(const Graph& g, std::uint64_t order_cap = kDefaultOrderCap);

// Distinguishing number of the vertex set under the automorphism group.
SolveResult graph_distinguishing_number(const Graph& g, const SolveOptions& opts = {});

} // namespace dng
