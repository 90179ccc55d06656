#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace udisk {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Undirected simple graph over dense 0-based vertex ids.
/// Adjacency lists are kept sorted. Construction rejects self-loops,
/// duplicate edges and ids outside [0, n).
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
};

/// Parses the edge-list format: optional header line "n <count>", then one
/// edge "u v" per line, whitespace-separated decimal ids. '#' starts a
/// comment. Without a header the vertex count is 1 + the largest id seen.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; always emits the "n <count>" header so isolated
/// vertices survive a round trip.
std::string serialize_graph(const Graph& g);

} // namespace udisk
