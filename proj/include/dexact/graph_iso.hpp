#pragma once

// Isomorphism of small undirected graphs: colour refinement with
// individualisation and backtracking.

#include <optional>
#include <vector>

namespace dexact {

/// Undirected simple graph as sorted adjacency lists.
struct Graph {
    std::vector<std::vector<int>> adj;

    explicit Graph(int vertices = 0) : adj(vertices) {}
    int size() const { return static_cast<int>(adj.size()); }
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    std::size_t edge_count() const;
    void normalize();
};

/// A bijection phi with phi(a) adjacent to phi(b) iff a adjacent to b, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& phi);

} // namespace dexact
