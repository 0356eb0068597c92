#pragma once

#include <vector>

namespace tourpack {

/// Undirected bipartite graph; adj[l] lists right vertices in increasing order.
struct BipartiteGraph
{
    int right_size = 0;
    std::vector<std::vector<int>> adj;

    int left_size() const noexcept { return static_cast<int>(adj.size()); }
};

struct Matching
{
    std::vector<int> left;  ///< partner of each left vertex or -1
    std::vector<int> right; ///< partner of each right vertex or -1
    int size = 0;
};

/// Kuhn's augmenting-path algorithm. Left vertices are tried in order and
/// neighbours in increasing order, so ties resolve lexicographically.
Matching maximum_bipartite_matching(const BipartiteGraph& g);

/// True iff some alternating path joins two unmatched vertices.
bool has_augmenting_path(const BipartiteGraph& g, const Matching& m);

} // namespace tourpack
