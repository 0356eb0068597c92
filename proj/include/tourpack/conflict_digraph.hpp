#pragma once

// The digraph G' over the backward arcs of a fully sparse tournament, and
// the digon-free functional subdigraph problem solved on it.

#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <span>
#include <utility>
#include <vector>

namespace tourpack::sparse {

/// Simple digraph on 0..n-1 with sorted, duplicate-free adjacency lists.
struct Digraph
{
    std::vector<std::vector<int>> out;

    int size() const noexcept { return static_cast<int>(out.size()); }
    bool has_arc(int u, int v) const;
    static Digraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);
};

/// Strongly connected components, each sorted, listed by smallest member.
std::vector<std::vector<int>> strong_components(const Digraph& g);

/// Node i is the backward arc e_i; nodes are ordered by head position.
/// e_i -> e_j when (h_i, h_j, t_i) is a directed triangle (head witness) or
/// (h_i, t_j, t_i) is one (tail witness).
struct ConflictDigraph
{
    std::vector<Arc> nodes;
    Digraph graph;
    /// Witness flags per arc, parallel to graph.out.
    std::vector<std::vector<bool>> head_witness;
    std::vector<std::vector<bool>> tail_witness;

    /// Triangle for arc i -> j; the head witness wins when both hold.
    Triangle witness(int i, int j) const;
};

/// Requires a fully sparse tournament with no backward arc between
/// consecutive positions; throws TournamentError otherwise.
ConflictDigraph build_conflict_digraph(const LinearTournament& t);

enum class ComponentKind
{
    isolated_vertex,
    digoned_tree,
    has_long_cycle,
};

struct ComponentClass
{
    std::vector<int> vertices;
    ComponentKind kind = ComponentKind::isolated_vertex;
    bool terminal = false;
};

std::vector<ComponentClass> classify_components(const Digraph& g);

/// Number of terminal components that are isolated vertices or digoned trees.
int terminal_deficit(std::span<const ComponentClass> components);

using ArcSet = std::vector<std::pair<int, int>>;

/// Optimal digon-free functional subdigraph with |V| - k arcs.
ArcSet solve_pi_prime(const Digraph& g);

/// Out-degree at most one everywhere, arcs of g, no digon.
bool is_digon_free_functional(const Digraph& g, std::span<const std::pair<int, int>> x);

/// Witness triangle of every arc of x.
TrianglePacking pi_map(const ConflictDigraph& g, std::span<const std::pair<int, int>> x);

} // namespace tourpack::sparse
