#pragma once

// Linear-vertex kernel for deciding whether a tournament has k arc-disjoint
// triangles.

#include "tourpack/matching.hpp"
#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <vector>

namespace tourpack::kernel {

/// Takes triangles in canonical order whenever they are arc-disjoint from the
/// ones already taken. Maximal, not maximum.
TrianglePacking greedy_maximal_packing(const LinearTournament& t);

/// T[U] is acyclic and no triangle has one vertex in V(X) and two outside.
/// Holds for every maximal packing X.
Validation check_maximal_structure(const LinearTournament& t, std::span<const Triangle> x);

struct ConflictBipartite
{
    std::vector<Arc> arcs;    ///< left side: every arc of T[V(X)]
    std::vector<Vertex> free; ///< right side: vertices outside V(X)
    BipartiteGraph graph;     ///< a -- u iff h(a) -> u and u -> t(a)
};

ConflictBipartite build_conflict_bipartite(const LinearTournament& t, std::span<const Triangle> x);

enum class Outcome
{
    early_yes,
    kernel,
};

struct KernelResult
{
    Outcome outcome = Outcome::kernel;
    int k = 0;
    /// The greedy packing; for early_yes its first k triangles answer yes.
    TrianglePacking greedy;
    /// Set when outcome == kernel: T[V(X) ∪ U'] and its vertex map.
    LinearTournament tournament;
    std::vector<Vertex> original;
    int matching_size = 0;
};

/// k >= 1, else std::invalid_argument.
KernelResult kernelize(const LinearTournament& t, int k);

} // namespace tourpack::kernel
