#pragma once

// Exact triangle and cycle packing for sparse tournaments (backward set is a
// matching) in polynomial time.

#include "tourpack/conflict_digraph.hpp"
#include "tourpack/execution.hpp"
#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <vector>

namespace tourpack::sparse {

/// A tournament together with the host vertex behind each of its positions.
struct MappedTournament
{
    LinearTournament tournament;
    std::vector<Vertex> original;
};

/// Swaps the two endpoints of every backward arc joining consecutive
/// positions, which turns that arc forward. Throws TournamentError unless
/// the representation is sparse.
MappedTournament normalize_representation(const LinearTournament& t);

struct Decomposition
{
    /// Fully sparse pieces; `original` maps into the decomposed tournament.
    std::vector<MappedTournament> segments;
    TrianglePacking x0;
};

/// Splits a normalized sparse representation at the vertices no backward
/// arc touches. Each backward arc spanning such a vertex x yields (h, x, t).
Decomposition decompose(const LinearTournament& t);

struct SparseOptimum
{
    int size = 0;
    TrianglePacking packing;
};

struct SparseCycleOptimum
{
    int size = 0;
    CyclePacking packing;
};

/// Solves one fully sparse, normalized tournament through G'.
TrianglePacking solve_fully_sparse(const LinearTournament& t);

SparseOptimum max_triangle_packing_sparse(const LinearTournament& t, Execution exec = Execution::serial);
SparseCycleOptimum max_cycle_packing_sparse(const LinearTournament& t, Execution exec = Execution::serial);

} // namespace tourpack::sparse
