#pragma once

#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <array>
#include <span>
#include <vector>

namespace tourpack::steiner {

/// Steiner triple system on points 0..n-1: every pair of points lies in
/// exactly one triple. Triples are stored sorted ascending.
struct TripleSystem
{
    int n = 0;
    std::vector<std::array<int, 3>> triples;
};

/// Bose construction for n = 3 (mod 6), Skolem construction for n = 1 (mod 6).
/// n = 1 yields the empty system. Any other residue is rejected.
TripleSystem steiner_triple_system(int n);

/// Number of triples covering each pair; all ones for a valid system.
/// Indexed by LinearTournament-style pair index over n points.
std::vector<int> pair_coverage(const TripleSystem& sts);

/// Orientation of K_n in which each triple {a < b < c} becomes the directed
/// triangle a -> b -> c -> a; the backward set is {(c, a)} over all triples.
LinearTournament orient_clique(const TripleSystem& sts);

/// The triangles a -> b -> c -> a of an oriented clique, one per triple.
TrianglePacking clique_triangles(const TripleSystem& sts);

/// Every vertex becomes `block_size` consecutive vertices. Arcs between blocks
/// keep the orientation of the original arc; arcs inside a block are forward.
LinearTournament blow_up(const LinearTournament& t, int block_size);

/// Perfect triangle packing of the complete tripartite tournament with all
/// arcs A -> B, B -> C, C -> A. The blocks must have equal size s; triangle
/// (i, j) is (A[i], B[j], C[(i + j + 1) mod s]) with 0-based indices, i.e.
/// h_{i+j mod s} in 1-based indices with h_0 read as h_s. Throws
/// TournamentError if some cross arc is missing from `host`.
TrianglePacking tripartite_perfect_packing(const LinearTournament& host, std::span<const Vertex> a,
                                           std::span<const Vertex> b, std::span<const Vertex> c);

} // namespace tourpack::steiner
