#pragma once

// Exponential-time exact solvers. They are the ground truth every polynomial
// and parameterized solver is checked against, so they either return an
// optimum or throw BudgetExceeded; they never return a best-effort answer.

#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tourpack::oracle {

struct OracleBudget
{
    int max_vertices = 12;
    std::size_t max_cycles = 200000;
    double time_limit_seconds = 60.0;

    /// Throws std::invalid_argument unless every field is positive.
    void validate() const;
};

class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct TriangleOptimum
{
    int size = 0;
    TrianglePacking packing;
};

struct CycleOptimum
{
    int size = 0;
    CyclePacking packing;
};

struct FasOptimum
{
    int size = 0;
    std::vector<Arc> arcs;
    /// An ordering whose backward set is `arcs`.
    std::vector<Vertex> ordering;
};

/// Maximum arc-disjoint triangle packing by branch and bound. Among optimal
/// packings the lexicographically smallest (as a sorted list) is returned.
TriangleOptimum exact_max_triangle_packing(const LinearTournament& t, const OracleBudget& budget = {});

/// All simple directed cycles, each once, rotated to start at its minimum.
/// Throws BudgetExceeded past `limit` cycles.
std::vector<Cycle> enumerate_cycles(const LinearTournament& t, std::size_t limit);

/// Maximum arc-disjoint packing over all simple cycles.
CycleOptimum exact_max_cycle_packing(const LinearTournament& t, const OracleBudget& budget = {});

/// Minimum feedback arc set: fewest backward arcs over all vertex orderings.
FasOptimum exact_min_fas(const LinearTournament& t, const OracleBudget& budget = {});

} // namespace tourpack::oracle
