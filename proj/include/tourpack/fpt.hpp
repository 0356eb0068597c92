#pragma once

// Color coding for "does T have k arc-disjoint triangles?". Each trial colors
// the arcs with 3k colors and looks for k triangles using all colors once.
// Yes answers always carry a validated packing; no answers are wrong with
// probability at most delta.

#include "tourpack/execution.hpp"
#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tourpack::fpt {

struct ArcColoring
{
    int palette = 0;
    /// Color of each arc, indexed by LinearTournament::pair_index.
    std::vector<int> colors;
    std::uint64_t seed = 0;
};

/// Uniform coloring with 3k colors drawn from `seed`.
ArcColoring random_coloring(const LinearTournament& t, int k, std::uint64_t seed);

using ColorMask = std::uint32_t;

/// Triangles whose arcs carry three distinct colors, keyed by the color set.
std::map<ColorMask, TrianglePacking> colorful_triangle_index(const LinearTournament& t, const ArcColoring& c);

struct ColorfulResult
{
    bool found = false;
    TrianglePacking witness;
    /// reachable[C] for every color set C; sizes not divisible by 3 stay false.
    std::vector<std::uint8_t> reachable;
};

/// Subset DP over color sets of size 3p, p = 0..k. Throws std::invalid_argument
/// if the palette is not 3k or exceeds 24 colors.
ColorfulResult dp_colorful_packing(const LinearTournament& t, const ArcColoring& c, int k);

/// ceil(e^{3k} ln(1/delta)).
std::int64_t trial_count(int k, double delta);

struct Decision
{
    bool yes = false;
    TrianglePacking witness;
    std::int64_t trials_run = 0;
    std::int64_t trials_planned = 0;
};

/// Trial i colors with derive_seed(seed, i). The parallel path returns the
/// same lowest successful trial as the serial one.
Decision decide(const LinearTournament& t, int k, double delta, std::uint64_t seed,
                Execution exec = Execution::serial);

} // namespace tourpack::fpt
