#include "tourpack/fpt.hpp"
#include "tourpack/random.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace tourpack::fpt {

ArcColoring random_coloring(const LinearTournament& t, int k, std::uint64_t seed)
{
    if (k < 1)
        throw std::invalid_argument("coloring needs k >= 1");
    ArcColoring c;
    c.palette = 3 * k;
    c.seed = seed;
    c.colors.resize(t.arc_count());
    Rng rng(seed);
    for (auto& col : c.colors)
        col = static_cast<int>(rng.below(static_cast<std::uint64_t>(c.palette)));
    return c;
}

namespace {

struct TripleEntry
{
    std::array<int, 3> colors;
    ColorMask mask;
    Triangle first;
};

void check_coloring(const LinearTournament& t, const ArcColoring& c)
{
    if (c.colors.size() != t.arc_count())
        throw std::invalid_argument("coloring does not cover every arc");
    for (int col : c.colors)
        if (col < 0 || col >= c.palette)
            throw std::invalid_argument("arc color " + std::to_string(col) + " outside the palette");
}

std::map<ColorMask, TrianglePacking> index_triangles(const LinearTournament& t, const ArcColoring& c,
                                                     std::span<const Triangle> triangles)
{
    std::map<ColorMask, TrianglePacking> out;
    for (const auto& tri : triangles)
    {
        ColorMask mask = 0;
        for (const auto& a : tri.arcs())
            mask |= ColorMask{1} << c.colors[t.pair_index(a.tail, a.head)];
        if (std::popcount(mask) == 3)
            out[mask].push_back(tri);
    }
    return out;
}

ColorfulResult run_dp(const std::map<ColorMask, TrianglePacking>& index, int palette, int k)
{
    // Triples in lexicographic order of their sorted colors.
    std::vector<TripleEntry> triples;
    for (const auto& [mask, list] : index)
    {
        TripleEntry e{{}, mask, list.front()};
        int i = 0;
        for (int col = 0; col < palette; ++col)
            if (mask >> col & 1U)
                e.colors[static_cast<std::size_t>(i++)] = col;
        triples.push_back(e);
    }
    std::sort(triples.begin(), triples.end(), [](const TripleEntry& a, const TripleEntry& b) { return a.colors < b.colors; });

    ColorfulResult out;
    const std::size_t sets = std::size_t{1} << palette;
    out.reachable.assign(sets, 0);
    std::vector<int> back(sets, -1);
    out.reachable[0] = 1;
    for (std::size_t set = 1; set < sets; ++set)
    {
        if (std::popcount(set) % 3 != 0)
            continue;
        const auto mask = static_cast<ColorMask>(set);
        for (std::size_t i = 0; i < triples.size(); ++i)
        {
            const ColorMask tm = triples[i].mask;
            if ((mask & tm) == tm && out.reachable[mask ^ tm])
            {
                out.reachable[set] = 1;
                back[set] = static_cast<int>(i);
                break;
            }
        }
    }

    const auto full = static_cast<ColorMask>(sets - 1);
    if (k * 3 != palette || !out.reachable[full])
        return out;
    out.found = true;
    for (ColorMask set = full; set != 0;)
    {
        const auto& e = triples[static_cast<std::size_t>(back[set])];
        out.witness.push_back(e.first);
        set ^= e.mask;
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

constexpr int max_palette = 24;

std::optional<TrianglePacking> trial(const LinearTournament& t, std::span<const Triangle> triangles, int k,
                                     std::uint64_t seed)
{
    auto c = random_coloring(t, k, seed);
    auto r = run_dp(index_triangles(t, c, triangles), c.palette, k);
    if (!r.found)
        return std::nullopt;
    return std::move(r.witness);
}

} // namespace

std::map<ColorMask, TrianglePacking> colorful_triangle_index(const LinearTournament& t, const ArcColoring& c)
{
    check_coloring(t, c);
    if (c.palette > max_palette)
        throw std::invalid_argument("palette larger than " + std::to_string(max_palette) + " colors");
    return index_triangles(t, c, enumerate_triangles(t));
}

ColorfulResult dp_colorful_packing(const LinearTournament& t, const ArcColoring& c, int k)
{
    if (k < 1 || c.palette != 3 * k)
        throw std::invalid_argument("coloring palette must have exactly 3k colors");
    return run_dp(colorful_triangle_index(t, c), c.palette, k);
}

std::int64_t trial_count(int k, double delta)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie strictly between 0 and 1");
    const double t = std::ceil(std::exp(3.0 * k) * std::log(1.0 / delta));
    if (t > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2))
        throw std::invalid_argument("trial count overflows for k = " + std::to_string(k));
    return static_cast<std::int64_t>(t);
}

Decision decide(const LinearTournament& t, int k, double delta, std::uint64_t seed, Execution exec)
{
    Decision out;
    out.trials_planned = trial_count(k, delta);
    if (3 * k > max_palette)
        throw std::invalid_argument("k = " + std::to_string(k) + " needs more than " + std::to_string(max_palette) +
                                    " colors");

    const auto triangles = enumerate_triangles(t);
    if (static_cast<int>(triangles.size()) < k)
        return out;

    auto accept = [&](std::int64_t i, TrianglePacking witness) {
        if (auto v = validate_triangle_packing(t, witness); !v || static_cast<int>(witness.size()) < k)
            throw std::logic_error("colorful packing failed validation: " + v.message);
        out.yes = true;
        out.witness = std::move(witness);
        out.trials_run = i + 1;
        return out;
    };

    if (exec == Execution::serial)
    {
        for (std::int64_t i = 0; i < out.trials_planned; ++i)
            if (auto w = trial(t, triangles, k, derive_seed(seed, static_cast<std::uint64_t>(i))))
                return accept(i, std::move(*w));
        out.trials_run = out.trials_planned;
        return out;
    }

    constexpr std::int64_t batch = 512;
    for (std::int64_t start = 0; start < out.trials_planned; start += batch)
    {
        const std::int64_t stop = std::min(out.trials_planned, start + batch);
        std::vector<std::optional<TrianglePacking>> found(static_cast<std::size_t>(stop - start));
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = start; i < stop; ++i)
            found[static_cast<std::size_t>(i - start)] = trial(t, triangles, k, derive_seed(seed, static_cast<std::uint64_t>(i)));
        for (std::int64_t i = start; i < stop; ++i)
            if (auto& w = found[static_cast<std::size_t>(i - start)])
                return accept(i, std::move(*w));
    }
    out.trials_run = out.trials_planned;
    return out;
}

} // namespace tourpack::fpt
