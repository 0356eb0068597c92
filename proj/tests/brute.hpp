#pragma once

// Deliberately naive reference answers. Nothing here shares code with the
// solvers under test beyond LinearTournament::has_arc.

#include "tourpack/tournament.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using tourpack::LinearTournament;

// Every directed cycle as its arc list, found by trying all vertex sequences.
inline std::vector<std::vector<std::pair<int, int>>> cycles_as_arcs(const LinearTournament& t, int max_len)
{
    std::set<std::vector<int>> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    const int n = t.size();
    for (int mask = 0; mask < (1 << n); ++mask)
    {
        int len = __builtin_popcount(static_cast<unsigned>(mask));
        if (len < 3 || len > max_len)
            continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                vs.push_back(v);
        // Fix the smallest vertex first; permute the rest.
        do
        {
            bool ok = true;
            for (std::size_t i = 0; i < vs.size() && ok; ++i)
                ok = t.has_arc(vs[i], vs[(i + 1) % vs.size()]);
            if (ok && seen.insert(vs).second)
            {
                std::vector<std::pair<int, int>> arcs;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    arcs.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
                out.push_back(arcs);
            }
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return out;
}

inline std::vector<std::vector<std::pair<int, int>>> triangles_as_arcs(const LinearTournament& t)
{
    return cycles_as_arcs(t, 3);
}

// Largest subfamily of pairwise arc-disjoint members, by plain recursion.
inline int max_disjoint(const std::vector<std::vector<std::pair<int, int>>>& family)
{
    std::set<std::pair<int, int>> used;
    int best = 0;
    auto rec = [&](auto&& self, std::size_t i, int taken) -> void {
        if (taken + static_cast<int>(family.size() - i) <= best)
            return;
        if (i == family.size())
        {
            best = std::max(best, taken);
            return;
        }
        const auto& f = family[i];
        if (std::none_of(f.begin(), f.end(), [&](const auto& a) { return used.count(a) != 0; }))
        {
            for (const auto& a : f)
                used.insert(a);
            self(self, i + 1, taken + 1);
            for (const auto& a : f)
                used.erase(a);
        }
        self(self, i + 1, taken);
    };
    rec(rec, 0, 0);
    return best;
}

inline int max_triangle_packing(const LinearTournament& t)
{
    return max_disjoint(triangles_as_arcs(t));
}

inline int max_cycle_packing(const LinearTournament& t)
{
    return max_disjoint(cycles_as_arcs(t, t.size()));
}

// Fewest backward arcs over all n! orderings.
inline int min_fas(const LinearTournament& t)
{
    std::vector<int> order(static_cast<std::size_t>(t.size()));
    std::iota(order.begin(), order.end(), 0);
    int best = t.size() * t.size();
    do
    {
        int back = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                back += t.has_arc(order[j], order[i]);
        best = std::min(best, back);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Maximum matching by trying every subset of edges.
inline int max_matching(int left, int right, const std::vector<std::pair<int, int>>& edges)
{
    int best = 0;
    const auto m = edges.size();
    for (unsigned long mask = 0; mask < (1UL << m); ++mask)
    {
        std::vector<char> l(static_cast<std::size_t>(left)), r(static_cast<std::size_t>(right));
        bool ok = true;
        int size = 0;
        for (std::size_t e = 0; e < m && ok; ++e)
            if (mask >> e & 1UL)
            {
                auto [a, b] = edges[e];
                ok = !l[static_cast<std::size_t>(a)] && !r[static_cast<std::size_t>(b)];
                l[static_cast<std::size_t>(a)] = r[static_cast<std::size_t>(b)] = 1;
                ++size;
            }
        if (ok)
            best = std::max(best, size);
    }
    return best;
}

} // namespace brute
