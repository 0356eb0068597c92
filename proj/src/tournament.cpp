#include "tourpack/tournament.hpp"

#include <algorithm>

namespace tourpack {

LinearTournament LinearTournament::from_backward_arcs(int n, std::span<const Arc> backward)
{
    if (n < 0)
        throw TournamentError("negative vertex count");

    LinearTournament t;
    t.n_ = n;
    t.reversed_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    t.backward_.assign(backward.begin(), backward.end());

    for (const auto& a : t.backward_)
    {
        if (a.head < 0 || a.tail >= n || a.head >= a.tail)
            throw TournamentError("backward arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                  " must satisfy 0 <= head < tail < " + std::to_string(n));
        auto& slot = t.reversed_[t.index(a.tail, a.head)];
        if (slot)
            throw TournamentError("duplicate backward arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
        slot = 1;
    }
    std::sort(t.backward_.begin(), t.backward_.end());
    return t;
}

bool LinearTournament::has_arc(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw TournamentError("vertex out of range");
    if (u == v)
        throw TournamentError("has_arc needs two distinct vertices");
    return has_arc_unchecked(u, v);
}

LinearTournament concatenate(const LinearTournament& first, const LinearTournament& second)
{
    std::vector<Arc> arcs = first.backward();
    const int shift = first.size();
    for (const auto& a : second.backward())
        arcs.push_back({a.tail + shift, a.head + shift});
    return LinearTournament::from_backward_arcs(first.size() + second.size(), arcs);
}

InducedSubtournament induced_subtournament(const LinearTournament& t, std::span<const Vertex> vertices)
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    for (Vertex v : keep)
        if (v < 0 || v >= t.size())
            throw TournamentError("induced_subtournament: vertex " + std::to_string(v) + " out of range");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<int> position(static_cast<std::size_t>(t.size()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        position[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

    std::vector<Arc> arcs;
    for (const auto& a : t.backward())
    {
        int nt = position[static_cast<std::size_t>(a.tail)];
        int nh = position[static_cast<std::size_t>(a.head)];
        if (nt >= 0 && nh >= 0)
            arcs.push_back({nt, nh});
    }
    return {LinearTournament::from_backward_arcs(static_cast<int>(keep.size()), arcs), std::move(keep)};
}

std::vector<int> backward_degrees(const LinearTournament& t)
{
    std::vector<int> deg(static_cast<std::size_t>(t.size()), 0);
    for (const auto& a : t.backward())
    {
        ++deg[static_cast<std::size_t>(a.tail)];
        ++deg[static_cast<std::size_t>(a.head)];
    }
    return deg;
}

bool is_sparse(const LinearTournament& t)
{
    auto deg = backward_degrees(t);
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
}

bool is_fully_sparse(const LinearTournament& t)
{
    auto deg = backward_degrees(t);
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

} // namespace tourpack
