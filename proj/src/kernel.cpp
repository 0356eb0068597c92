#include "tourpack/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tourpack::kernel {

TrianglePacking greedy_maximal_packing(const LinearTournament& t)
{
    TrianglePacking out;
    std::vector<std::uint8_t> used(t.arc_count(), 0);
    for (const auto& tri : enumerate_triangles(t))
    {
        auto arcs = tri.arcs();
        if (std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return used[t.pair_index(a.tail, a.head)]; }))
            continue;
        for (const auto& a : arcs)
            used[t.pair_index(a.tail, a.head)] = 1;
        out.push_back(tri);
    }
    return out;
}

namespace {

std::vector<char> membership(const LinearTournament& t, std::span<const Triangle> x)
{
    std::vector<char> in(static_cast<std::size_t>(t.size()), 0);
    for (const auto& tri : x)
        for (Vertex v : tri.vertices())
            in[static_cast<std::size_t>(v)] = 1;
    return in;
}

} // namespace

Validation check_maximal_structure(const LinearTournament& t, std::span<const Triangle> x)
{
    auto in = membership(t, x);
    std::vector<Vertex> inside, outside;
    for (Vertex v = 0; v < t.size(); ++v)
        (in[static_cast<std::size_t>(v)] ? inside : outside).push_back(v);

    // A tournament is acyclic iff it has no triangle.
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j)
        {
            const Vertex u = outside[i], w = outside[j];
            for (std::size_t l = j + 1; l < outside.size(); ++l)
            {
                const Vertex z = outside[l];
                if (t.has_arc_unchecked(u, w) == t.has_arc_unchecked(w, z) &&
                    t.has_arc_unchecked(w, z) == t.has_arc_unchecked(z, u))
                    return Validation::fail("triangle on outside vertices " + std::to_string(u) + ", " +
                                            std::to_string(w) + ", " + std::to_string(z));
            }
            for (Vertex v : inside)
                if (t.has_arc_unchecked(u, w) == t.has_arc_unchecked(w, v) &&
                    t.has_arc_unchecked(w, v) == t.has_arc_unchecked(v, u))
                    return Validation::fail("triangle on " + std::to_string(v) + " with outside vertices " +
                                            std::to_string(u) + " and " + std::to_string(w));
        }
    return {};
}

ConflictBipartite build_conflict_bipartite(const LinearTournament& t, std::span<const Triangle> x)
{
    auto in = membership(t, x);
    ConflictBipartite b;
    std::vector<Vertex> inside;
    for (Vertex v = 0; v < t.size(); ++v)
        (in[static_cast<std::size_t>(v)] ? inside : b.free).push_back(v);
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            b.arcs.push_back(t.arc_between(inside[i], inside[j]));

    b.graph.right_size = static_cast<int>(b.free.size());
    b.graph.adj.resize(b.arcs.size());
    for (std::size_t i = 0; i < b.arcs.size(); ++i)
    {
        const Arc& a = b.arcs[i];
        for (std::size_t r = 0; r < b.free.size(); ++r)
        {
            const Vertex u = b.free[r];
            if (t.has_arc_unchecked(a.head, u) && t.has_arc_unchecked(u, a.tail))
                b.graph.adj[i].push_back(static_cast<int>(r));
        }
    }
    return b;
}

KernelResult kernelize(const LinearTournament& t, int k)
{
    if (k < 1)
        throw std::invalid_argument("kernelize needs k >= 1");
    KernelResult out;
    out.k = k;
    out.greedy = greedy_maximal_packing(t);
    if (static_cast<int>(out.greedy.size()) >= k)
    {
        out.outcome = Outcome::early_yes;
        return out;
    }
    if (auto v = check_maximal_structure(t, out.greedy); !v)
        throw std::logic_error("greedy packing is not maximal: " + v.message);

    auto b = build_conflict_bipartite(t, out.greedy);
    auto m = maximum_bipartite_matching(b.graph);
    out.matching_size = m.size;

    auto in = membership(t, out.greedy);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < t.size(); ++v)
        if (in[static_cast<std::size_t>(v)])
            keep.push_back(v);
    for (std::size_t r = 0; r < b.free.size(); ++r)
        if (m.right[r] >= 0)
            keep.push_back(b.free[r]);

    auto sub = induced_subtournament(t, keep);
    out.outcome = Outcome::kernel;
    out.tournament = std::move(sub.tournament);
    out.original = std::move(sub.original);
    if (out.tournament.size() > 6 * k)
        throw std::logic_error("kernel has " + std::to_string(out.tournament.size()) + " vertices, above 6k");
    return out;
}

} // namespace tourpack::kernel
