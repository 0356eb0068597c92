#include "tourpack/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tourpack::sparse {

MappedTournament normalize_representation(const LinearTournament& t)
{
    if (!is_sparse(t))
        throw TournamentError("representation is not sparse: two backward arcs share an endpoint");

    // In a matching, the endpoints of a consecutive backward arc touch no
    // other backward arc, so one swap settles it and nothing else moves.
    MappedTournament out;
    out.original.resize(static_cast<std::size_t>(t.size()));
    std::iota(out.original.begin(), out.original.end(), 0);
    std::vector<Arc> kept;
    for (const auto& a : t.backward())
    {
        if (a.tail == a.head + 1)
            std::swap(out.original[static_cast<std::size_t>(a.head)], out.original[static_cast<std::size_t>(a.tail)]);
        else
            kept.push_back(a);
    }
    out.tournament = LinearTournament::from_backward_arcs(t.size(), kept);
    return out;
}

namespace {

void split(const LinearTournament& t, int lo, int hi, std::vector<Arc> arcs, Decomposition& out)
{
    if (lo > hi)
        return;
    std::vector<char> covered(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& a : arcs)
        covered[static_cast<std::size_t>(a.head - lo)] = covered[static_cast<std::size_t>(a.tail - lo)] = 1;
    auto free = std::find(covered.begin(), covered.end(), 0);
    if (free == covered.end())
    {
        std::vector<Vertex> vertices(static_cast<std::size_t>(hi - lo + 1));
        std::iota(vertices.begin(), vertices.end(), lo);
        auto sub = induced_subtournament(t, vertices);
        out.segments.push_back({std::move(sub.tournament), std::move(sub.original)});
        return;
    }
    const int x = lo + static_cast<int>(free - covered.begin());
    std::vector<Arc> left, right;
    for (const auto& a : arcs)
    {
        if (a.head < x && x < a.tail)
            out.x0.emplace_back(a.head, x, a.tail);
        else if (a.tail < x)
            left.push_back(a);
        else
            right.push_back(a);
    }
    split(t, lo, x - 1, std::move(left), out);
    split(t, x + 1, hi, std::move(right), out);
}

TrianglePacking lift(const TrianglePacking& p, const std::vector<Vertex>& original)
{
    TrianglePacking out;
    out.reserve(p.size());
    for (const auto& tri : p)
        out.emplace_back(original[static_cast<std::size_t>(tri[0])], original[static_cast<std::size_t>(tri[1])],
                         original[static_cast<std::size_t>(tri[2])]);
    return out;
}

} // namespace

Decomposition decompose(const LinearTournament& t)
{
    Decomposition out;
    split(t, 0, t.size() - 1, t.backward(), out);
    std::sort(out.x0.begin(), out.x0.end());
    return out;
}

TrianglePacking solve_fully_sparse(const LinearTournament& t)
{
    auto g = build_conflict_digraph(t);
    auto classes = classify_components(g.graph);
    for (const auto& c : classes)
        if (c.terminal && c.kind == ComponentKind::isolated_vertex)
            throw std::logic_error("isolated terminal component in a normalized fully sparse tournament");
    auto x = solve_pi_prime(g.graph);
    const auto expected = static_cast<std::size_t>(g.graph.size() - terminal_deficit(classes));
    if (x.size() != expected || !is_digon_free_functional(g.graph, x))
        throw std::logic_error("solution of the functional subdigraph problem is not optimal");
    return pi_map(g, x);
}

SparseOptimum max_triangle_packing_sparse(const LinearTournament& t, Execution exec)
{
    auto normal = normalize_representation(t);
    auto parts = decompose(normal.tournament);

    const auto count = static_cast<std::ptrdiff_t>(parts.segments.size());
    std::vector<TrianglePacking> solved(parts.segments.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i)
    {
        const auto& seg = parts.segments[static_cast<std::size_t>(i)];
        solved[static_cast<std::size_t>(i)] = lift(solve_fully_sparse(seg.tournament), seg.original);
    }

    TrianglePacking merged = parts.x0;
    for (const auto& p : solved)
        merged.insert(merged.end(), p.begin(), p.end());

    SparseOptimum out;
    out.packing = lift(merged, normal.original);
    std::sort(out.packing.begin(), out.packing.end());
    out.size = static_cast<int>(out.packing.size());
    if (auto v = validate_triangle_packing(t, out.packing); !v)
        throw std::logic_error("sparse solver produced an invalid packing: " + v.message);
    return out;
}

SparseCycleOptimum max_cycle_packing_sparse(const LinearTournament& t, Execution exec)
{
    auto tri = max_triangle_packing_sparse(t, exec);
    return {tri.size, as_cycles(tri.packing)};
}

} // namespace tourpack::sparse
