#include "tourpack/steiner.hpp"

#include <algorithm>
#include <string>

namespace tourpack::steiner {

namespace {

std::array<int, 3> sorted(int a, int b, int c)
{
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// Bose: points (x, i), x in Z_{2q+1}, i in Z_3, labelled x + i(2q+1).
// Uses the idempotent commutative quasigroup x o y = (x + y) / 2 mod 2q+1.
TripleSystem bose(int n)
{
    const int order = n / 3;
    const int half = (order + 1) / 2; // inverse of 2 modulo an odd order
    auto op = [&](int x, int y) { return ((x + y) * half) % order; };
    auto label = [&](int x, int i) { return x + (i % 3) * order; };

    TripleSystem sts{n, {}};
    for (int x = 0; x < order; ++x)
        sts.triples.push_back(sorted(label(x, 0), label(x, 1), label(x, 2)));
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            for (int i = 0; i < 3; ++i)
                sts.triples.push_back(sorted(label(x, i), label(y, i), label(op(x, y), i + 1)));
    return sts;
}

// Skolem: points (x, i), x in Z_{2q}, i in Z_3, labelled x + 2qi, plus the
// point at infinity labelled 6q. Uses the half-idempotent commutative
// quasigroup x o y = f((x + y) mod 2q) with f(2z) = z, f(2z+1) = q + z.
TripleSystem skolem(int n)
{
    const int q = (n - 1) / 6;
    const int order = 2 * q;
    const int infinity = n - 1;
    auto op = [&](int x, int y) {
        int s = (x + y) % order;
        return s % 2 == 0 ? s / 2 : q + (s - 1) / 2;
    };
    auto label = [&](int x, int i) { return x + (i % 3) * order; };

    TripleSystem sts{n, {}};
    for (int x = 0; x < q; ++x)
        sts.triples.push_back(sorted(label(x, 0), label(x, 1), label(x, 2)));
    for (int x = 0; x < q; ++x)
        for (int i = 0; i < 3; ++i)
            sts.triples.push_back(sorted(infinity, label(x + q, i), label(x, i + 1)));
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            for (int i = 0; i < 3; ++i)
                sts.triples.push_back(sorted(label(x, i), label(y, i), label(op(x, y), i + 1)));
    return sts;
}

} // namespace

TripleSystem steiner_triple_system(int n)
{
    if (n < 1 || (n % 6 != 1 && n % 6 != 3))
        throw TournamentError("a Steiner triple system needs n = 1 or 3 (mod 6), got n = " + std::to_string(n));
    auto sts = n % 6 == 3 ? bose(n) : skolem(n);
    std::sort(sts.triples.begin(), sts.triples.end());
    return sts;
}

std::vector<int> pair_coverage(const TripleSystem& sts)
{
    auto idx = [n = sts.n](int u, int v) {
        if (u > v)
            std::swap(u, v);
        return static_cast<std::size_t>(u * n - u * (u + 1) / 2 + (v - u - 1));
    };
    std::vector<int> cover(static_cast<std::size_t>(sts.n) * static_cast<std::size_t>(std::max(sts.n - 1, 0)) / 2, 0);
    for (const auto& t : sts.triples)
    {
        ++cover[idx(t[0], t[1])];
        ++cover[idx(t[0], t[2])];
        ++cover[idx(t[1], t[2])];
    }
    return cover;
}

LinearTournament orient_clique(const TripleSystem& sts)
{
    std::vector<Arc> backward;
    backward.reserve(sts.triples.size());
    for (const auto& t : sts.triples)
        backward.push_back({t[2], t[0]});
    return LinearTournament::from_backward_arcs(sts.n, backward);
}

TrianglePacking clique_triangles(const TripleSystem& sts)
{
    TrianglePacking out;
    for (const auto& t : sts.triples)
        out.emplace_back(t[0], t[1], t[2]);
    return out;
}

LinearTournament blow_up(const LinearTournament& t, int block_size)
{
    if (block_size < 1)
        throw TournamentError("blow_up needs block_size >= 1");
    std::vector<Arc> backward;
    backward.reserve(t.backward().size() * static_cast<std::size_t>(block_size * block_size));
    for (const auto& a : t.backward())
        for (int i = 0; i < block_size; ++i)
            for (int j = 0; j < block_size; ++j)
                backward.push_back({a.tail * block_size + i, a.head * block_size + j});
    return LinearTournament::from_backward_arcs(t.size() * block_size, backward);
}

TrianglePacking tripartite_perfect_packing(const LinearTournament& host, std::span<const Vertex> a,
                                           std::span<const Vertex> b, std::span<const Vertex> c)
{
    const std::size_t s = a.size();
    if (b.size() != s || c.size() != s)
        throw TournamentError("tripartite_perfect_packing needs three blocks of equal size");
    auto require = [&](Vertex u, Vertex v) {
        if (!host.has_arc(u, v))
            throw TournamentError("missing cross arc " + std::to_string(u) + "->" + std::to_string(v));
    };
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
        {
            require(a[i], b[j]);
            require(b[i], c[j]);
            require(c[i], a[j]);
        }

    TrianglePacking out;
    out.reserve(s * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            out.emplace_back(a[i], b[j], c[(i + j + 1) % s]);
    return out;
}

} // namespace tourpack::steiner
