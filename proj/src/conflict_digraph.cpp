#include "tourpack/conflict_digraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace tourpack::sparse {

bool Digraph::has_arc(int u, int v) const
{
    const auto& o = out[static_cast<std::size_t>(u)];
    return std::binary_search(o.begin(), o.end(), v);
}

Digraph Digraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs)
{
    Digraph g;
    g.out.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : arcs)
    {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("digraph arc out of range or a self-loop");
        g.out[static_cast<std::size_t>(u)].push_back(v);
    }
    for (auto& o : g.out)
    {
        std::sort(o.begin(), o.end());
        o.erase(std::unique(o.begin(), o.end()), o.end());
    }
    return g;
}

std::vector<std::vector<int>> strong_components(const Digraph& g)
{
    // Iterative Tarjan.
    const int n = g.size();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    for (int root = 0; root < n; ++root)
    {
        if (index[static_cast<std::size_t>(root)] >= 0)
            continue;
        call.push_back({root, 0});
        while (!call.empty())
        {
            auto& [v, next] = call.back();
            auto vi = static_cast<std::size_t>(v);
            if (next == 0)
            {
                index[vi] = low[vi] = counter++;
                stack.push_back(v);
                on_stack[vi] = 1;
            }
            const auto& adj = g.out[vi];
            if (next < adj.size())
            {
                int w = adj[next++];
                auto wi = static_cast<std::size_t>(w);
                if (index[wi] < 0)
                    call.push_back({w, 0});
                else if (on_stack[wi])
                    low[vi] = std::min(low[vi], index[wi]);
                continue;
            }
            if (low[vi] == index[vi])
            {
                std::vector<int> comp;
                int w;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            int finished = v;
            call.pop_back();
            if (!call.empty())
            {
                auto parent = static_cast<std::size_t>(call.back().first);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

Triangle ConflictDigraph::witness(int i, int j) const
{
    const auto& o = graph.out[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(o.begin(), o.end(), j);
    if (it == o.end() || *it != j)
        throw std::logic_error("conflict digraph has no arc e" + std::to_string(i) + " -> e" + std::to_string(j));
    auto k = static_cast<std::size_t>(it - o.begin());
    const Arc& ei = nodes[static_cast<std::size_t>(i)];
    const Arc& ej = nodes[static_cast<std::size_t>(j)];
    if (head_witness[static_cast<std::size_t>(i)][k])
        return Triangle(ei.head, ej.head, ei.tail);
    if (tail_witness[static_cast<std::size_t>(i)][k])
        return Triangle(ei.head, ej.tail, ei.tail);
    throw std::logic_error("conflict digraph arc without a recorded witness");
}

ConflictDigraph build_conflict_digraph(const LinearTournament& t)
{
    if (!is_fully_sparse(t))
        throw TournamentError("build_conflict_digraph needs a fully sparse tournament");
    for (const auto& a : t.backward())
        if (a.tail == a.head + 1)
            throw TournamentError("build_conflict_digraph needs a normalized representation; backward arc " +
                                  to_string(a) + " joins consecutive positions");

    ConflictDigraph g;
    g.nodes = t.backward();
    std::sort(g.nodes.begin(), g.nodes.end(), [](const Arc& a, const Arc& b) { return a.head < b.head; });
    const auto b = g.nodes.size();
    g.graph.out.resize(b);
    g.head_witness.resize(b);
    g.tail_witness.resize(b);

    auto directed = [&](Vertex x, Vertex y, Vertex z) {
        return t.has_arc_unchecked(x, y) && t.has_arc_unchecked(y, z) && t.has_arc_unchecked(z, x);
    };
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
        {
            if (i == j)
                continue;
            const Arc& ei = g.nodes[i];
            const Arc& ej = g.nodes[j];
            bool hw = directed(ei.head, ej.head, ei.tail);
            bool tw = directed(ei.head, ej.tail, ei.tail);
            if (hw || tw)
            {
                g.graph.out[i].push_back(static_cast<int>(j));
                g.head_witness[i].push_back(hw);
                g.tail_witness[i].push_back(tw);
            }
        }
    return g;
}

std::vector<ComponentClass> classify_components(const Digraph& g)
{
    auto comps = strong_components(g);
    std::vector<int> comp_of(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c])
            comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::vector<ComponentClass> out;
    for (std::size_t c = 0; c < comps.size(); ++c)
    {
        ComponentClass cls;
        cls.vertices = comps[c];
        cls.terminal = true;
        std::size_t internal = 0;
        bool all_digons = true;
        for (int u : comps[c])
            for (int v : g.out[static_cast<std::size_t>(u)])
            {
                if (comp_of[static_cast<std::size_t>(v)] != static_cast<int>(c))
                {
                    cls.terminal = false;
                    continue;
                }
                ++internal;
                if (!g.has_arc(v, u))
                    all_digons = false;
            }
        // A strong component is connected, so it is a digoned tree exactly
        // when every arc is in a digon and there are |S|-1 digons.
        if (comps[c].size() == 1)
            cls.kind = ComponentKind::isolated_vertex;
        else if (all_digons && internal == 2 * (comps[c].size() - 1))
            cls.kind = ComponentKind::digoned_tree;
        else
            cls.kind = ComponentKind::has_long_cycle;
        out.push_back(std::move(cls));
    }
    return out;
}

int terminal_deficit(std::span<const ComponentClass> components)
{
    int k = 0;
    for (const auto& c : components)
        if (c.terminal && c.kind != ComponentKind::has_long_cycle)
            ++k;
    return k;
}

namespace {

std::vector<std::vector<int>> reversed(const Digraph& g)
{
    std::vector<std::vector<int>> in(static_cast<std::size_t>(g.size()));
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.out[static_cast<std::size_t>(u)])
            in[static_cast<std::size_t>(v)].push_back(u);
    return in; // sorted, since u increases
}

// Multi-source BFS over reversed arcs: every vertex reached gets its out-arc
// pointed at the vertex it was reached from. `allowed` filters vertices.
template <typename Allowed>
void grow_in_branching(const std::vector<std::vector<int>>& in, std::vector<int> sources, std::vector<int>& choice,
                       std::vector<char>& reached, Allowed allowed)
{
    std::sort(sources.begin(), sources.end());
    std::deque<int> queue(sources.begin(), sources.end());
    for (int s : sources)
        reached[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty())
    {
        int p = queue.front();
        queue.pop_front();
        for (int w : in[static_cast<std::size_t>(p)])
        {
            if (reached[static_cast<std::size_t>(w)] || !allowed(w))
                continue;
            reached[static_cast<std::size_t>(w)] = 1;
            choice[static_cast<std::size_t>(w)] = p;
            queue.push_back(w);
        }
    }
}

// A cycle of length >= 3 inside `members`: the first arc u -> v (in index
// order) with a shortest v ~> u path that does not use the arc v -> u.
std::vector<int> long_cycle(const Digraph& g, const std::vector<char>& member)
{
    const int n = g.size();
    for (int u = 0; u < n; ++u)
    {
        if (!member[static_cast<std::size_t>(u)])
            continue;
        for (int v : g.out[static_cast<std::size_t>(u)])
        {
            if (!member[static_cast<std::size_t>(v)])
                continue;
            std::vector<int> parent(static_cast<std::size_t>(n), -1);
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            std::deque<int> queue{v};
            seen[static_cast<std::size_t>(v)] = 1;
            while (!queue.empty() && !seen[static_cast<std::size_t>(u)])
            {
                int p = queue.front();
                queue.pop_front();
                for (int w : g.out[static_cast<std::size_t>(p)])
                {
                    if (seen[static_cast<std::size_t>(w)] || !member[static_cast<std::size_t>(w)] || (p == v && w == u))
                        continue;
                    seen[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = p;
                    queue.push_back(w);
                }
            }
            if (!seen[static_cast<std::size_t>(u)])
                continue;
            std::vector<int> path;
            for (int w = u; w != v; w = parent[static_cast<std::size_t>(w)])
                path.push_back(w);
            path.push_back(v);
            std::reverse(path.begin(), path.end()); // v ... u
            std::vector<int> cycle{u};
            cycle.insert(cycle.end(), path.begin(), path.end() - 1);
            return cycle; // u -> v -> ... -> (back to u)
        }
    }
    return {};
}

} // namespace

ArcSet solve_pi_prime(const Digraph& g)
{
    const int n = g.size();
    const auto in = reversed(g);
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    std::vector<int> terminal_vertices;

    for (const auto& comp : classify_components(g))
    {
        if (!comp.terminal)
            continue;
        terminal_vertices.insert(terminal_vertices.end(), comp.vertices.begin(), comp.vertices.end());
        std::vector<char> member(static_cast<std::size_t>(n), 0);
        for (int v : comp.vertices)
            member[static_cast<std::size_t>(v)] = 1;
        auto inside = [&](int w) { return member[static_cast<std::size_t>(w)] != 0; };

        switch (comp.kind)
        {
        case ComponentKind::isolated_vertex:
            reached[static_cast<std::size_t>(comp.vertices.front())] = 1;
            break;
        case ComponentKind::digoned_tree:
            grow_in_branching(in, {comp.vertices.front()}, choice, reached, inside);
            break;
        case ComponentKind::has_long_cycle: {
            auto cycle = long_cycle(g, member);
            if (cycle.size() < 3)
                throw std::logic_error("component classified as having a long cycle but none was found");
            for (std::size_t i = 0; i < cycle.size(); ++i)
                choice[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
            grow_in_branching(in, cycle, choice, reached, inside);
            break;
        }
        }
    }

    // Everything else drains into the terminal components.
    grow_in_branching(in, terminal_vertices, choice, reached, [](int) { return true; });

    ArcSet x;
    for (int v = 0; v < n; ++v)
        if (choice[static_cast<std::size_t>(v)] >= 0)
            x.emplace_back(v, choice[static_cast<std::size_t>(v)]);
    return x;
}

bool is_digon_free_functional(const Digraph& g, std::span<const std::pair<int, int>> x)
{
    std::vector<int> out(static_cast<std::size_t>(g.size()), -1);
    for (auto [u, v] : x)
    {
        if (u < 0 || u >= g.size() || v < 0 || v >= g.size() || !g.has_arc(u, v))
            return false;
        if (out[static_cast<std::size_t>(u)] >= 0)
            return false;
        out[static_cast<std::size_t>(u)] = v;
    }
    for (auto [u, v] : x)
        if (out[static_cast<std::size_t>(v)] == u)
            return false;
    return true;
}

TrianglePacking pi_map(const ConflictDigraph& g, std::span<const std::pair<int, int>> x)
{
    TrianglePacking out;
    out.reserve(x.size());
    for (auto [i, j] : x)
        out.push_back(g.witness(i, j));
    return out;
}

} // namespace tourpack::sparse
