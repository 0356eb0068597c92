#include "tourpack/matching.hpp"

#include <deque>

namespace tourpack {

namespace {

bool augment(const BipartiteGraph& g, int l, std::vector<char>& visited, Matching& m)
{
    for (int r : g.adj[static_cast<std::size_t>(l)])
    {
        auto ri = static_cast<std::size_t>(r);
        if (visited[ri])
            continue;
        visited[ri] = 1;
        if (m.right[ri] < 0 || augment(g, m.right[ri], visited, m))
        {
            m.right[ri] = l;
            m.left[static_cast<std::size_t>(l)] = r;
            return true;
        }
    }
    return false;
}

} // namespace

Matching maximum_bipartite_matching(const BipartiteGraph& g)
{
    Matching m;
    m.left.assign(static_cast<std::size_t>(g.left_size()), -1);
    m.right.assign(static_cast<std::size_t>(g.right_size), -1);
    std::vector<char> visited(static_cast<std::size_t>(g.right_size));
    for (int l = 0; l < g.left_size(); ++l)
    {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(g, l, visited, m))
            ++m.size;
    }
    return m;
}

bool has_augmenting_path(const BipartiteGraph& g, const Matching& m)
{
    // BFS over alternating paths from every free left vertex.
    std::vector<char> seen_left(static_cast<std::size_t>(g.left_size()), 0);
    std::vector<char> seen_right(static_cast<std::size_t>(g.right_size), 0);
    std::deque<int> queue;
    for (int l = 0; l < g.left_size(); ++l)
        if (m.left[static_cast<std::size_t>(l)] < 0)
        {
            seen_left[static_cast<std::size_t>(l)] = 1;
            queue.push_back(l);
        }
    while (!queue.empty())
    {
        int l = queue.front();
        queue.pop_front();
        for (int r : g.adj[static_cast<std::size_t>(l)])
        {
            auto ri = static_cast<std::size_t>(r);
            if (seen_right[ri] || m.left[static_cast<std::size_t>(l)] == r)
                continue;
            seen_right[ri] = 1;
            int next = m.right[ri];
            if (next < 0)
                return true;
            if (!seen_left[static_cast<std::size_t>(next)])
            {
                seen_left[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    return false;
}

} // namespace tourpack
