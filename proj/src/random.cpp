#include "tourpack/random.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tourpack {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit)
        x = next();
    return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

LinearTournament random_tournament(int n, double p, Rng& rng)
{
    std::vector<Arc> backward;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p))
                backward.push_back({v, u});
    return LinearTournament::from_backward_arcs(n, backward);
}

LinearTournament random_sparse_tournament(int n, Rng& rng, double density)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Arc> backward;
    const int target_arcs = static_cast<int>(density * n / 2.0);
    // Rejection sampling: propose spans >= 2 and keep those that stay a matching.
    for (int attempts = 0; n >= 3 && static_cast<int>(backward.size()) < target_arcs && attempts < 50 * n; ++attempts)
    {
        int h = rng.between(0, n - 3);
        int t = rng.between(h + 2, n - 1);
        if (used[static_cast<std::size_t>(h)] || used[static_cast<std::size_t>(t)])
            continue;
        used[static_cast<std::size_t>(h)] = used[static_cast<std::size_t>(t)] = 1;
        backward.push_back({t, h});
    }
    return LinearTournament::from_backward_arcs(n, backward);
}

LinearTournament random_fully_sparse_tournament(int n, Rng& rng)
{
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("fully sparse tournaments need an even vertex count >= 4, got " + std::to_string(n));
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (;;)
    {
        for (int i = 0; i < n; ++i)
            order[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        std::vector<Arc> backward;
        bool ok = true;
        for (std::size_t i = 0; i < order.size(); i += 2)
        {
            int a = std::min(order[i], order[i + 1]);
            int b = std::max(order[i], order[i + 1]);
            if (b - a < 2)
            {
                ok = false;
                break;
            }
            backward.push_back({b, a});
        }
        if (ok)
            return LinearTournament::from_backward_arcs(n, backward);
    }
}

} // namespace tourpack
