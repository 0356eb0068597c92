#include "tourpack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace tourpack::oracle {

void OracleBudget::validate() const
{
    if (max_vertices <= 0 || max_cycles == 0 || !(time_limit_seconds > 0.0))
        throw std::invalid_argument("oracle budget fields must all be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline
{
public:
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds)))
    {
    }

    void check()
    {
        if ((++ticks_ & 1023u) == 0 && Clock::now() > end_)
            throw BudgetExceeded("oracle time limit exceeded");
    }

private:
    Clock::time_point end_;
    std::uint32_t ticks_ = 0;
};

void require_vertices(const LinearTournament& t, const OracleBudget& budget)
{
    budget.validate();
    if (t.size() > budget.max_vertices)
        throw BudgetExceeded("instance has " + std::to_string(t.size()) + " vertices, oracle budget allows " +
                             std::to_string(budget.max_vertices));
}

// One candidate member of a packing, as the pair indices of its arcs.
struct Item
{
    std::vector<std::size_t> arcs;
};

// Include/exclude branch and bound for maximum arc-disjoint set packing.
// Bound at a node: current size plus the minimum of
//   - remaining compatible items,
//   - free arcs those items cover, divided by the smallest item length,
//   - free backward arcs those items cover (every cycle uses a backward arc).
class PackingSearch
{
public:
    PackingSearch(const std::vector<Item>& items, std::size_t arc_count, std::vector<std::uint8_t> backward,
                  std::size_t min_len, Deadline& deadline)
        : items_(items), used_(arc_count, 0), stamp_(arc_count, 0), backward_(std::move(backward)),
          min_len_(min_len), deadline_(deadline)
    {
    }

    std::vector<int> maximize(std::vector<int> order)
    {
        order_ = std::move(order);
        target_.reset();
        best_.clear();
        chosen_.clear();
        found_ = false;
        dfs(0);
        return best_;
    }

    /// First packing of exactly `target` items in include-first order.
    std::optional<std::vector<int>> first_of_size(std::vector<int> order, int target)
    {
        order_ = std::move(order);
        target_ = target;
        best_.clear();
        chosen_.clear();
        found_ = false;
        if (target == 0)
            return std::vector<int>{};
        dfs(0);
        if (!found_)
            return std::nullopt;
        return best_;
    }

private:
    bool fits(int item) const
    {
        for (auto a : items_[static_cast<std::size_t>(item)].arcs)
            if (used_[a])
                return false;
        return true;
    }

    void set(int item, std::uint8_t value)
    {
        for (auto a : items_[static_cast<std::size_t>(item)].arcs)
            used_[a] = value;
    }

    int bound(std::size_t pos)
    {
        ++epoch_;
        std::size_t compatible = 0, free_arcs = 0, free_backward = 0;
        for (std::size_t i = pos; i < order_.size(); ++i)
        {
            int item = order_[i];
            if (!fits(item))
                continue;
            ++compatible;
            for (auto a : items_[static_cast<std::size_t>(item)].arcs)
                if (stamp_[a] != epoch_)
                {
                    stamp_[a] = epoch_;
                    ++free_arcs;
                    free_backward += backward_[a];
                }
        }
        auto extra = std::min({compatible, free_arcs / min_len_, free_backward});
        return static_cast<int>(chosen_.size() + extra);
    }

    bool pruned(std::size_t pos)
    {
        int b = bound(pos);
        if (target_)
            return b < *target_;
        return b <= static_cast<int>(best_.size());
    }

    void dfs(std::size_t pos)
    {
        deadline_.check();
        if (target_)
        {
            if (static_cast<int>(chosen_.size()) == *target_)
            {
                best_ = chosen_;
                found_ = true;
                return;
            }
        }
        else if (chosen_.size() > best_.size())
            best_ = chosen_;

        if (pruned(pos))
            return;
        for (std::size_t i = pos; i < order_.size(); ++i)
        {
            int item = order_[i];
            if (!fits(item))
                continue;
            set(item, 1);
            chosen_.push_back(item);
            dfs(i + 1);
            chosen_.pop_back();
            set(item, 0);
            if (found_ || pruned(i + 1))
                return;
        }
    }

    const std::vector<Item>& items_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint8_t> backward_;
    std::size_t min_len_;
    Deadline& deadline_;

    std::vector<int> order_;
    std::optional<int> target_;
    std::vector<int> chosen_;
    std::vector<int> best_;
    bool found_ = false;
};

std::vector<std::uint8_t> backward_pairs(const LinearTournament& t)
{
    std::vector<std::uint8_t> out(t.arc_count(), 0);
    for (const auto& a : t.backward())
        out[t.pair_index(a.tail, a.head)] = 1;
    return out;
}

template <typename Member>
std::vector<Item> items_of(const LinearTournament& t, const std::vector<Member>& members)
{
    std::vector<Item> items;
    items.reserve(members.size());
    for (const auto& m : members)
    {
        Item it;
        for (const auto& a : m.arcs())
            it.arcs.push_back(t.pair_index(a.tail, a.head));
        items.push_back(std::move(it));
    }
    return items;
}

// Sum over an item's arcs of how many other items use that arc.
std::vector<std::size_t> arc_pressure(const std::vector<Item>& items, std::size_t arc_count)
{
    std::vector<std::size_t> uses(arc_count, 0);
    for (const auto& it : items)
        for (auto a : it.arcs)
            ++uses[a];
    std::vector<std::size_t> out(items.size(), 0);
    for (std::size_t i = 0; i < items.size(); ++i)
        for (auto a : items[i].arcs)
            out[i] += uses[a] - 1;
    return out;
}

// Exact number of other items sharing at least one arc.
std::vector<std::size_t> conflict_counts(const std::vector<Item>& items, std::size_t arc_count)
{
    std::vector<std::vector<int>> by_arc(arc_count);
    for (std::size_t i = 0; i < items.size(); ++i)
        for (auto a : items[i].arcs)
            by_arc[a].push_back(static_cast<int>(i));
    std::vector<std::size_t> out(items.size(), 0);
    std::vector<std::size_t> seen(items.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < items.size(); ++i)
    {
        for (auto a : items[i].arcs)
            for (int j : by_arc[a])
                if (static_cast<std::size_t>(j) != i && seen[static_cast<std::size_t>(j)] != i)
                {
                    seen[static_cast<std::size_t>(j)] = i;
                    ++out[i];
                }
    }
    return out;
}

std::vector<int> identity_order(std::size_t count)
{
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Optimum value with a good branching order, then the lexicographically
// first packing of that size (members are given in lexicographic order).
template <typename Member>
std::vector<Member> solve_packing(const LinearTournament& t, const std::vector<Member>& members,
                                  std::vector<int> branch_order, std::size_t min_len, Deadline& deadline)
{
    auto items = items_of(t, members);
    PackingSearch search(items, t.arc_count(), backward_pairs(t), min_len, deadline);
    auto best = search.maximize(std::move(branch_order));
    auto lex = search.first_of_size(identity_order(members.size()), static_cast<int>(best.size()));
    if (!lex)
        throw std::logic_error("oracle: optimum could not be reproduced in lexicographic order");
    std::vector<Member> out;
    for (int i : *lex)
        out.push_back(members[static_cast<std::size_t>(i)]);
    return out;
}

void cycles_from(const LinearTournament& t, Vertex start, std::vector<Vertex>& path, std::vector<char>& on_path,
                 std::vector<Cycle>& out, std::size_t limit)
{
    const Vertex last = path.back();
    for (Vertex next = start + 1; next < t.size(); ++next)
    {
        if (on_path[static_cast<std::size_t>(next)] || !t.has_arc_unchecked(last, next))
            continue;
        path.push_back(next);
        on_path[static_cast<std::size_t>(next)] = 1;
        if (path.size() >= 3 && t.has_arc_unchecked(next, start))
        {
            if (out.size() >= limit)
                throw BudgetExceeded("more than " + std::to_string(limit) + " simple cycles");
            out.emplace_back(path);
        }
        cycles_from(t, start, path, on_path, out, limit);
        on_path[static_cast<std::size_t>(next)] = 0;
        path.pop_back();
    }
}

} // namespace

TriangleOptimum exact_max_triangle_packing(const LinearTournament& t, const OracleBudget& budget)
{
    require_vertices(t, budget);
    Deadline deadline(budget.time_limit_seconds);

    auto triangles = enumerate_triangles(t); // sorted lexicographically
    auto items = items_of(t, triangles);
    auto conflicts = conflict_counts(items, t.arc_count());
    auto order = identity_order(triangles.size());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return conflicts[static_cast<std::size_t>(a)] < conflicts[static_cast<std::size_t>(b)];
    });

    TriangleOptimum result;
    result.packing = solve_packing(t, triangles, std::move(order), 3, deadline);
    result.size = static_cast<int>(result.packing.size());
    return result;
}

std::vector<Cycle> enumerate_cycles(const LinearTournament& t, std::size_t limit)
{
    std::vector<Cycle> out;
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<std::size_t>(t.size()), 0);
    for (Vertex s = 0; s < t.size(); ++s)
    {
        path.assign(1, s);
        on_path[static_cast<std::size_t>(s)] = 1;
        cycles_from(t, s, path, on_path, out, limit);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleOptimum exact_max_cycle_packing(const LinearTournament& t, const OracleBudget& budget)
{
    budget.validate();
    Deadline deadline(budget.time_limit_seconds);

    auto cycles = enumerate_cycles(t, budget.max_cycles);
    auto items = items_of(t, cycles);
    auto pressure = arc_pressure(items, t.arc_count());
    auto order = identity_order(cycles.size());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto la = cycles[static_cast<std::size_t>(a)].length(), lb = cycles[static_cast<std::size_t>(b)].length();
        if (la != lb)
            return la < lb;
        return pressure[static_cast<std::size_t>(a)] < pressure[static_cast<std::size_t>(b)];
    });

    CycleOptimum result;
    result.packing = solve_packing(t, cycles, std::move(order), 3, deadline);
    result.size = static_cast<int>(result.packing.size());
    return result;
}

FasOptimum exact_min_fas(const LinearTournament& t, const OracleBudget& budget)
{
    require_vertices(t, budget);
    const int n = t.size();
    if (n > 24)
        throw BudgetExceeded("exact_min_fas supports at most 24 vertices");
    Deadline deadline(budget.time_limit_seconds);

    std::vector<std::uint32_t> out_mask(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && t.has_arc_unchecked(u, v))
                out_mask[static_cast<std::size_t>(u)] |= 1u << v;

    // cost[S]: fewest backward arcs among orderings that place S first.
    const std::uint32_t full = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u);
    std::vector<int> cost(std::size_t{1} << n, std::numeric_limits<int>::max());
    cost[0] = 0;
    for (std::uint32_t s = 0; s < full; ++s)
    {
        deadline.check();
        if (cost[s] == std::numeric_limits<int>::max())
            continue;
        for (int v = 0; v < n; ++v)
        {
            if (s & (1u << v))
                continue;
            int c = cost[s] + std::popcount(out_mask[static_cast<std::size_t>(v)] & s);
            auto& slot = cost[s | (1u << v)];
            slot = std::min(slot, c);
        }
    }

    FasOptimum result;
    result.size = cost[full];
    std::vector<Vertex> reversed_order;
    for (std::uint32_t s = full; s != 0;)
    {
        for (int v = 0; v < n; ++v)
        {
            if (!(s & (1u << v)))
                continue;
            std::uint32_t rest = s & ~(1u << v);
            if (cost[rest] != std::numeric_limits<int>::max() &&
                cost[rest] + std::popcount(out_mask[static_cast<std::size_t>(v)] & rest) == cost[s])
            {
                reversed_order.push_back(v);
                s = rest;
                break;
            }
        }
    }
    result.ordering.assign(reversed_order.rbegin(), reversed_order.rend());
    for (std::size_t i = 0; i < result.ordering.size(); ++i)
        for (std::size_t j = i + 1; j < result.ordering.size(); ++j)
            if (t.has_arc_unchecked(result.ordering[j], result.ordering[i]))
                result.arcs.push_back({result.ordering[j], result.ordering[i]});
    std::sort(result.arcs.begin(), result.arcs.end());
    return result;
}

} // namespace tourpack::oracle
