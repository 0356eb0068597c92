// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "tourpack/cnf.hpp"
#include "tourpack/fpt.hpp"
#include "tourpack/kernel.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/random.hpp"
#include "tourpack/reduction.hpp"
#include "tourpack/sparse.hpp"
#include "tourpack/steiner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace tourpack;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try
    {
        o = body();
    }
    catch (const std::exception& e)
    {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds)
    {
        o.ok = false;
        o.detail += " (over the " + std::to_string(limit_seconds) + " s limit)";
    }
    failures += !o.ok;
    std::printf("%s criterion %d: %s [%.3f s] %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const char* formula = "p cnf 3 2\n-1 2 -3 0\n1 -2 3 0\n";

std::vector<bool> bits(int value, int n)
{
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i)] = (value >> i & 1) != 0;
    return a;
}

Outcome reduction_structure()
{
    auto r = reduction::build_reduction(reduction::parse_dimacs(formula));
    const int n = r.tournament.size();
    const auto b = r.tournament.backward().size();
    bool ok = n == 27 && r.alpha == 15 && r.threshold == 67 && b == 67;
    return {ok, fmt("vertices=%d alpha=%lld threshold=%lld backward=%zu", n, static_cast<long long>(r.alpha),
                    static_cast<long long>(r.threshold), b)};
}

Outcome certificates()
{
    auto r = reduction::build_reduction(reduction::parse_dimacs(formula));
    int satisfying = 0, good = 0;
    for (int a = 0; a < 8; ++a)
    {
        auto x = bits(a, 3);
        if (!r.formula.satisfied_by(x))
            continue;
        ++satisfying;
        auto p = reduction::certificate_packing(r, x);
        if (static_cast<long long>(p.size()) == 67 && validate_triangle_packing(r.tournament, p).ok &&
            reduction::decode_assignment(r, p) == x)
            ++good;
    }
    return {satisfying > 0 && good == satisfying, fmt("%d/%d satisfying assignments certified at size 67", good, satisfying)};
}

Outcome sparse_vs_oracle()
{
    Rng rng(1001);
    int match = 0;
    const int total = 250;
    for (int i = 0; i < total; ++i)
    {
        auto t = random_sparse_tournament(rng.between(3, 12), rng, rng.unit());
        auto s = sparse::max_triangle_packing_sparse(t, Execution::parallel);
        match += s.size == oracle::exact_max_triangle_packing(t).size && validate_triangle_packing(t, s.packing).ok;
    }
    return {match == total, fmt("%d/%d instances match", match, total)};
}

Outcome fully_sparse_cycles()
{
    Rng rng(1002);
    int match = 0;
    const int total = 120;
    for (int i = 0; i < total; ++i)
    {
        auto t = random_fully_sparse_tournament(2 * rng.between(2, 5), rng);
        const int cyc = oracle::exact_max_cycle_packing(t).size;
        const int tri = oracle::exact_max_triangle_packing(t).size;
        const int sp = sparse::max_triangle_packing_sparse(t).size;
        match += cyc == tri && tri == sp;
    }
    return {match == total, fmt("%d/%d instances have cycle = triangle = sparse optimum", match, total)};
}

// Triangles: one long arc (n-1,0) and one (n-2,1); every triangle uses one
// of them, so greedy stops at two and k = 3 reaches the matching step.
LinearTournament two_long_arcs(int n)
{
    return LinearTournament::from_backward_arcs(n, std::vector<Arc>{{n - 1, 0}, {n - 2, 1}});
}

double median_kernel_seconds(int n)
{
    auto t = two_long_arcs(n);
    std::vector<double> times;
    for (int rep = 0; rep < 7; ++rep)
    {
        const auto start = Clock::now();
        auto r = kernel::kernelize(t, 3);
        times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
        if (r.outcome != kernel::Outcome::kernel)
            throw std::logic_error("scaling instance ended early");
    }
    std::nth_element(times.begin(), times.begin() + 3, times.end());
    return times[3];
}

Outcome kernel_equivalence()
{
    Rng rng(1003);
    int good = 0, kernels = 0;
    const int total = 300;
    for (int i = 0; i < total; ++i)
    {
        const int k = rng.between(1, 3);
        auto t = random_tournament(rng.between(3, 12), rng.unit() * 0.25, rng);
        auto r = kernel::kernelize(t, k);
        const bool truth = oracle::exact_max_triangle_packing(t).size >= k;
        if (r.outcome == kernel::Outcome::early_yes)
        {
            good += truth;
            continue;
        }
        ++kernels;
        const bool on_kernel = oracle::exact_max_triangle_packing(r.tournament).size >= k;
        good += r.tournament.size() <= 6 * k && on_kernel == truth;
    }

    const double t50 = median_kernel_seconds(50);
    const double t100 = median_kernel_seconds(100);
    const double t200 = median_kernel_seconds(200);
    // Timer resolution floors the small case.
    const double f1 = t100 / std::max(t50, 1e-6);
    const double f2 = t200 / std::max(t100, 1e-6);
    const bool scales = f1 < 20 && f2 < 20;
    return {good == total && scales,
            fmt("%d/%d samples agree (%d reached the matching step); median kernelize %.2e/%.2e/%.2e s at n=50/100/200, "
                "doubling factors %.1f and %.1f",
                good, total, kernels, t50, t100, t200, f1, f2)};
}

Outcome fpt_agreement()
{
    Rng rng(1004);
    const int total = 240;
    int unsound = 0, missed = 0, yes = 0;
    for (int i = 0; i < total; ++i)
    {
        const int k = rng.between(1, 2);
        auto t = random_tournament(rng.between(3, 12), rng.unit() * 0.3, rng);
        auto d = fpt::decide(t, k, 0.001, rng.next(), Execution::parallel);
        const bool truth = oracle::exact_max_triangle_packing(t).size >= k;
        yes += truth;
        if (d.yes && (!truth || static_cast<int>(d.witness.size()) < k || !validate_triangle_packing(t, d.witness).ok))
            ++unsound;
        if (!d.yes && truth)
            ++missed;
    }
    const double rate = static_cast<double>(missed) / total;
    return {unsound == 0 && rate <= 0.01,
            fmt("%d samples (%d oracle-yes), %d unsound, %d missed yes (%.2f%%)", total, yes, unsound, missed, 100 * rate)};
}

Outcome steiner_blowup()
{
    std::ostringstream detail;
    bool ok = true;
    for (int n : {3, 7, 9, 13, 15})
    {
        auto s = steiner::steiner_triple_system(n);
        auto cov = steiner::pair_coverage(s);
        ok = ok && cov.size() == static_cast<std::size_t>(n * (n - 1) / 2) &&
             std::all_of(cov.begin(), cov.end(), [](int c) { return c == 1; });
        auto t = steiner::orient_clique(s);
        auto p = steiner::clique_triangles(s);
        ok = ok && validate_triangle_packing(t, p).ok && 3 * p.size() == t.arc_count() &&
             t.arc_count() == static_cast<std::size_t>(n * (n - 1) / 2);
    }
    auto host = steiner::blow_up(LinearTournament::from_backward_arcs(3, std::vector<Arc>{{2, 0}}), 6);
    std::vector<Vertex> a(6), b(6), c(6);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 6);
    std::iota(c.begin(), c.end(), 12);
    auto p = steiner::tripartite_perfect_packing(host, a, b, c);
    std::set<std::pair<Vertex, Vertex>> used;
    for (const auto& tri : p)
        for (const auto& arc : tri.arcs())
            if (arc.tail / 6 != arc.head / 6)
                used.insert({arc.tail, arc.head});
    ok = ok && p.size() == 36 && validate_triangle_packing(host, p).ok && used.size() == 108;
    detail << "STS coverage and clique packings for n=3,7,9,13,15; tripartite " << p.size() << " triangles over "
           << used.size() << " cross arcs";
    return {ok, detail.str()};
}

// Pairs (i<j) in lexicographic order; bit set means i -> j.
std::vector<std::pair<int, int>> pairs_of(int n)
{
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p.emplace_back(i, j);
    return p;
}

std::uint32_t canonical(std::uint32_t mask, int n, const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::vector<int>>& perms)
{
    std::vector<std::vector<char>> arc(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t e = 0; e < pairs.size(); ++e)
    {
        auto [i, j] = pairs[e];
        bool fwd = mask >> e & 1u;
        arc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = fwd;
        arc[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = !fwd;
    }
    std::uint32_t best = ~0u;
    for (const auto& p : perms)
    {
        std::uint32_t m = 0;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (arc[static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[e].first)])]
                   [static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[e].second)])])
                m |= 1u << e;
        best = std::min(best, m);
    }
    return best;
}

Outcome duality()
{
    const int expected[] = {0, 1, 1, 2, 4, 12, 56};
    int violations = 0, classes = 0;
    bool counts = true;
    std::ostringstream per;
    for (int n = 1; n <= 6; ++n)
    {
        auto pairs = pairs_of(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::uint32_t> reps;
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask)
            reps.insert(canonical(mask, n, pairs, perms));
        counts = counts && static_cast<int>(reps.size()) == expected[n];
        per << (n > 1 ? "," : "") << reps.size();
        classes += static_cast<int>(reps.size());

        for (auto mask : reps)
        {
            std::vector<Arc> back;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (!(mask >> e & 1u))
                    back.push_back({pairs[e].second, pairs[e].first});
            auto t = LinearTournament::from_backward_arcs(n, back);
            violations += oracle::exact_max_cycle_packing(t).size > oracle::exact_min_fas(t).size;
        }
    }
    return {counts && violations == 0,
            fmt("%d isomorphism classes (per n: %s), %d violations", classes, per.str().c_str(), violations)};
}

} // namespace

int main()
{
    criterion(1, "reduction structure", 1.0, reduction_structure);
    criterion(2, "certificates round-trip", 1.0, certificates);
    criterion(3, "sparse solver equals exact optimum", 60.0, sparse_vs_oracle);
    criterion(4, "fully sparse cycle and triangle optima coincide", 120.0, fully_sparse_cycles);
    criterion(5, "kernel size, equivalence and scaling", 60.0, kernel_equivalence);
    criterion(6, "color coding soundness and agreement", 300.0, fpt_agreement);
    criterion(7, "Steiner systems and blow-up packings", 5.0, steiner_blowup);
    criterion(8, "cycle packing bounded by feedback arc set", 0.0, duality);
    return failures == 0 ? 0 : 1;
}
