#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tourpack/fpt.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/random.hpp"

#include <set>

using namespace tourpack;
using namespace tourpack::fpt;

namespace {

LinearTournament make(int n, std::vector<Arc> b)
{
    return LinearTournament::from_backward_arcs(n, b);
}

ArcColoring uniform(const LinearTournament& t, int palette, int color)
{
    return {palette, std::vector<int>(t.arc_count(), color), 0};
}

void paint(const LinearTournament& t, ArcColoring& c, const Arc& a, int color)
{
    c.colors[t.pair_index(a.tail, a.head)] = color;
}

ColorMask mask_of(const LinearTournament& t, const ArcColoring& c, const Triangle& tri)
{
    ColorMask m = 0;
    for (const auto& a : tri.arcs())
        m |= ColorMask{1} << c.colors[t.pair_index(a.tail, a.head)];
    return m;
}

} // namespace

TEST_CASE("random colorings")
{
    Rng rng(79);
    auto t = random_tournament(9, 0.4, rng);
    auto c = random_coloring(t, 2, 5);
    CHECK(c.palette == 6);
    CHECK(c.colors.size() == t.arc_count());
    CHECK(std::all_of(c.colors.begin(), c.colors.end(), [](int x) { return x >= 0 && x < 6; }));
    CHECK(random_coloring(t, 2, 5).colors == c.colors);
    CHECK(random_coloring(t, 2, 6).colors != c.colors);
    CHECK_THROWS_AS(random_coloring(t, 0, 1), std::invalid_argument);
}

TEST_CASE("colorful index")
{
    auto t = make(3, {{2, 0}});
    auto mono = uniform(t, 3, 0);
    CHECK(colorful_triangle_index(t, mono).empty());

    auto rainbow = mono;
    paint(t, rainbow, {0, 1}, 0);
    paint(t, rainbow, {1, 2}, 1);
    paint(t, rainbow, {2, 0}, 2);
    auto idx = colorful_triangle_index(t, rainbow);
    REQUIRE(idx.size() == 1);
    CHECK(idx.begin()->first == 0b111u);
    CHECK(idx.begin()->second == TrianglePacking{Triangle(0, 1, 2)});

    auto bad = mono;
    bad.colors.pop_back();
    CHECK_THROWS_AS(colorful_triangle_index(t, bad), std::invalid_argument);
    auto outside = mono;
    outside.colors[0] = 3;
    CHECK_THROWS_AS(colorful_triangle_index(t, outside), std::invalid_argument);

    Rng rng(83);
    for (int rep = 0; rep < 40; ++rep)
    {
        auto r = random_tournament(rng.between(3, 10), 0.5, rng);
        auto col = random_coloring(r, 2, rng.next());
        auto index = colorful_triangle_index(r, col);
        std::size_t listed = 0;
        for (const auto& [m, tris] : index)
        {
            CHECK(std::popcount(m) == 3);
            listed += tris.size();
            for (const auto& tri : tris)
                CHECK(mask_of(r, col, tri) == m);
        }
        std::size_t colorful = 0;
        for (const auto& tri : enumerate_triangles(r))
            colorful += std::popcount(mask_of(r, col, tri)) == 3;
        CHECK(listed == colorful);
    }
}

TEST_CASE("colorful DP examples")
{
    auto t = make(6, {{3, 0}, {4, 1}, {5, 2}});
    auto opt = oracle::exact_max_triangle_packing(t);
    REQUIRE(opt.size == 3);

    // Give the optimal packing nine distinct colors.
    auto c = uniform(t, 9, 0);
    int next = 0;
    for (const auto& tri : opt.packing)
        for (const auto& a : tri.arcs())
            paint(t, c, a, next++);
    auto r = dp_colorful_packing(t, c, 3);
    CHECK(r.found);
    CHECK(r.witness.size() == 3);
    CHECK(validate_triangle_packing(t, r.witness).ok);
    CHECK(r.reachable[0]);
    CHECK(r.reachable[(1u << 9) - 1]);

    auto m = uniform(t, 3, 0);
    CHECK_FALSE(dp_colorful_packing(t, m, 1).found);

    auto four = uniform(t, 12, 0);
    for (std::size_t i = 0; i < four.colors.size(); ++i)
        four.colors[i] = static_cast<int>(i % 12);
    CHECK_FALSE(dp_colorful_packing(t, four, 4).found);

    CHECK_THROWS_AS(dp_colorful_packing(t, c, 2), std::invalid_argument);
    CHECK_THROWS_AS(dp_colorful_packing(t, uniform(t, 27, 0), 9), std::invalid_argument);
}

TEST_CASE("planted colorings are always found")
{
    Rng rng(89);
    for (int rep = 0; rep < 80; ++rep)
    {
        auto t = random_tournament(rng.between(4, 10), 0.5, rng);
        auto opt = oracle::exact_max_triangle_packing(t);
        if (opt.size == 0)
            continue;
        const int k = std::min(opt.size, 3);
        auto c = random_coloring(t, k, rng.next());
        int next = 0;
        for (int i = 0; i < k; ++i)
            for (const auto& a : opt.packing[static_cast<std::size_t>(i)].arcs())
                paint(t, c, a, next++);
        auto r = dp_colorful_packing(t, c, k);
        REQUIRE(r.found);
        CHECK(static_cast<int>(r.witness.size()) == k);
        CHECK(validate_triangle_packing(t, r.witness).ok);
    }
}

TEST_CASE("DP table matches direct enumeration")
{
    Rng rng(97);
    for (int rep = 0; rep < 40; ++rep)
    {
        auto t = random_tournament(rng.between(3, 8), 0.5, rng);
        auto c = random_coloring(t, 2, rng.next());
        auto r = dp_colorful_packing(t, c, 2);

        // Unions of at most two colorful triangles with disjoint color sets.
        std::vector<ColorMask> masks;
        for (const auto& tri : enumerate_triangles(t))
            if (auto m = mask_of(t, c, tri); std::popcount(m) == 3)
                masks.push_back(m);
        std::set<ColorMask> expect{0};
        for (std::size_t i = 0; i < masks.size(); ++i)
        {
            expect.insert(masks[i]);
            for (std::size_t j = i + 1; j < masks.size(); ++j)
                if ((masks[i] & masks[j]) == 0)
                    expect.insert(masks[i] | masks[j]);
        }
        REQUIRE(r.reachable.size() == 64);
        for (ColorMask m = 0; m < 64; ++m)
            CHECK(static_cast<bool>(r.reachable[m]) == (expect.count(m) == 1));
        CHECK(r.found == (expect.count(63) == 1));
    }
}

TEST_CASE("trial count")
{
    CHECK(trial_count(1, 0.01) == 93);
    CHECK(trial_count(2, 0.001) == 2787);
    CHECK(trial_count(1, 0.5) == 14);
    CHECK_THROWS_AS(trial_count(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(trial_count(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(trial_count(0, 0.1), std::invalid_argument);
}

TEST_CASE("decide examples")
{
    auto t = make(3, {{2, 0}});
    auto yes = decide(t, 1, 0.01, 1);
    CHECK(yes.yes);
    CHECK(yes.witness.size() == 1);
    CHECK(yes.trials_run >= 1);

    auto no = decide(t, 2, 0.01, 1);
    CHECK_FALSE(no.yes);
    CHECK(no.trials_run == 0);

    auto s = make(6, {{3, 0}, {4, 1}, {5, 2}});
    auto d = decide(s, 3, 0.01, 7);
    CHECK(d.yes);
    CHECK(validate_triangle_packing(s, d.witness).ok);

    // Two triangles sharing 1->2: enough triangles to run every trial.
    auto shared = make(4, {{2, 0}, {3, 1}});
    REQUIRE(enumerate_triangles(shared).size() == 2);
    auto n2 = decide(shared, 2, 0.5, 3);
    CHECK_FALSE(n2.yes);
    CHECK(n2.trials_run == n2.trials_planned);

    CHECK_THROWS_AS(decide(t, 9, 0.5, 1), std::invalid_argument);
}

TEST_CASE("decisions are sound and serial equals parallel")
{
    Rng rng(101);
    for (int rep = 0; rep < 60; ++rep)
    {
        auto t = random_tournament(rng.between(3, 10), rng.unit() * 0.4, rng);
        const int k = rng.between(1, 2);
        const auto seed = rng.next();
        auto a = decide(t, k, 0.01, seed, Execution::serial);
        auto b = decide(t, k, 0.01, seed, Execution::parallel);
        CHECK(a.yes == b.yes);
        CHECK(a.witness == b.witness);
        CHECK(a.trials_run == b.trials_run);
        const int opt = oracle::exact_max_triangle_packing(t).size;
        if (a.yes)
        {
            CHECK(opt >= k);
            CHECK(validate_triangle_packing(t, a.witness).ok);
        }
        if (opt < k)
            CHECK_FALSE(a.yes);
    }
}
