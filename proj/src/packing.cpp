#include "tourpack/packing.hpp"

#include <algorithm>

namespace tourpack {

Triangle::Triangle(Vertex a, Vertex b, Vertex c)
{
    if (a == b || b == c || a == c)
        throw TournamentError("triangle vertices must be distinct");
    if (b < a && b < c)
        v_ = {b, c, a};
    else if (c < a && c < b)
        v_ = {c, a, b};
    else
        v_ = {a, b, c};
}

Cycle::Cycle(std::vector<Vertex> vertices) : v_(std::move(vertices))
{
    if (v_.size() < 3)
        throw TournamentError("a cycle needs at least 3 vertices");
    auto sorted = v_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw TournamentError("cycle vertices must be distinct");
    std::rotate(v_.begin(), std::min_element(v_.begin(), v_.end()), v_.end());
}

Cycle::Cycle(const Triangle& t) : v_(t.vertices().begin(), t.vertices().end()) {}

std::vector<Arc> Cycle::arcs() const
{
    std::vector<Arc> out;
    out.reserve(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i)
        out.push_back({v_[i], v_[(i + 1) % v_.size()]});
    return out;
}

std::vector<Triangle> enumerate_triangles(const LinearTournament& t)
{
    std::vector<Triangle> out;
    const int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
        {
            const bool ab = t.has_arc_unchecked(a, b);
            for (int c = b + 1; c < n; ++c)
            {
                const bool bc = t.has_arc_unchecked(b, c);
                const bool ca = t.has_arc_unchecked(c, a);
                if (ab && bc && ca)
                    out.emplace_back(a, b, c);
                else if (!ab && !bc && !ca)
                    out.emplace_back(a, c, b);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_triangle_of(const LinearTournament& t, const Triangle& tri)
{
    for (const auto& a : tri.arcs())
    {
        if (a.tail < 0 || a.tail >= t.size() || a.head < 0 || a.head >= t.size())
            return false;
        if (!t.has_arc_unchecked(a.tail, a.head))
            return false;
    }
    return true;
}

namespace {

// Records which member first used each arc; reports the first clash.
class ArcLedger
{
public:
    explicit ArcLedger(const LinearTournament& t) : t_(t), owner_(t.arc_count(), -1) {}

    Validation claim(const std::vector<Arc>& arcs, int member)
    {
        for (const auto& a : arcs)
        {
            if (a.tail < 0 || a.tail >= t_.size() || a.head < 0 || a.head >= t_.size() || a.tail == a.head)
                return Validation::fail("member " + std::to_string(member) + " uses out-of-range arc " + to_string(a));
            if (!t_.has_arc_unchecked(a.tail, a.head))
                return Validation::fail("member " + std::to_string(member) + " uses missing arc " + to_string(a));
            auto& o = owner_[t_.pair_index(a.tail, a.head)];
            if (o >= 0)
                return Validation::fail("arc " + to_string(a) + " shared by members " + std::to_string(o) + " and " +
                                        std::to_string(member));
            o = member;
        }
        return {};
    }

private:
    const LinearTournament& t_;
    std::vector<int> owner_;
};

} // namespace

Validation validate_triangle_packing(const LinearTournament& t, std::span<const Triangle> packing)
{
    ArcLedger ledger(t);
    for (std::size_t i = 0; i < packing.size(); ++i)
    {
        auto arcs = packing[i].arcs();
        if (auto v = ledger.claim({arcs.begin(), arcs.end()}, static_cast<int>(i)); !v)
            return v;
    }
    return {};
}

Validation validate_cycle_packing(const LinearTournament& t, std::span<const Cycle> packing)
{
    ArcLedger ledger(t);
    for (std::size_t i = 0; i < packing.size(); ++i)
    {
        if (packing[i].length() < 3)
            return Validation::fail("member " + std::to_string(i) + " is shorter than 3");
        if (auto v = ledger.claim(packing[i].arcs(), static_cast<int>(i)); !v)
            return v;
    }
    return {};
}

CyclePacking as_cycles(std::span<const Triangle> packing)
{
    CyclePacking out;
    out.reserve(packing.size());
    for (const auto& t : packing)
        out.emplace_back(t);
    return out;
}

int local_out_degree(const LinearTournament& t, std::span<const Vertex> subset,
                     std::span<const Triangle> packing, Vertex x)
{
    if (std::find(subset.begin(), subset.end(), x) == subset.end())
        throw TournamentError("local_out_degree: vertex " + std::to_string(x) + " is not in the subset");

    std::vector<std::uint8_t> used(t.arc_count(), 0);
    for (const auto& tri : packing)
        for (const auto& a : tri.arcs())
            if (a.tail == x)
                used[t.pair_index(a.tail, a.head)] = 1;

    std::vector<Vertex> members(subset.begin(), subset.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    int degree = 0;
    for (Vertex y : members)
        if (y != x && t.has_arc(x, y) && !used[t.pair_index(x, y)])
            ++degree;
    return degree;
}

std::string to_string(const Arc& a)
{
    return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

std::string to_string(const Triangle& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string to_string(const Cycle& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.vertices().size(); ++i)
    {
        if (i)
            s += ',';
        s += std::to_string(c.vertices()[i]);
    }
    return s + ")";
}

} // namespace tourpack
