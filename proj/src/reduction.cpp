#include "tourpack/reduction.hpp"
#include "tourpack/steiner.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tourpack::reduction {

long long packing_threshold(int n_vars, int n_clauses, long long alpha)
{
    const long long n = n_vars, m = n_clauses;
    return 6 * n * (n - 1) + 3 * m * (m + 1) / 2 + 2 * n + alpha + 1;
}

ReductionOutput build_reduction(const Cnf3Instance& f)
{
    f.validate();
    if (!is_normalized(f))
        throw CnfError("build_reduction needs a normalized formula (n and m+1 in {1,3} mod 6); call normalize first");

    const int n = f.n_vars;
    const int m = f.n_clauses();
    const int clause_offset = 6 * n;

    ReductionOutput r;
    r.formula = f;
    for (int i = 0; i < n; ++i)
    {
        const int b = 6 * i;
        r.variables.push_back({b, b + 1, b + 2, b + 3, b + 4, b + 5});
    }
    for (int j = 0; j <= m; ++j)
    {
        const int b = clause_offset + 3 * j;
        r.clauses.push_back({b, b + 1, b + 2});
    }

    std::vector<Arc> backward = steiner::blow_up(steiner::orient_clique(steiner::steiner_triple_system(n)), 6).backward();
    for (const auto& g : r.variables)
    {
        backward.push_back({g.s, g.r});
        backward.push_back({g.t, g.x1});
    }
    const auto clause_part = steiner::blow_up(steiner::orient_clique(steiner::steiner_triple_system(m + 1)), 3);
    for (const auto& a : clause_part.backward())
        backward.push_back({a.tail + clause_offset, a.head + clause_offset});
    backward.push_back({r.dummy().c3, r.dummy().c1});

    // First positive occurrence of a variable hits x¹, the second x².
    std::vector<int> positive_seen(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < m; ++j)
    {
        const auto& clause = f.clauses[static_cast<std::size_t>(j)];
        const Vertex tail = clause.size() == 3 ? r.clauses[static_cast<std::size_t>(j)].c3 : r.clauses[static_cast<std::size_t>(j)].c2;
        for (const auto& lit : clause)
        {
            const auto& g = r.variables[static_cast<std::size_t>(lit.var)];
            Vertex head = g.xbar;
            if (lit.positive)
                head = positive_seen[static_cast<std::size_t>(lit.var)]++ == 0 ? g.x1 : g.x2;
            r.vc_arcs.push_back({{tail, head}, j, lit});
        }
    }
    for (Vertex c : r.dummy().vertices())
        for (int i = 0; i < n; ++i)
            r.vc_arcs.push_back({{c, r.variables[static_cast<std::size_t>(i)].xbar}, -1, {i, false}});

    for (const auto& vc : r.vc_arcs)
        backward.push_back(vc.arc);

    r.tournament = LinearTournament::from_backward_arcs(clause_offset + 3 * (m + 1), backward);
    r.alpha = static_cast<long long>(r.vc_arcs.size());
    r.threshold = packing_threshold(n, m, r.alpha);
    return r;
}

GadgetPackings variable_gadget_packings(const VariableGadget& g)
{
    const Triangle t1(g.r, g.xbar, g.s), t2(g.r, g.x1, g.s), t3(g.x1, g.s, g.t), t4(g.x1, g.x2, g.t);
    return {{t1, t3}, {t1, t4}, {t2, t4}};
}

namespace {

class PackingBuilder
{
public:
    explicit PackingBuilder(const LinearTournament& t) : t_(t), used_(t.arc_count(), 0) {}

    void add(const Triangle& tri)
    {
        for (const auto& a : tri.arcs())
        {
            if (!t_.has_arc(a.tail, a.head))
                throw std::logic_error("certificate triangle " + to_string(tri) + " uses a missing arc");
            auto& u = used_[t_.pair_index(a.tail, a.head)];
            if (u)
                throw std::logic_error("certificate triangle " + to_string(tri) + " reuses arc " + to_string(a));
            u = 1;
        }
        packing_.push_back(tri);
    }

    void add(const TrianglePacking& p)
    {
        for (const auto& tri : p)
            add(tri);
    }

    bool free(Vertex u, Vertex v) const { return t_.has_arc(u, v) && !used_[t_.pair_index(u, v)]; }

    TrianglePacking take() { return std::move(packing_); }

private:
    const LinearTournament& t_;
    std::vector<std::uint8_t> used_;
    TrianglePacking packing_;
};

void add_tripartite_packings(PackingBuilder& builder, const LinearTournament& t, int points,
                             const std::vector<std::vector<Vertex>>& blocks)
{
    for (const auto& triple : steiner::steiner_triple_system(points).triples)
        builder.add(steiner::tripartite_perfect_packing(t, blocks[static_cast<std::size_t>(triple[0])],
                                                        blocks[static_cast<std::size_t>(triple[1])],
                                                        blocks[static_cast<std::size_t>(triple[2])]));
}

} // namespace

TrianglePacking certificate_packing(const ReductionOutput& r, std::vector<bool> assignment)
{
    const auto& f = r.formula;
    const auto& t = r.tournament;
    if (assignment.size() > static_cast<std::size_t>(f.n_vars))
        throw CnfError("assignment has more values than the formula has variables");
    assignment.resize(static_cast<std::size_t>(f.n_vars), true);
    if (!f.satisfied_by(assignment))
        throw CnfError("assignment does not satisfy the formula");

    PackingBuilder builder(t);

    std::vector<std::vector<Vertex>> var_blocks, clause_blocks;
    for (const auto& g : r.variables)
        var_blocks.push_back(g.vertices());
    for (const auto& c : r.clauses)
        clause_blocks.push_back(c.vertices());
    add_tripartite_packings(builder, t, f.n_vars, var_blocks);
    add_tripartite_packings(builder, t, f.n_clauses() + 1, clause_blocks);

    const auto& d = r.dummy();
    builder.add(Triangle(d.c1, d.c2, d.c3));

    for (std::size_t i = 0; i < r.variables.size(); ++i)
    {
        auto p = variable_gadget_packings(r.variables[i]);
        builder.add(assignment[i] ? p.top : p.bottom);
    }

    for (const auto& g : r.variables)
    {
        builder.add(Triangle(g.xbar, g.t, d.c1));
        builder.add(Triangle(g.xbar, g.x1, d.c2));
        builder.add(Triangle(g.xbar, g.x2, d.c3));
    }

    for (int j = 0; j < f.n_clauses(); ++j)
    {
        std::vector<const VcArc*> arcs;
        for (const auto& vc : r.vc_arcs)
            if (vc.clause == j)
                arcs.push_back(&vc);
        const auto& gadget = r.clauses[static_cast<std::size_t>(j)];
        const Vertex tail = arcs.front()->arc.tail;

        auto sat = std::find_if(arcs.begin(), arcs.end(), [&](const VcArc* vc) {
            return assignment[static_cast<std::size_t>(vc->literal.var)] == vc->literal.positive;
        });
        const Vertex z = (*sat)->arc.head;
        const auto& g = r.variables[static_cast<std::size_t>((*sat)->literal.var)];

        // The satisfying literal's vertex still has a free out-arc inside its
        // gadget; take the earliest one in the ordering.
        Vertex partner = -1;
        for (Vertex w : g.vertices())
            if (w != z && builder.free(z, w) && builder.free(w, tail))
            {
                partner = w;
                break;
            }
        if (partner < 0)
            throw std::logic_error("no free gadget out-arc for clause " + std::to_string(j + 1));
        builder.add(Triangle(z, partner, tail));

        const Vertex spare[2] = {gadget.c1, gadget.c2};
        int next = 0;
        for (auto it = arcs.begin(); it != arcs.end(); ++it)
            if (it != sat)
                builder.add(Triangle((*it)->arc.head, spare[next++], tail));
    }

    auto packing = builder.take();
    if (static_cast<long long>(packing.size()) != r.threshold)
        throw std::logic_error("certificate has " + std::to_string(packing.size()) + " triangles, expected " +
                               std::to_string(r.threshold));
    return packing;
}

std::vector<bool> decode_assignment(const ReductionOutput& r, std::span<const Triangle> packing)
{
    if (auto v = validate_triangle_packing(r.tournament, packing); !v)
        throw CnfError("not a valid packing: " + v.message);
    if (static_cast<long long>(packing.size()) != r.threshold)
        throw CnfError("packing has " + std::to_string(packing.size()) + " triangles; decoding needs exactly " +
                       std::to_string(r.threshold));

    std::vector<bool> assignment;
    for (std::size_t i = 0; i < r.variables.size(); ++i)
    {
        const auto& g = r.variables[i];
        const Vertex lo = g.r, hi = g.t;
        TrianglePacking inside;
        for (const auto& tri : packing)
            if (std::all_of(tri.vertices().begin(), tri.vertices().end(), [&](Vertex v) { return v >= lo && v <= hi; }))
                inside.push_back(tri);
        std::sort(inside.begin(), inside.end());

        auto p = variable_gadget_packings(g);
        for (auto* q : {&p.top, &p.top_prime, &p.bottom})
            std::sort(q->begin(), q->end());
        if (inside == p.bottom)
            assignment.push_back(false);
        else if (inside == p.top || inside == p.top_prime)
            assignment.push_back(true);
        else
            throw CnfError("variable gadget " + std::to_string(i + 1) + " carries " + std::to_string(inside.size()) +
                           " triangles that form none of its three maximal packings");
    }
    if (!r.formula.satisfied_by(assignment))
        throw CnfError("decoded assignment does not satisfy the formula");
    assignment.resize(static_cast<std::size_t>(r.formula.original_vars));
    return assignment;
}

void write_metadata(std::ostream& out, const ReductionOutput& r)
{
    out << "threshold=" << r.threshold << '\n';
    out << "alpha=" << r.alpha << '\n';
    out << "vertices=" << r.tournament.size() << '\n';
    out << "original_vars=" << r.formula.original_vars << '\n';
    for (std::size_t i = 0; i < r.variables.size(); ++i)
    {
        const auto& g = r.variables[i];
        out << "var " << i + 1 << " r=" << g.r << " xbar=" << g.xbar << " x1=" << g.x1 << " s=" << g.s
            << " x2=" << g.x2 << " t=" << g.t << '\n';
    }
    for (std::size_t j = 0; j < r.clauses.size(); ++j)
    {
        const auto& c = r.clauses[j];
        out << "clause " << (j + 1 == r.clauses.size() ? std::string("dummy") : std::to_string(j + 1)) << " c1=" << c.c1
            << " c2=" << c.c2 << " c3=" << c.c3 << '\n';
    }
    for (const auto& vc : r.vc_arcs)
        out << "vc " << vc.arc.tail << ' ' << vc.arc.head << " clause="
            << (vc.clause < 0 ? std::string("dummy") : std::to_string(vc.clause + 1)) << " literal="
            << (vc.literal.positive ? "" : "-") << vc.literal.var + 1 << '\n';
}

} // namespace tourpack::reduction
