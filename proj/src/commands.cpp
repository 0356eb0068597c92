#include "tourpack/commands.hpp"
#include "tourpack/fpt.hpp"
#include "tourpack/kernel.hpp"
#include "tourpack/random.hpp"
#include "tourpack/sparse.hpp"
#include "tourpack/steiner.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

namespace tourpack::cli {

nlohmann::json SolveReport::to_json() const
{
    nlohmann::json j;
    j["n"] = n;
    j["backward"] = backward;
    j["sparse"] = sparse;
    j["fully_sparse"] = fully_sparse;
    j["method"] = method;
    j["optimum"] = optimum ? nlohmann::json(*optimum) : nlohmann::json(nullptr);
    j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
    j["decision"] = decision ? nlohmann::json(*decision) : nlohmann::json(nullptr);
    if (delta > 0)
        j["delta"] = delta;
    if (kernel_vertices)
        j["kernel_vertices"] = *kernel_vertices;
    j["wall_seconds"] = wall_seconds;
    j["cycles"] = cycles;
    nlohmann::json members = nlohmann::json::array();
    for (const auto& c : witness)
        members.push_back(c.vertices());
    j["witness"] = members;
    j["witness_path"] = witness_path.empty() ? nlohmann::json(nullptr) : nlohmann::json(witness_path);
    return j;
}

namespace {

CyclePacking lift(const TrianglePacking& p, const std::vector<Vertex>& original)
{
    CyclePacking out;
    for (const auto& tri : p)
        out.emplace_back(Triangle(original[static_cast<std::size_t>(tri[0])], original[static_cast<std::size_t>(tri[1])],
                                  original[static_cast<std::size_t>(tri[2])]));
    return out;
}

void set_optimum(SolveReport& r, int size, CyclePacking packing, const std::optional<int>& k)
{
    r.optimum = size;
    r.witness = std::move(packing);
    if (k)
        r.decision = size >= *k;
}

void run_sparse(const LinearTournament& t, const SolveOptions& o, SolveReport& r)
{
    if (!r.sparse)
        throw TournamentError("--sparse needs a sparse representation: two backward arcs share an endpoint");
    r.method = "sparse-poly";
    auto opt = sparse::max_cycle_packing_sparse(t, o.exec);
    set_optimum(r, opt.size, std::move(opt.packing), o.k);
}

void run_exact(const LinearTournament& t, const SolveOptions& o, SolveReport& r)
{
    r.method = "exact";
    try
    {
        if (o.cycles)
        {
            auto opt = oracle::exact_max_cycle_packing(t, o.budget);
            set_optimum(r, opt.size, std::move(opt.packing), o.k);
        }
        else
        {
            auto opt = oracle::exact_max_triangle_packing(t, o.budget);
            set_optimum(r, opt.size, as_cycles(opt.packing), o.k);
        }
    }
    catch (const oracle::BudgetExceeded& e)
    {
        throw BudgetRefusal(std::string("exact search over budget: ") + e.what());
    }
}

void run_fpt(const LinearTournament& t, const std::vector<Vertex>& original, const SolveOptions& o, SolveReport& r)
{
    auto d = fpt::decide(t, *o.k, o.delta, o.seed, o.exec);
    r.decision = d.yes;
    if (d.yes)
        r.witness = lift(d.witness, original);
    else
        r.delta = o.delta;
}

std::vector<Vertex> identity(int n)
{
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    return v;
}

void run_kernel(const LinearTournament& t, const SolveOptions& o, SolveReport& r)
{
    auto kr = kernel::kernelize(t, *o.k);
    if (kr.outcome == kernel::Outcome::early_yes)
    {
        r.method = "kernel";
        r.decision = true;
        TrianglePacking first(kr.greedy.begin(), kr.greedy.begin() + *o.k);
        r.witness = as_cycles(first);
        return;
    }
    r.kernel_vertices = kr.tournament.size();
    if (kr.tournament.size() <= o.budget.max_vertices)
    {
        r.method = "kernel+exact";
        try
        {
            auto opt = oracle::exact_max_triangle_packing(kr.tournament, o.budget);
            r.decision = opt.size >= *o.k;
            if (*r.decision)
                r.witness = lift(opt.packing, kr.original);
            return;
        }
        catch (const oracle::BudgetExceeded&)
        {
            // fall through to color coding
        }
    }
    r.method = "kernel+fpt";
    run_fpt(kr.tournament, kr.original, o, r);
}

} // namespace

SolveReport dispatch_solve(const LinearTournament& t, const SolveOptions& o)
{
    o.budget.validate();
    if (o.k && *o.k < 1)
        throw std::invalid_argument("k must be at least 1");
    const auto start = std::chrono::steady_clock::now();

    SolveReport r;
    r.n = t.size();
    r.backward = static_cast<int>(t.backward().size());
    r.sparse = is_sparse(t);
    r.fully_sparse = is_fully_sparse(t);
    r.k = o.k;
    r.cycles = o.cycles;

    switch (o.method)
    {
    case Method::sparse:
        run_sparse(t, o, r);
        break;
    case Method::exact:
        run_exact(t, o, r);
        break;
    case Method::fpt:
        if (!o.k)
            throw std::invalid_argument("--fpt needs -k");
        if (o.cycles)
            throw std::invalid_argument("--fpt decides triangle packings only; drop --cycles");
        r.method = "fpt";
        run_fpt(t, identity(t.size()), o, r);
        break;
    case Method::automatic:
        if (r.sparse)
            run_sparse(t, o, r);
        else if (o.k && !o.cycles)
            run_kernel(t, o, r);
        else if (t.size() <= o.budget.max_vertices)
            run_exact(t, o, r);
        else
            throw BudgetRefusal("no exact method fits n = " + std::to_string(t.size()) + " (exact search allows " +
                                std::to_string(o.budget.max_vertices) +
                                " vertices); pass -k to decide a fixed packing size through the kernel, or raise "
                                "--max-vertices");
        break;
    }

    // Every witness is checked before it leaves the dispatcher.
    if (auto v = validate_cycle_packing(t, r.witness); !v)
        throw std::logic_error("solver returned an invalid witness: " + v.message);

    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void write_witness(std::ostream& out, const SolveReport& report)
{
    if (report.cycles)
    {
        write_packing(out, std::span<const Cycle>(report.witness));
        return;
    }
    TrianglePacking tris;
    for (const auto& c : report.witness)
    {
        const auto& v = c.vertices();
        tris.emplace_back(v[0], v[1], v[2]);
    }
    write_packing(out, std::span<const Triangle>(tris));
}

VerifyReport verify(const LinearTournament& t, const PackingFile& packing, std::optional<int> claimed)
{
    VerifyReport r;
    r.size = static_cast<int>(packing.members.size());
    if (auto v = validate_cycle_packing(t, packing.members); !v)
    {
        r.message = v.message;
        return r;
    }
    if (claimed && r.size < *claimed)
    {
        r.message = "packing has " + std::to_string(r.size) + " members, fewer than the claimed " +
                    std::to_string(*claimed);
        return r;
    }
    r.ok = true;
    r.message = "valid packing of size " + std::to_string(r.size);
    return r;
}

LinearTournament generate(const std::string& kind, int n, std::uint64_t seed, double p)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    Rng rng(seed);
    if (kind == "random")
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("reversal probability must lie in [0, 1]");
        return random_tournament(n, p, rng);
    }
    if (kind == "random-sparse")
        return random_sparse_tournament(n, rng);
    if (kind == "random-fully-sparse")
        return random_fully_sparse_tournament(n, rng);
    if (kind == "clique-sts")
        return steiner::orient_clique(steiner::steiner_triple_system(n));
    throw std::invalid_argument("unknown generator kind '" + kind +
                                "' (expected random, random-sparse, random-fully-sparse, clique-sts)");
}

nlohmann::json stats(const LinearTournament& t)
{
    nlohmann::json j;
    j["n"] = t.size();
    j["arcs"] = t.arc_count();
    j["backward"] = t.backward().size();
    j["sparse"] = is_sparse(t);
    j["fully_sparse"] = is_fully_sparse(t);
    j["triangles"] = enumerate_triangles(t).size();
    auto deg = backward_degrees(t);
    j["max_backward_degree"] = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    return j;
}

} // namespace tourpack::cli
