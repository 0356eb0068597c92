// tourpack: triangle and cycle packing in tournaments.
//
// Exit codes: 0 success, 1 failure or invalid input, 2 usage error,
// 3 no method within budget.

#include "tourpack/cnf.hpp"
#include "tourpack/commands.hpp"
#include "tourpack/kernel.hpp"
#include "tourpack/reduction.hpp"
#include "tourpack/steiner.hpp"
#include "tourpack/text_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace tourpack;

namespace {

enum Exit
{
    ok = 0,
    failure = 1,
    usage = 2,
    refused = 3,
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

LinearTournament read_tournament(const std::string& path)
{
    if (path == "-")
        return parse_tournament(std::cin);
    auto in = open_input(path);
    return parse_tournament(in);
}

// Runs `body` with a stream that is either stdout or the named file.
template <typename F>
void with_output(const std::string& path, F body)
{
    if (path.empty() || path == "-")
    {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    body(out);
}

reduction::Cnf3Instance read_formula(const std::string& path)
{
    auto in = open_input(path);
    return reduction::normalize(reduction::parse_dimacs(in));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arc-disjoint triangle and cycle packing in tournaments"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a tournament or a Steiner triple system");
    std::string gen_kind = "random";
    int gen_n = 0;
    std::uint64_t gen_seed = 1;
    double gen_p = 0.5;
    std::optional<int> gen_sts, gen_clique;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "random, random-sparse, random-fully-sparse or clique-sts");
    gen->add_option("-n", gen_n, "Vertex count");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("-p", gen_p, "Reversal probability for --kind random")->check(CLI::Range(0.0, 1.0));
    auto* sts_opt = gen->add_option("--sts", gen_sts, "Print STS(n), one triple per line");
    gen->add_option("--clique", gen_clique, "Print the tournament oriented from STS(n)")->excludes(sts_opt);
    gen->add_option("-o,--output", gen_out, "Output file");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Build the tournament of a 3-SAT(3) formula");
    std::string reduce_cnf, reduce_out, reduce_meta;
    reduce->add_option("cnf", reduce_cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
    reduce->add_option("-o,--output", reduce_out, "Tournament file (metadata goes to <file>.meta)");
    reduce->add_option("--meta", reduce_meta, "Metadata file");

    // certify
    auto* certify = app.add_subcommand("certify", "Packing of threshold size from a satisfying assignment");
    std::string certify_cnf, certify_assignment, certify_out;
    certify->add_option("cnf", certify_cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
    certify->add_option("assignment", certify_assignment, "Lines v<i>=0|1")->required()->check(CLI::ExistingFile);
    certify->add_option("-o,--output", certify_out, "Packing file");

    // solve
    auto* solve = app.add_subcommand("solve", "Maximum packing, or decide whether k triangles fit");
    std::string solve_in, solve_out;
    bool use_sparse = false, use_exact = false, use_fpt = false, solve_json = false, serial = false;
    cli::SolveOptions options;
    solve->add_option("tournament", solve_in, "Tournament file, - for stdin")->required();
    auto* f_sparse = solve->add_flag("--sparse", use_sparse, "Polynomial solver for sparse tournaments");
    auto* f_exact = solve->add_flag("--exact", use_exact, "Exhaustive search");
    auto* f_fpt = solve->add_flag("--fpt", use_fpt, "Color coding, needs -k");
    f_sparse->excludes(f_exact)->excludes(f_fpt);
    f_exact->excludes(f_fpt);
    solve->add_option("-k", options.k, "Decide whether k arc-disjoint triangles exist")->check(CLI::PositiveNumber);
    solve->add_flag("--cycles", options.cycles, "Pack cycles of any length");
    solve->add_flag("--json", solve_json, "Print the report as JSON");
    solve->add_option("--delta", options.delta, "Error bound of a color-coding no")->check(CLI::Range(1e-12, 0.999999));
    solve->add_option("--seed", options.seed, "Seed for color coding");
    solve->add_option("--max-vertices", options.budget.max_vertices, "Largest instance for exhaustive search")
        ->check(CLI::PositiveNumber);
    solve->add_option("--time-limit", options.budget.time_limit_seconds, "Seconds allowed for exhaustive search")
        ->check(CLI::PositiveNumber);
    solve->add_flag("--serial", serial, "Disable OpenMP");
    solve->add_option("-o,--witness", solve_out, "Write the witness packing here instead of stdout");

    // kernelize
    auto* kern = app.add_subcommand("kernelize", "Reduce to an equivalent instance on at most 6k vertices");
    std::string kern_in, kern_out;
    int kern_k = 0;
    kern->add_option("tournament", kern_in, "Tournament file, - for stdin")->required();
    kern->add_option("-k", kern_k, "Packing size")->required()->check(CLI::PositiveNumber);
    kern->add_option("-o,--output", kern_out, "Output file");

    // verify
    auto* ver = app.add_subcommand("verify", "Check a packing against a tournament");
    std::string ver_tour, ver_pack;
    std::optional<int> ver_size;
    ver->add_option("tournament", ver_tour, "Tournament file")->required()->check(CLI::ExistingFile);
    ver->add_option("packing", ver_pack, "Packing file")->required()->check(CLI::ExistingFile);
    ver->add_option("--size", ver_size, "Claimed packing size");

    // stats
    auto* st = app.add_subcommand("stats", "Summary of a tournament as JSON");
    std::string st_in;
    st->add_option("tournament", st_in, "Tournament file, - for stdin")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try
    {
        if (*gen)
        {
            with_output(gen_out, [&](std::ostream& out) {
                if (gen_sts)
                {
                    for (const auto& tr : steiner::steiner_triple_system(*gen_sts).triples)
                        out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
                }
                else if (gen_clique)
                    write_tournament(out, steiner::orient_clique(steiner::steiner_triple_system(*gen_clique)));
                else
                    write_tournament(out, cli::generate(gen_kind, gen_n, gen_seed, gen_p));
            });
            return ok;
        }

        if (*reduce)
        {
            auto r = reduction::build_reduction(read_formula(reduce_cnf));
            with_output(reduce_out, [&](std::ostream& out) { write_tournament(out, r.tournament); });
            std::string meta = reduce_meta;
            if (meta.empty() && !reduce_out.empty() && reduce_out != "-")
                meta = reduce_out + ".meta";
            if (!meta.empty())
                with_output(meta, [&](std::ostream& out) { reduction::write_metadata(out, r); });
            std::cerr << "threshold=" << r.threshold << " vertices=" << r.tournament.size() << '\n';
            return ok;
        }

        if (*certify)
        {
            auto r = reduction::build_reduction(read_formula(certify_cnf));
            auto in = open_input(certify_assignment);
            auto assignment = reduction::parse_assignment(in, r.formula.original_vars);
            auto packing = reduction::certificate_packing(r, assignment);
            with_output(certify_out, [&](std::ostream& out) { write_packing(out, std::span<const Triangle>(packing)); });
            return ok;
        }

        if (*solve)
        {
            if (use_sparse)
                options.method = cli::Method::sparse;
            else if (use_exact)
                options.method = cli::Method::exact;
            else if (use_fpt)
                options.method = cli::Method::fpt;
            options.exec = serial ? Execution::serial : Execution::parallel;

            auto t = read_tournament(solve_in);
            auto report = cli::dispatch_solve(t, options);
            if (!solve_out.empty())
            {
                report.witness_path = solve_out;
                with_output(solve_out, [&](std::ostream& out) { cli::write_witness(out, report); });
            }
            if (solve_json)
            {
                std::cout << report.to_json().dump(2) << '\n';
                return ok;
            }
            if (report.optimum)
                std::cout << "optimum " << *report.optimum << '\n';
            if (report.decision)
            {
                std::cout << (*report.decision ? "yes" : "no");
                if (!*report.decision && report.delta > 0)
                    std::cout << " (confidence 1-" << report.delta << ")";
                std::cout << '\n';
            }
            if (solve_out.empty())
                cli::write_witness(std::cout, report);
            return ok;
        }

        if (*kern)
        {
            auto t = read_tournament(kern_in);
            auto kr = kernel::kernelize(t, kern_k);
            with_output(kern_out, [&](std::ostream& out) {
                if (kr.outcome == kernel::Outcome::early_yes)
                {
                    out << "early-yes\n";
                    write_packing(out, std::span<const Triangle>(kr.greedy.data(), static_cast<std::size_t>(kern_k)));
                    return;
                }
                out << "# kernel k=" << kr.k << " vertices=" << kr.tournament.size() << '\n';
                for (std::size_t i = 0; i < kr.original.size(); ++i)
                    out << "# map " << i << ' ' << kr.original[i] << '\n';
                write_tournament(out, kr.tournament);
            });
            return ok;
        }

        if (*ver)
        {
            auto t = read_tournament(ver_tour);
            auto in = open_input(ver_pack);
            auto report = cli::verify(t, parse_packing(in), ver_size);
            std::cout << (report.ok ? "pass: " : "fail: ") << report.message << '\n';
            return report.ok ? ok : failure;
        }

        if (*st)
        {
            std::cout << cli::stats(read_tournament(st_in)).dump(2) << '\n';
            return ok;
        }
    }
    catch (const cli::BudgetRefusal& e)
    {
        std::cerr << "refused: " << e.what() << '\n';
        return refused;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return failure;
    }
    return usage;
}
