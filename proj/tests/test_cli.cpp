#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tourpack/commands.hpp"
#include "tourpack/random.hpp"
#include "tourpack/text_format.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace tourpack;
using namespace tourpack::cli;

namespace fs = std::filesystem;

namespace {

LinearTournament make(int n, std::vector<Arc> b)
{
    return LinearTournament::from_backward_arcs(n, b);
}

struct Scratch
{
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / ("tourpack_cli_" + std::to_string(::getpid()))) { fs::create_directories(dir); }
    ~Scratch() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& out = "/dev/null")
{
    int status = std::system((std::string(TOURPACK_CLI) + " " + args + " >" + out + " 2>/dev/null").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* formula = "p cnf 3 2\n-1 2 -3 0\n1 -2 3 0\n";

} // namespace

TEST_CASE("dispatch picks the method")
{
    SolveOptions o;
    auto s = dispatch_solve(make(6, {{3, 0}, {4, 1}, {5, 2}}), o);
    CHECK(s.method == "sparse-poly");
    CHECK(s.optimum == 3);
    CHECK(s.sparse);
    CHECK(s.fully_sparse);

    Rng rng(107);
    auto dense = random_tournament(8, 0.5, rng);
    REQUIRE_FALSE(is_sparse(dense));
    auto e = dispatch_solve(dense, o);
    CHECK(e.method == "exact");
    CHECK(e.optimum == oracle::exact_max_triangle_packing(dense).size);

    o.cycles = true;
    auto c = dispatch_solve(dense, o);
    CHECK(c.optimum == oracle::exact_max_cycle_packing(dense).size);
    o.cycles = false;

    auto big = random_tournament(200, 0.5, rng);
    CHECK_THROWS_AS(dispatch_solve(big, o), BudgetRefusal);

    o.k = 2;
    auto k = dispatch_solve(big, o);
    CHECK(k.method == "kernel");
    CHECK(k.decision == true);
    CHECK(k.witness.size() == 2);

    // Sparse inputs go to the polynomial solver even when -k is given.
    auto lone = make(100, {{2, 0}});
    SolveOptions ok2;
    ok2.k = 2;
    ok2.method = Method::automatic;
    auto lr = dispatch_solve(lone, ok2);
    CHECK(lr.method == "sparse-poly");
    CHECK(lr.decision == false);

    auto lone_dense = make(100, {{2, 0}, {6, 3}, {5, 3}});
    REQUIRE_FALSE(is_sparse(lone_dense));
    auto ld = dispatch_solve(lone_dense, ok2);
    CHECK(ld.method == "kernel");
    CHECK(ld.decision == true);
    ok2.k = 3;
    auto ld3 = dispatch_solve(lone_dense, ok2);
    CHECK(ld3.method == "kernel+exact");
    CHECK(ld3.decision == false);
    CHECK(ld3.kernel_vertices.has_value());

    SolveOptions f;
    f.method = Method::fpt;
    f.k = 1;
    auto fr = dispatch_solve(make(3, {{2, 0}}), f);
    CHECK(fr.method == "fpt");
    CHECK(fr.decision == true);
    f.k = 2;
    auto fn = dispatch_solve(make(3, {{2, 0}}), f);
    CHECK(fn.decision == false);
    CHECK(fn.delta == doctest::Approx(0.01));
    f.k.reset();
    CHECK_THROWS_AS(dispatch_solve(make(3, {{2, 0}}), f), std::invalid_argument);

    SolveOptions sp;
    sp.method = Method::sparse;
    CHECK_THROWS_AS(dispatch_solve(dense, sp), TournamentError);

    SolveOptions bad;
    bad.k = 0;
    CHECK_THROWS_AS(dispatch_solve(dense, bad), std::invalid_argument);
}

TEST_CASE("serial and parallel dispatch agree")
{
    Rng rng(109);
    for (int rep = 0; rep < 20; ++rep)
    {
        auto t = random_sparse_tournament(rng.between(10, 60), rng);
        SolveOptions a, b;
        a.exec = Execution::serial;
        b.exec = Execution::parallel;
        auto ra = dispatch_solve(t, a), rb = dispatch_solve(t, b);
        CHECK(ra.optimum == rb.optimum);
        CHECK(ra.witness == rb.witness);
    }
}

TEST_CASE("verify")
{
    auto t = make(4, {{2, 0}, {3, 1}});
    auto good = verify(t, parse_packing("triangle 0 1 2\n"), 1);
    CHECK(good.ok);
    CHECK(good.size == 1);

    CHECK_FALSE(verify(t, parse_packing("triangle 0 1 2\ntriangle 0 1 2\n"), std::nullopt).ok);
    CHECK_FALSE(verify(t, parse_packing("triangle 0 1 2\ntriangle 1 2 3\n"), std::nullopt).ok);
    auto claim = verify(t, parse_packing("triangle 0 1 2\n"), 2);
    CHECK_FALSE(claim.ok);
    CHECK(claim.message.find("claimed") != std::string::npos);
    CHECK(verify(t, parse_packing("cycle 0 3 1 2\n"), 1).ok);
}

TEST_CASE("generators")
{
    auto sts = generate("clique-sts", 7, 1);
    CHECK(sts.size() == 7);
    CHECK(sts.backward().size() == 7);
    CHECK(is_sparse(generate("random-sparse", 30, 3)));
    CHECK(is_fully_sparse(generate("random-fully-sparse", 20, 3)));
    CHECK(generate("random", 12, 5, 0.3) == generate("random", 12, 5, 0.3));
    CHECK(generate("random", 12, 5, 0.0).backward().empty());
    CHECK_THROWS_AS(generate("nope", 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate("random", -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate("random", 5, 1, 2.0), std::invalid_argument);
}

TEST_CASE("JSON reports")
{
    auto t = make(3, {{2, 0}});
    auto j = stats(t);
    CHECK(j["n"] == 3);
    CHECK(j["triangles"] == 1);
    CHECK(j["sparse"] == true);
    CHECK(j["fully_sparse"] == false);
    CHECK(j["max_backward_degree"] == 1);

    SolveOptions o;
    o.k = 1;
    auto r = dispatch_solve(t, o).to_json();
    CHECK(r["method"] == "sparse-poly");
    CHECK(r["optimum"] == 1);
    CHECK(r["decision"] == true);
    CHECK(r["witness"].size() == 1);
    CHECK(r["witness_path"].is_null());

    std::ostringstream out;
    write_witness(out, dispatch_solve(t, o));
    CHECK(out.str() == "triangle 0 1 2\n");
}

TEST_CASE("command line")
{
    Scratch s;
    auto cnf = s.write("f.cnf", formula);
    auto assignment = s.write("a.txt", "v1=1\nv2=1\nv3=1\n");

    CHECK(run("reduce " + cnf + " -o " + s.path("t.txt")) == 0);
    CHECK(slurp(s.path("t.txt.meta")).rfind("threshold=67", 0) == 0);
    CHECK(parse_tournament(slurp(s.path("t.txt"))).size() == 27);
    CHECK(run("certify " + cnf + " " + assignment + " -o " + s.path("p.txt")) == 0);
    CHECK(run("verify " + s.path("t.txt") + " " + s.path("p.txt") + " --size 67", s.path("v.txt")) == 0);
    CHECK(slurp(s.path("v.txt")) == "pass: valid packing of size 67\n");
    CHECK(run("verify " + s.path("t.txt") + " " + s.path("p.txt") + " --size 68") == 1);

    // v1=0, v2=1, v3=0 falsifies the second clause.
    auto falsifying = s.write("b.txt", "v1=0\nv2=1\nv3=0\n");
    CHECK(run("certify " + cnf + " " + falsifying) == 1);

    CHECK(run("gen --kind random -n 8 --seed 4 -o " + s.path("r.txt")) == 0);
    CHECK(run("solve " + s.path("r.txt") + " --json", s.path("r.json")) == 0);
    auto j = nlohmann::json::parse(slurp(s.path("r.json")));
    CHECK(j["method"] == "exact");
    CHECK(j["optimum"] == oracle::exact_max_triangle_packing(parse_tournament(slurp(s.path("r.txt")))).size);

    CHECK(run("gen --kind random -n 60 --seed 4 -o " + s.path("big.txt")) == 0);
    CHECK(run("solve " + s.path("big.txt")) == 3);
    CHECK(run("solve " + s.path("big.txt") + " -k 2") == 0);
    CHECK(run("solve " + s.path("big.txt") + " --sparse --exact") == 2);
    CHECK(run("solve") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("solve " + s.path("missing.txt")) == 1);
    CHECK(run("kernelize " + s.path("r.txt") + " -k 3", s.path("k.txt")) == 0);
    CHECK(run("stats " + s.path("r.txt")) == 0);
    CHECK(run("gen --sts 9") == 0);
    CHECK(run("gen --sts 8") == 1);
}
