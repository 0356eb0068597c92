#pragma once

// The logic behind the command-line tool, kept out of main() so it can be
// tested directly.

#include "tourpack/execution.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/packing.hpp"
#include "tourpack/text_format.hpp"
#include "tourpack/tournament.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tourpack::cli {

/// No solver applies within the configured budget.
class BudgetRefusal : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Method
{
    automatic,
    sparse,
    exact,
    fpt,
};

struct SolveOptions
{
    Method method = Method::automatic;
    std::optional<int> k;
    bool cycles = false;
    double delta = 0.01;
    std::uint64_t seed = 1;
    oracle::OracleBudget budget;
    Execution exec = Execution::parallel;
};

struct SolveReport
{
    int n = 0;
    int backward = 0;
    bool sparse = false;
    bool fully_sparse = false;
    std::string method;
    std::optional<int> optimum;
    std::optional<bool> decision; ///< set when k was given
    std::optional<int> k;
    double delta = 0.0;          ///< error bound of a randomized "no", else 0
    std::optional<int> kernel_vertices;
    double wall_seconds = 0.0;
    CyclePacking witness; ///< triangles are stored as 3-cycles
    bool cycles = false;
    std::string witness_path;

    nlohmann::json to_json() const;
};

SolveReport dispatch_solve(const LinearTournament& t, const SolveOptions& options);

/// The witness in packing format: triangles unless `cycles` is set.
void write_witness(std::ostream& out, const SolveReport& report);

struct VerifyReport
{
    bool ok = false;
    int size = 0;
    std::string message;
};

/// Members must be valid and arc-disjoint, and there must be at least
/// `claimed` of them when a claim is given.
VerifyReport verify(const LinearTournament& t, const PackingFile& packing, std::optional<int> claimed);

/// kind is random, random-sparse, random-fully-sparse or clique-sts.
/// `p` is the reversal probability for kind random.
LinearTournament generate(const std::string& kind, int n, std::uint64_t seed, double p = 0.5);

nlohmann::json stats(const LinearTournament& t);

} // namespace tourpack::cli
