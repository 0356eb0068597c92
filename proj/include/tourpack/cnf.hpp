#pragma once

// 3-SAT(3) formulas: clauses of two or three literals, each variable at most
// twice positive and at most once negative.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tourpack::reduction {

struct Literal
{
    int var = 0; ///< 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

class CnfError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct Cnf3Instance
{
    int n_vars = 0;
    std::vector<std::vector<Literal>> clauses;
    /// Variables 0..original_vars-1 came from the input; the rest are padding.
    int original_vars = 0;

    int n_clauses() const noexcept { return static_cast<int>(clauses.size()); }

    /// Throws CnfError naming the first violated occurrence or shape rule.
    void validate() const;

    bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF ("c" comments, "p cnf <vars> <clauses>", 0-terminated clauses).
Cnf3Instance parse_dimacs(std::istream& in);
Cnf3Instance parse_dimacs(std::string_view text);

/// n = 1, 3 (mod 6) and m + 1 = 1, 3 (mod 6).
bool is_normalized(const Cnf3Instance& f);

/// Equisatisfiable normalized formula. Unused variables are appended until
/// n = 1, 3 (mod 6); then, while m + 1 is off residue, six fresh variables
/// p1..p6 are appended with clause (p1 | p2 | p3), plus (p4 | p5 | p6) when
/// m + 1 = 4, 5 (mod 6).
Cnf3Instance normalize(const Cnf3Instance& f);

/// "v<i>=0|1" per line, 1-based; missing variables default to true.
std::vector<bool> parse_assignment(std::istream& in, int n_vars);
std::vector<bool> parse_assignment(std::string_view text, int n_vars);

} // namespace tourpack::reduction
