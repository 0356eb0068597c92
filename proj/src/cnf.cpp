#include "tourpack/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace tourpack::reduction {

void Cnf3Instance::validate() const
{
    if (n_vars < 0)
        throw CnfError("negative variable count");
    std::vector<int> positive(static_cast<std::size_t>(n_vars), 0), negative(static_cast<std::size_t>(n_vars), 0);
    for (std::size_t j = 0; j < clauses.size(); ++j)
    {
        const auto& c = clauses[j];
        const std::string where = "clause " + std::to_string(j + 1);
        if (c.size() < 2 || c.size() > 3)
            throw CnfError(where + " has " + std::to_string(c.size()) + " literals; 2 or 3 required");
        for (std::size_t a = 0; a < c.size(); ++a)
        {
            if (c[a].var < 0 || c[a].var >= n_vars)
                throw CnfError(where + " mentions unknown variable " + std::to_string(c[a].var + 1));
            for (std::size_t b = a + 1; b < c.size(); ++b)
                if (c[a].var == c[b].var)
                    throw CnfError(where + " repeats variable " + std::to_string(c[a].var + 1));
            ++(c[a].positive ? positive : negative)[static_cast<std::size_t>(c[a].var)];
        }
    }
    for (int v = 0; v < n_vars; ++v)
    {
        if (positive[static_cast<std::size_t>(v)] > 2)
            throw CnfError("variable " + std::to_string(v + 1) + " occurs positively more than twice");
        if (negative[static_cast<std::size_t>(v)] > 1)
            throw CnfError("variable " + std::to_string(v + 1) + " occurs negatively more than once");
    }
}

bool Cnf3Instance::satisfied_by(const std::vector<bool>& assignment) const
{
    return std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](const Literal& l) {
            return static_cast<std::size_t>(l.var) < assignment.size() &&
                   assignment[static_cast<std::size_t>(l.var)] == l.positive;
        });
    });
}

Cnf3Instance parse_dimacs(std::istream& in)
{
    Cnf3Instance f;
    int declared_clauses = -1;
    std::vector<Literal> current;
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& why) { throw CnfError("line " + std::to_string(line_no) + ": " + why); };

    while (std::getline(in, raw))
    {
        ++line_no;
        std::istringstream ss(raw);
        std::string tok;
        if (!(ss >> tok) || tok == "c" || tok[0] == 'c' || tok == "%")
            continue;
        if (tok == "p")
        {
            std::string kind;
            if (declared_clauses >= 0)
                fail("duplicate header");
            if (!(ss >> kind >> f.n_vars >> declared_clauses) || kind != "cnf" || f.n_vars < 0 || declared_clauses < 0)
                fail("malformed header, expected 'p cnf <vars> <clauses>'");
            continue;
        }
        if (declared_clauses < 0)
            fail("clause before 'p cnf' header");
        do
        {
            int lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                fail("expected an integer literal, got '" + tok + "'");
            if (lit == 0)
            {
                f.clauses.push_back(current);
                current.clear();
                continue;
            }
            if (std::abs(lit) > f.n_vars)
                fail("literal " + tok + " exceeds the declared variable count");
            current.push_back({std::abs(lit) - 1, lit > 0});
        } while (ss >> tok);
    }
    if (declared_clauses < 0)
        throw CnfError("missing 'p cnf' header");
    if (!current.empty())
        f.clauses.push_back(current);
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw CnfError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                       std::to_string(f.clauses.size()));
    f.original_vars = f.n_vars;
    f.validate();
    return f;
}

Cnf3Instance parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

namespace {

bool on_residue(int x)
{
    return x % 6 == 1 || x % 6 == 3;
}

} // namespace

bool is_normalized(const Cnf3Instance& f)
{
    return on_residue(f.n_vars) && on_residue(f.n_clauses() + 1);
}

Cnf3Instance normalize(const Cnf3Instance& f)
{
    f.validate();
    Cnf3Instance out = f;
    out.original_vars = f.original_vars > 0 || f.n_vars == 0 ? f.original_vars : f.n_vars;
    while (!on_residue(out.n_vars))
        ++out.n_vars;
    while (!on_residue(out.n_clauses() + 1))
    {
        const int p = out.n_vars;
        const int residue = (out.n_clauses() + 1) % 6;
        out.n_vars += 6;
        out.clauses.push_back({{p, true}, {p + 1, true}, {p + 2, true}});
        if (residue == 4 || residue == 5)
            out.clauses.push_back({{p + 3, true}, {p + 4, true}, {p + 5, true}});
    }
    return out;
}

std::vector<bool> parse_assignment(std::istream& in, int n_vars)
{
    std::vector<bool> a(static_cast<std::size_t>(n_vars), true);
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no)
    {
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.resize(hash);
        std::istringstream ss(raw);
        std::string tok;
        if (!(ss >> tok))
            continue;
        auto eq = tok.find('=');
        int var = 0;
        if (tok.size() < 4 || tok[0] != 'v' || eq == std::string::npos || eq + 2 != tok.size() ||
            (tok.back() != '0' && tok.back() != '1'))
            throw CnfError("line " + std::to_string(line_no) + ": expected 'v<i>=0' or 'v<i>=1'");
        auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + eq, var);
        if (ec != std::errc{} || ptr != tok.data() + eq || var < 1 || var > n_vars)
            throw CnfError("line " + std::to_string(line_no) + ": variable index out of range in '" + tok + "'");
        a[static_cast<std::size_t>(var - 1)] = tok.back() == '1';
    }
    return a;
}

std::vector<bool> parse_assignment(std::string_view text, int n_vars)
{
    std::istringstream in{std::string(text)};
    return parse_assignment(in, n_vars);
}

} // namespace tourpack::reduction
