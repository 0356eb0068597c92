#pragma once

// Plain-text formats shared by every command.
//
//   tournament <n>
//   b <tail> <head>          one per backward arc, head < tail
//
//   triangle <a> <b> <c>     directed order
//   cycle <v1> ... <vp>
//
// Positions are 0-based; '#' starts a comment.

#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tourpack {

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

LinearTournament parse_tournament(std::istream& in);
LinearTournament parse_tournament(std::string_view text);
void write_tournament(std::ostream& out, const LinearTournament& t);
std::string format_tournament(const LinearTournament& t);

/// A packing file; `triangles_only` is set when every line was a triangle.
struct PackingFile
{
    std::vector<Cycle> members;
    bool triangles_only = true;
};

PackingFile parse_packing(std::istream& in);
PackingFile parse_packing(std::string_view text);
void write_packing(std::ostream& out, std::span<const Triangle> packing);
void write_packing(std::ostream& out, std::span<const Cycle> packing);

/// Triangles of a packing file, or ParseError if a member is longer.
TrianglePacking triangles_of(const PackingFile& file);

} // namespace tourpack
