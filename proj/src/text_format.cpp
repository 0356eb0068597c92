#include "tourpack/text_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace tourpack {

namespace {

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;)
        out.push_back(tok);
    return out;
}

int to_int(const std::string& tok, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

} // namespace

LinearTournament parse_tournament(std::istream& in)
{
    int n = -1;
    int header_line = 0;
    std::vector<Arc> backward;
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no)
    {
        auto tok = tokens(strip_comment(raw));
        if (tok.empty())
            continue;
        if (n < 0)
        {
            if (tok.size() != 2 || tok[0] != "tournament")
                throw ParseError(line_no, "expected 'tournament <n>' header");
            n = to_int(tok[1], line_no);
            if (n < 0)
                throw ParseError(line_no, "negative vertex count");
            header_line = line_no;
            continue;
        }
        if (tok.size() != 3 || tok[0] != "b")
            throw ParseError(line_no, "expected 'b <tail> <head>'");
        Arc a{to_int(tok[1], line_no), to_int(tok[2], line_no)};
        if (a.head < 0 || a.tail >= n || a.head >= a.tail)
            throw ParseError(line_no, "backward arc needs 0 <= head < tail < " + std::to_string(n));
        backward.push_back(a);
    }
    if (n < 0)
        throw ParseError(1, "missing 'tournament <n>' header");
    try
    {
        return LinearTournament::from_backward_arcs(n, backward);
    }
    catch (const TournamentError& e)
    {
        throw ParseError(header_line, e.what());
    }
}

LinearTournament parse_tournament(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_tournament(in);
}

void write_tournament(std::ostream& out, const LinearTournament& t)
{
    out << "tournament " << t.size() << '\n';
    for (const auto& a : t.backward())
        out << "b " << a.tail << ' ' << a.head << '\n';
}

std::string format_tournament(const LinearTournament& t)
{
    std::ostringstream out;
    write_tournament(out, t);
    return out.str();
}

PackingFile parse_packing(std::istream& in)
{
    PackingFile file;
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no)
    {
        auto tok = tokens(strip_comment(raw));
        if (tok.empty())
            continue;
        std::vector<Vertex> vs;
        for (std::size_t i = 1; i < tok.size(); ++i)
            vs.push_back(to_int(tok[i], line_no));
        if (tok[0] == "triangle")
        {
            if (vs.size() != 3)
                throw ParseError(line_no, "a triangle needs exactly 3 vertices");
        }
        else if (tok[0] == "cycle")
        {
            if (vs.size() < 3)
                throw ParseError(line_no, "a cycle needs at least 3 vertices");
            if (vs.size() > 3)
                file.triangles_only = false;
        }
        else
            throw ParseError(line_no, "expected 'triangle' or 'cycle', got '" + tok[0] + "'");
        try
        {
            file.members.emplace_back(std::move(vs));
        }
        catch (const TournamentError& e)
        {
            throw ParseError(line_no, e.what());
        }
    }
    return file;
}

PackingFile parse_packing(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_packing(in);
}

void write_packing(std::ostream& out, std::span<const Triangle> packing)
{
    for (const auto& t : packing)
        out << "triangle " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_packing(std::ostream& out, std::span<const Cycle> packing)
{
    for (const auto& c : packing)
    {
        out << "cycle";
        for (Vertex v : c.vertices())
            out << ' ' << v;
        out << '\n';
    }
}

TrianglePacking triangles_of(const PackingFile& file)
{
    TrianglePacking out;
    for (std::size_t i = 0; i < file.members.size(); ++i)
    {
        const auto& v = file.members[i].vertices();
        if (v.size() != 3)
            throw ParseError(0, "member " + std::to_string(i) + " is not a triangle");
        out.emplace_back(v[0], v[1], v[2]);
    }
    return out;
}

} // namespace tourpack
