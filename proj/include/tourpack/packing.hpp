#pragma once

#include "tourpack/tournament.hpp"

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace tourpack {

/// Directed 3-cycle a -> b -> c -> a, stored rotated so the smallest
/// position comes first.
class Triangle
{
public:
    Triangle() = default;
    Triangle(Vertex a, Vertex b, Vertex c);

    Vertex operator[](std::size_t i) const { return v_[i]; }
    const std::array<Vertex, 3>& vertices() const noexcept { return v_; }
    std::array<Arc, 3> arcs() const noexcept
    {
        return {Arc{v_[0], v_[1]}, Arc{v_[1], v_[2]}, Arc{v_[2], v_[0]}};
    }

    friend auto operator<=>(const Triangle&, const Triangle&) = default;

private:
    std::array<Vertex, 3> v_{0, 1, 2};
};

/// Simple directed cycle v_1 -> ... -> v_p -> v_1 with p >= 3, rotated so the
/// smallest vertex comes first.
class Cycle
{
public:
    Cycle() = default;
    explicit Cycle(std::vector<Vertex> vertices);
    explicit Cycle(const Triangle& t);

    const std::vector<Vertex>& vertices() const noexcept { return v_; }
    std::size_t length() const noexcept { return v_.size(); }
    std::vector<Arc> arcs() const;

    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<Vertex> v_;
};

using TrianglePacking = std::vector<Triangle>;
using CyclePacking = std::vector<Cycle>;

struct Validation
{
    bool ok = true;
    std::string message;

    explicit operator bool() const noexcept { return ok; }
    static Validation fail(std::string why) { return {false, std::move(why)}; }
};

/// Every directed triangle of T exactly once, in canonical form, sorted.
std::vector<Triangle> enumerate_triangles(const LinearTournament& t);

bool is_triangle_of(const LinearTournament& t, const Triangle& tri);

/// Checks membership in T and pairwise arc-disjointness; reports the first
/// violation.
Validation validate_triangle_packing(const LinearTournament& t, std::span<const Triangle> packing);
Validation validate_cycle_packing(const LinearTournament& t, std::span<const Cycle> packing);

CyclePacking as_cycles(std::span<const Triangle> packing);

/// Out-degree of x inside T[X] after removing every arc used by the packing.
int local_out_degree(const LinearTournament& t, std::span<const Vertex> subset,
                     std::span<const Triangle> packing, Vertex x);

/// Human-readable forms used in diagnostics.
std::string to_string(const Arc& a);
std::string to_string(const Triangle& t);
std::string to_string(const Cycle& c);

} // namespace tourpack
