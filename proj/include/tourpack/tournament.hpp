#pragma once

// Tournaments in linear representation: an ordering of the vertices (the
// vertices *are* their positions 0..n-1) plus the set of backward arcs.
// Every pair not reversed by a backward arc is a forward arc.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourpack {

using Vertex = int;

struct Arc
{
    Vertex tail = 0;
    Vertex head = 0;

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

class TournamentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class LinearTournament
{
public:
    LinearTournament() = default;

    /// Validates and stores the backward set. Every pair (t, h) must satisfy
    /// 0 <= h < t < n and appear once.
    static LinearTournament from_backward_arcs(int n, std::span<const Arc> backward);

    int size() const noexcept { return n_; }

    /// Sorted by (tail, head).
    const std::vector<Arc>& backward() const noexcept { return backward_; }

    std::size_t arc_count() const noexcept
    {
        return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
    }

    /// Throws on u == v or out-of-range vertices.
    bool has_arc(Vertex u, Vertex v) const;

    /// Same as has_arc without argument checks; requires u != v, both in range.
    bool has_arc_unchecked(Vertex u, Vertex v) const noexcept
    {
        return u < v ? reversed_[index(v, u)] == 0 : reversed_[index(u, v)] != 0;
    }

    /// True iff u -> v is an arc and u comes after v.
    bool is_backward(Vertex u, Vertex v) const noexcept
    {
        return u > v && reversed_[index(u, v)] != 0;
    }

    /// The arc between u and v, in its actual orientation.
    Arc arc_between(Vertex u, Vertex v) const
    {
        return has_arc(u, v) ? Arc{u, v} : Arc{v, u};
    }

    /// Dense index of the unordered pair {u, v} in 0..arc_count()-1.
    std::size_t pair_index(Vertex u, Vertex v) const noexcept
    {
        if (u > v)
            std::swap(u, v);
        auto a = static_cast<std::size_t>(u);
        auto nn = static_cast<std::size_t>(n_);
        return a * nn - a * (a + 1) / 2 + static_cast<std::size_t>(v - u - 1);
    }

    bool operator==(const LinearTournament& other) const
    {
        return n_ == other.n_ && backward_ == other.backward_;
    }

private:
    std::size_t index(Vertex big, Vertex small) const noexcept
    {
        return static_cast<std::size_t>(big) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(small);
    }

    int n_ = 0;
    std::vector<Arc> backward_;
    std::vector<std::uint8_t> reversed_;
};

/// Ordering of T1 followed by T2; backward sets are shifted and unioned so
/// every arc between the two parts points forward.
LinearTournament concatenate(const LinearTournament& first, const LinearTournament& second);

struct InducedSubtournament
{
    LinearTournament tournament;
    /// original[i] is the position in the host of the i-th vertex.
    std::vector<Vertex> original;
};

/// Restriction of T to `vertices` (any order, duplicates ignored).
InducedSubtournament induced_subtournament(const LinearTournament& t, std::span<const Vertex> vertices);

/// Backward set of this representation is a matching.
bool is_sparse(const LinearTournament& t);

/// Sparse and every vertex is an endpoint of a backward arc.
bool is_fully_sparse(const LinearTournament& t);

/// Number of backward arcs touching each vertex.
std::vector<int> backward_degrees(const LinearTournament& t);

} // namespace tourpack
