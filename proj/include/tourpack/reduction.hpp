#pragma once

// Hardness instances: a 3-SAT(3) formula becomes a tournament whose maximum
// triangle packing reaches `threshold` exactly when the formula is
// satisfiable. The produced ordering has exactly `threshold` backward arcs,
// so satisfiable instances are tight (packing size = optimal FAS size).
//
// Layout: variable gadgets V_0..V_{n-1} (6 vertices each, in the order
// r, x̄, x¹, s, x², t) followed by clause gadgets C_0..C_m (3 vertices each,
// c¹, c², c³), where C_m is the dummy triangle.

#include "tourpack/cnf.hpp"
#include "tourpack/packing.hpp"
#include "tourpack/tournament.hpp"

#include <iosfwd>
#include <vector>

namespace tourpack::reduction {

struct VariableGadget
{
    Vertex r, xbar, x1, s, x2, t;

    std::vector<Vertex> vertices() const { return {r, xbar, x1, s, x2, t}; }
};

struct ClauseGadget
{
    Vertex c1, c2, c3;

    std::vector<Vertex> vertices() const { return {c1, c2, c3}; }
};

/// A backward arc from the clause part to the variable part. Dummy arcs
/// (from the dummy triangle to every x̄) have clause == -1.
struct VcArc
{
    Arc arc;
    int clause = -1;
    Literal literal;
};

struct ReductionOutput
{
    Cnf3Instance formula; ///< the normalized formula the tournament encodes
    LinearTournament tournament;
    long long threshold = 0;
    long long alpha = 0;
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses; ///< m real clauses, then the dummy gadget
    std::vector<VcArc> vc_arcs;

    const ClauseGadget& dummy() const { return clauses.back(); }
};

/// 6n(n-1) + 3m(m+1)/2 + 2n + alpha + 1.
long long packing_threshold(int n_vars, int n_clauses, long long alpha);

/// Requires a normalized formula (CnfError otherwise).
ReductionOutput build_reduction(const Cnf3Instance& f);

/// The three maximal packings of one variable gadget, with
/// t1 = (r, x̄, s), t2 = (r, x¹, s), t3 = (x¹, s, t), t4 = (x¹, x², t).
struct GadgetPackings
{
    TrianglePacking top;       ///< {t1, t3}
    TrianglePacking top_prime; ///< {t1, t4}
    TrianglePacking bottom;    ///< {t2, t4}
};

GadgetPackings variable_gadget_packings(const VariableGadget& g);

/// Packing of size `threshold` built from a satisfying assignment. The
/// assignment may cover only the original variables; the rest default to true.
/// Throws CnfError if the assignment does not satisfy the formula.
TrianglePacking certificate_packing(const ReductionOutput& r, std::vector<bool> assignment);

/// Reads the assignment back from a packing of size `threshold`: a variable is
/// false iff its gadget carries exactly the bottom packing. Returns values for
/// the original variables only. Throws CnfError on non-conforming packings.
std::vector<bool> decode_assignment(const ReductionOutput& r, std::span<const Triangle> packing);

/// `threshold=`, `alpha=`, then one `var`/`clause` line per gadget.
void write_metadata(std::ostream& out, const ReductionOutput& r);

} // namespace tourpack::reduction
