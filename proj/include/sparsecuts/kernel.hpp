#pragma once

#include "sparsecuts/errors.hpp"
#include "sparsecuts/polyhedron.hpp"

namespace sparsecuts {

/// Extreme rays and lineality basis of {x : E x == 0, A x >= 0}.
struct ConeDD {
    std::vector<RatVec> lines;
    std::vector<RatVec> rays;
};

/// Double description with deterministic (caller-supplied) insertion order and
/// algebraic (rank) adjacency tests. max_rays == 0 means unlimited; otherwise
/// BudgetExceeded is thrown as soon as the working ray set passes the cap.
ConeDD dd_cone(int dim, const std::vector<RatVec>& eq_rows, const std::vector<RatVec>& ineq_rows,
               std::size_t max_rays = 0);

/// Facet enumeration. The result is irredundant, facet normals are primitive
/// integer vectors, and the affine hull appears as an explicit equation
/// subsystem. Deterministic: rows sorted lexicographically.
HRep v_to_h(const VRep& p);

/// Vertex/ray/lineality enumeration of an HRep.
GenSet h_to_generators(const HRep& h, std::size_t max_rays = 0);

/// Vertex enumeration for (possibly lower-dimensional) polyhedra without
/// proper recession rays. Throws InfeasibleError / UnboundedError.
VRep h_to_v(const HRep& h, std::size_t max_rays = 0);

/// Exact projection onto the kept coordinates (ascending order) via block
/// elimination with LP redundancy removal after each eliminated variable.
HRep project(const HRep& h, const std::vector<int>& keep);

bool member(const HRep& h, const RatVec& x);
bool contains(const HRep& h, const VRep& v);
bool contains_gen(const HRep& h, const GenSet& g);
bool equal_sets(const HRep& a, const HRep& b);

/// Canonical irredundant form: implicit equalities promoted to the equation
/// subsystem (reduced row echelon form), inequalities reduced modulo it,
/// redundant inequalities removed by exact LP.
HRep reduce(const HRep& h);

int rank_of(std::vector<RatVec> rows);

/// In-place reduced row echelon form of an equation system over (a | b).
/// Returns pivot columns; appends nothing. A row reducing to 0 == b with
/// b != 0 is left as {0, 1} so callers can detect infeasibility.
std::vector<int> rref(std::vector<LinRow>& eqs);

/// Zero out the pivot coordinates of row modulo an RREF equation system.
void reduce_row_mod_eqs(LinRow& row, const std::vector<LinRow>& rref_eqs, const std::vector<int>& pivots);

}  // namespace sparsecuts
