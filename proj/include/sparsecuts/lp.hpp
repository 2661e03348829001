#pragma once

#include "sparsecuts/polyhedron.hpp"

#include <optional>

namespace sparsecuts {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of maximizing c*x over an HRep. When Optimal, argmax satisfies every
/// constraint exactly and value == c*argmax. dual_ineq/dual_eq hold an exact
/// optimality certificate: dual_ineq >= 0 and
///   c == sum_i dual_ineq[i]*A_i + sum_j dual_eq[j]*E_j,
///   value == sum_i dual_ineq[i]*b_i + sum_j dual_eq[j]*f_j.
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    RatVec argmax;
    RatVec dual_ineq;
    RatVec dual_eq;
};

/// Exact rational simplex, two phases, Bland's anti-cycling rule with
/// lowest-index tie-breaking throughout. Deterministic.
LpResult maximize(const RatVec& c, const HRep& h);

inline LpResult minimize(const RatVec& c, const HRep& h) {
    RatVec neg(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    LpResult r = maximize(neg, h);
    if (r.status == LpStatus::Optimal) {
        r.value = -r.value;
        for (auto& y : r.dual_ineq) y = -y;
        for (auto& y : r.dual_eq) y = -y;
    }
    return r;
}

bool lp_feasible(const HRep& h);

/// Verify the dual certificate of an Optimal result. Exact.
bool dual_certificate_ok(const RatVec& c, const HRep& h, const LpResult& r);

/// Find mu >= 0 with E*mu == f (columns of E indexed like mu), or nullopt.
/// Used for convex-combination membership tests.
std::optional<RatVec> nonneg_solve(const std::vector<RatVec>& eq_rows, const RatVec& rhs);

}  // namespace sparsecuts
