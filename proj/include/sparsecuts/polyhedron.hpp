#pragma once

#include "sparsecuts/rational.hpp"

#include <string>
#include <vector>

namespace sparsecuts {

/// One linear row: a*x <= b as an inequality, a*x == b as an equation.
struct LinRow {
    RatVec a;
    Rat b;

    int dim() const { return static_cast<int>(a.size()); }
    Rat eval(const RatVec& x) const { return dot(a, x); }
    bool operator==(const LinRow& o) const { return b == o.b && a == o.a; }
};

/// Three-way order on (a, b), used everywhere a deterministic row order is needed.
int row_cmp(const LinRow& r, const LinRow& s);
bool row_less(const LinRow& r, const LinRow& s);

/// Scale an inequality by a positive rational so the normal is a primitive
/// integer vector (gcd of entries 1). Rows with a == 0 get b snapped to
/// {-1, 0, 1}.
void canonicalize_ineq(LinRow& r);

/// Scale an equation so the normal is primitive integral with positive leading
/// nonzero (negation is allowed for equations).
void canonicalize_eq(LinRow& r);

/// Vertex-plus-lineality representation: conv(vertices) + span(lineality).
struct VRep {
    int dim = 0;
    std::vector<RatVec> vertices;
    std::vector<RatVec> lineality;

    void validate() const;
    /// Deduplicate vertices and drop zero lineality generators, sorting both.
    void normalize();
};

/// Inequality/equation representation: {x : A x <= b, E x == f}.
struct HRep {
    int dim = 0;
    std::vector<LinRow> inequalities;
    std::vector<LinRow> equations;
    bool infeasible = false;

    void validate() const;
    /// Canonicalize every row, drop trivial rows and duplicates, sort. Rows of
    /// the form 0 <= b with b < 0 (or 0 == b, b != 0) set the infeasible flag.
    void normalize();

    bool satisfied_by(const RatVec& x) const;

    static HRep canonical_infeasible(int dim);
};

/// Axis-aligned box; lo <= x <= hi componentwise.
struct Box {
    RatVec lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
    static Box unit(int dim);       // [0,1]^n
    static Box symmetric(int dim);  // [-1,1]^n
    std::vector<LinRow> rows() const;
    bool contains(const RatVec& x) const;
};

/// Generators of a general polyhedron: conv(points) + cone(rays) + span(lines).
struct GenSet {
    int dim = 0;
    std::vector<RatVec> points;
    std::vector<RatVec> rays;
    std::vector<RatVec> lines;

    bool empty() const { return points.empty(); }
    bool bounded() const { return rays.empty() && lines.empty(); }
};

// ---- JSON serialization (rationals as "num" / "num/den" strings) ----

std::string vrep_to_json(const VRep& v);
VRep vrep_from_json(const std::string& text);
std::string hrep_to_json(const HRep& h);
HRep hrep_from_json(const std::string& text);

VRep load_vrep(const std::string& path);
HRep load_hrep(const std::string& path);
void save_vrep(const VRep& v, const std::string& path);
void save_hrep(const HRep& h, const std::string& path);

}  // namespace sparsecuts
