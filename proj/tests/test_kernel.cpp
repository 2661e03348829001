#include "sparsecuts/kernel.hpp"
#include "sparsecuts/lp.hpp"
#include "sparsecuts/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sparsecuts;

namespace {

VRep make_vrep(int dim, std::vector<std::vector<int>> pts) {
    VRep v;
    v.dim = dim;
    for (auto& p : pts) {
        RatVec q;
        for (int x : p) q.push_back(Rat(x));
        v.vertices.push_back(q);
    }
    return v;
}

HRep simplex_h(int n) {
    HRep h;
    h.dim = n;
    h.inequalities = Box::unit(n).rows();
    h.inequalities.push_back(LinRow{ones_vec(n), Rat(1)});
    return h;
}

VRep random_vrep(Rng& rng, int dim, int npts) {
    VRep v;
    v.dim = dim;
    for (int i = 0; i < npts; ++i) {
        RatVec p;
        for (int j = 0; j < dim; ++j) p.push_back(Rat(rng.uniform_int(0, 4), 4));
        v.vertices.push_back(p);
    }
    v.normalize();
    return v;
}

}  // namespace

TEST_CASE("v_to_h: standard 2-simplex") {
    VRep tri = make_vrep(2, {{0, 0}, {1, 0}, {0, 1}});
    HRep h = v_to_h(tri);
    CHECK(h.equations.empty());
    REQUIRE(h.inequalities.size() == 3);
    // expect x1 >= 0, x2 >= 0, x1 + x2 <= 1 in canonical primitive form
    HRep expect;
    expect.dim = 2;
    expect.inequalities = {LinRow{{Rat(-1), Rat(0)}, Rat(0)}, LinRow{{Rat(0), Rat(-1)}, Rat(0)},
                           LinRow{{Rat(1), Rat(1)}, Rat(1)}};
    expect.normalize();
    CHECK(h.inequalities == expect.inequalities);
}

TEST_CASE("v_to_h: interval in dim 1") {
    VRep seg = make_vrep(1, {{0}, {1}});
    HRep h = v_to_h(seg);
    REQUIRE(h.inequalities.size() == 2);
    CHECK(h.inequalities[0] == LinRow{{Rat(-1)}, Rat(0)});
    CHECK(h.inequalities[1] == LinRow{{Rat(1)}, Rat(1)});
}

TEST_CASE("v_to_h: lineality eliminates the free direction") {
    VRep v = make_vrep(2, {{0, 0}, {1, 1}});
    v.lineality.push_back(RatVec{Rat(0), Rat(1)});
    HRep h = v_to_h(v);
    CHECK(h.equations.empty());
    REQUIRE(h.inequalities.size() == 2);  // 0 <= x1 <= 1, x2 free
    CHECK(h.inequalities[0] == LinRow{{Rat(-1), Rat(0)}, Rat(0)});
    CHECK(h.inequalities[1] == LinRow{{Rat(1), Rat(0)}, Rat(1)});
}

TEST_CASE("v_to_h: single point gives equations only") {
    VRep v = make_vrep(3, {{1, 2, 3}});
    HRep h = v_to_h(v);
    CHECK(h.inequalities.empty());
    CHECK(h.equations.size() == 3);
    CHECK(h.satisfied_by(RatVec{Rat(1), Rat(2), Rat(3)}));
    CHECK_FALSE(h.satisfied_by(RatVec{Rat(1), Rat(2), Rat(4)}));
}

TEST_CASE("v_to_h: dimension-deficient triangle in 3d") {
    VRep tri = make_vrep(3, {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}});
    HRep h = v_to_h(tri);
    REQUIRE(h.equations.size() == 1);  // x3 = x1 + x2
    CHECK(h.inequalities.size() == 3);
    for (const auto& vert : tri.vertices) CHECK(h.satisfied_by(vert));
    CHECK_FALSE(h.satisfied_by(RatVec{Rat(1, 2), Rat(1, 2), Rat(0)}));
}

TEST_CASE("h_to_v: simplex and unit square") {
    VRep v = h_to_v(simplex_h(2));
    REQUIRE(v.vertices.size() == 3);
    CHECK(v.lineality.empty());

    HRep sq;
    sq.dim = 2;
    sq.inequalities = Box::unit(2).rows();
    VRep vs = h_to_v(sq);
    CHECK(vs.vertices.size() == 4);
    CHECK(std::find(vs.vertices.begin(), vs.vertices.end(), RatVec{Rat(1), Rat(1)}) != vs.vertices.end());
}

TEST_CASE("h_to_v: infeasible and unbounded reporting") {
    HRep bad;
    bad.dim = 1;
    bad.inequalities.push_back(LinRow{{Rat(1)}, Rat(0)});
    bad.inequalities.push_back(LinRow{{Rat(-1)}, Rat(-1)});
    CHECK_THROWS_AS(h_to_v(bad), InfeasibleError);

    HRep ub;
    ub.dim = 2;
    ub.inequalities.push_back(LinRow{{Rat(-1), Rat(0)}, Rat(0)});
    ub.inequalities.push_back(LinRow{{Rat(0), Rat(-1)}, Rat(0)});
    CHECK_THROWS_AS(h_to_v(ub), UnboundedError);
    GenSet g = h_to_generators(ub);
    CHECK(g.points.size() == 1);
    CHECK(g.rays.size() == 2);
    CHECK(g.lines.empty());

    HRep slab;  // 0 <= x1 <= 1, x2 free
    slab.dim = 2;
    slab.inequalities.push_back(LinRow{{Rat(-1), Rat(0)}, Rat(0)});
    slab.inequalities.push_back(LinRow{{Rat(1), Rat(0)}, Rat(1)});
    GenSet gs = h_to_generators(slab);
    CHECK(gs.lines.size() == 1);
    CHECK(gs.rays.empty());
    VRep vv = h_to_v(slab);  // lineality-only unboundedness is representable
    CHECK(vv.lineality.size() == 1);
}

TEST_CASE("roundtrip property: h_to_v(v_to_h(P)) == P for random vertex sets") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int dim = 2 + static_cast<int>(rng.below(3));
        int npts = 3 + static_cast<int>(rng.below(8));
        VRep p = random_vrep(rng, dim, npts);
        HRep h = v_to_h(p);
        for (const auto& vert : p.vertices) CHECK(h.satisfied_by(vert));
        VRep back = h_to_v(h);
        // vertex set of back must be a subset of p's points, and conv equal
        for (const auto& vert : back.vertices)
            CHECK(std::find(p.vertices.begin(), p.vertices.end(), vert) != p.vertices.end());
        CHECK(contains(h, back));
        CHECK(contains(v_to_h(back), p));
    }
}

TEST_CASE("roundtrip exact vertex recovery on full-dimensional polytopes") {
    // all vertices extreme by construction: 0/1 cube corners
    VRep cube = make_vrep(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                              {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    VRep back = h_to_v(v_to_h(cube));
    cube.normalize();
    CHECK(back.vertices == cube.vertices);
}

TEST_CASE("project: boxes and substitution") {
    HRep box3;
    box3.dim = 3;
    box3.inequalities = Box::unit(3).rows();
    HRep p = project(box3, {0, 1});
    HRep box2;
    box2.dim = 2;
    box2.inequalities = Box::unit(2).rows();
    box2.normalize();
    CHECK(equal_sets(p, box2));
    CHECK(p.inequalities.size() == 4);

    // {x1+x2<=1, x2=x3, x in [0,1]^3} onto {0,2} -> {x1+x3<=1, x in [0,1]^2}
    HRep h;
    h.dim = 3;
    h.inequalities = Box::unit(3).rows();
    h.inequalities.push_back(LinRow{{Rat(1), Rat(1), Rat(0)}, Rat(1)});
    h.equations.push_back(LinRow{{Rat(0), Rat(1), Rat(-1)}, Rat(0)});
    HRep q = project(h, {0, 2});
    HRep expect;
    expect.dim = 2;
    expect.inequalities = Box::unit(2).rows();
    expect.inequalities.push_back(LinRow{{Rat(1), Rat(1)}, Rat(1)});
    CHECK(equal_sets(q, expect));
    CHECK(q.inequalities.size() == 3);  // irredundant: x<=1 rows implied
}

TEST_CASE("project is idempotent over nested keeps") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        VRep p = random_vrep(rng, 4, 6);
        HRep h = v_to_h(p);
        HRep a = project(h, {0, 1, 2});
        HRep b = project(a, {0, 1});
        HRep c = project(h, {0, 1});
        CHECK(equal_sets(b, c));
    }
}

TEST_CASE("member / contains / equal_sets") {
    HRep sq;
    sq.dim = 2;
    sq.inequalities = Box::unit(2).rows();
    CHECK(member(sq, RatVec{Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(member(sq, RatVec{Rat(3, 2), Rat(0)}));

    VRep square = h_to_v(sq);
    CHECK_FALSE(contains(simplex_h(2), square));
    CHECK(contains(sq, h_to_v(simplex_h(2))));
    CHECK_FALSE(equal_sets(sq, simplex_h(2)));
    CHECK(equal_sets(sq, sq));
    CHECK_THROWS_AS(member(sq, RatVec{Rat(0)}), std::invalid_argument);
}

TEST_CASE("reduce: redundant rows and implicit equalities") {
    HRep h;
    h.dim = 2;
    h.inequalities = Box::unit(2).rows();
    h.inequalities.push_back(LinRow{{Rat(1), Rat(1)}, Rat(5)});   // redundant
    h.inequalities.push_back(LinRow{{Rat(2), Rat(2)}, Rat(10)});  // duplicate of above
    HRep r = reduce(h);
    CHECK(r.inequalities.size() == 4);
    CHECK(r.equations.empty());

    HRep e;
    e.dim = 2;
    e.inequalities.push_back(LinRow{{Rat(1), Rat(1)}, Rat(1)});
    e.inequalities.push_back(LinRow{{Rat(-1), Rat(-1)}, Rat(-1)});  // together: x1+x2 == 1
    e.inequalities.push_back(LinRow{{Rat(-1), Rat(0)}, Rat(0)});
    e.inequalities.push_back(LinRow{{Rat(1), Rat(0)}, Rat(1)});
    HRep re = reduce(e);
    CHECK(re.equations.size() == 1);
    CHECK(re.inequalities.size() == 2);

    HRep bad;
    bad.dim = 1;
    bad.inequalities.push_back(LinRow{{Rat(1)}, Rat(-1)});
    bad.inequalities.push_back(LinRow{{Rat(-1)}, Rat(0)});
    CHECK(reduce(bad).infeasible);
}

TEST_CASE("rank and rref") {
    CHECK(rank_of({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}) == 2);
    CHECK(rank_of({{Rat(2), Rat(4)}, {Rat(1), Rat(2)}}) == 1);
    std::vector<LinRow> eqs = {LinRow{{Rat(1), Rat(1), Rat(0)}, Rat(2)},
                               LinRow{{Rat(1), Rat(0), Rat(1)}, Rat(3)}};
    auto piv = rref(eqs);
    CHECK(piv == std::vector<int>{0, 1});
    LinRow row{{Rat(1), Rat(1), Rat(1)}, Rat(0)};
    reduce_row_mod_eqs(row, eqs, piv);
    CHECK(row.a[0] == 0);
    CHECK(row.a[1] == 0);
}
