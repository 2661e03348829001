#include "sparsecuts/quadrat.hpp"
#include "sparsecuts/rational.hpp"
#include "sparsecuts/rng.hpp"

#include <doctest.h>

using namespace sparsecuts;

TEST_CASE("parse and print rationals") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4/2") == Rat(-2));
    CHECK(rat_str(parse_rat("10/4")) == "5/2");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("vector helpers") {
    RatVec a{Rat(1), Rat(-2), Rat(0)};
    RatVec b{Rat(3), Rat(1, 2), Rat(5)};
    CHECK(dot(a, b) == Rat(2));
    CHECK(norm_sq(a) == Rat(5));
    CHECK(norm_one(a) == Rat(3));
    CHECK(max_abs(a) == Rat(2));
    CHECK(support(a) == std::vector<int>{0, 1});
    CHECK(lex_cmp(a, b) < 0);
    CHECK(primitive_scale_factor(RatVec{Rat(1, 2), Rat(3, 4)}) == Rat(4));
    CHECK(primitive_scale_factor(RatVec{Rat(4), Rat(6)}) == Rat(1, 2));
}

TEST_CASE("quadratic rationals: arithmetic and exact sign") {
    // sqrt(2): 1 + 1*sqrt(2) > 0, 1 - 1*sqrt(2) < 0
    QuadRat x(Rat(1), Rat(1), Rat(2));
    QuadRat y(Rat(1), Rat(-1), Rat(2));
    CHECK(x.sign() == 1);
    CHECK(y.sign() == -1);
    CHECK((x * y).sign() == -1);             // (1+r)(1-r) = 1 - 2 = -1
    CHECK((x * y) == QuadRat::rational(Rat(-1)));
    CHECK((x + y) == QuadRat::rational(Rat(2)));
    // 3/2 vs sqrt(2): 3/2 > sqrt(2) since 9/4 > 2
    CHECK(QuadRat(Rat(3, 2), Rat(-1), Rat(2)).sign() == 1);
    // 7/5 < sqrt(2)
    CHECK(QuadRat(Rat(7, 5), Rat(-1), Rat(2)).sign() == -1);
    // exact zero: sqrt(4) == 2
    CHECK(QuadRat(Rat(-2), Rat(1), Rat(4)).sign() == 0);
    CHECK_THROWS_AS(QuadRat(Rat(0), Rat(1), Rat(2)) + QuadRat(Rat(0), Rat(1), Rat(3)),
                    std::invalid_argument);
}

TEST_CASE("quad_floor") {
    CHECK(quad_floor(QuadRat(Rat(0), Rat(1), Rat(2))) == 1);       // floor(sqrt 2)
    CHECK(quad_floor(QuadRat(Rat(0), Rat(-1), Rat(2))) == -2);     // floor(-sqrt 2)
    CHECK(quad_floor(QuadRat(Rat(5, 2), Rat(0), Rat(0))) == 2);
    CHECK(quad_floor(QuadRat(Rat(-5, 2), Rat(0), Rat(0))) == -3);
    CHECK(quad_floor(QuadRat(Rat(0), Rat(3), Rat(4))) == 6);       // exactly 6
    CHECK(quad_floor(QuadRat(Rat(10), Rat(7), Rat(9))) == 31);     // 10 + 21
}

TEST_CASE("rng determinism and bounds") {
    Rng r1(42), r2(42);
    for (int i = 0; i < 100; ++i) CHECK(r1.next_u64() == r2.next_u64());
    Rng r3 = Rng(42).derive("foo");
    Rng r4 = Rng(42).derive("bar");
    CHECK(r3.next_u64() != r4.next_u64());
    Rng r(7);
    for (int i = 0; i < 1000; ++i) {
        auto v = r.uniform_int(-5, 5);
        CHECK(v >= -5);
        CHECK(v <= 5);
    }
}
