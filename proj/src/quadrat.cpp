#include "sparsecuts/quadrat.hpp"

namespace sparsecuts {

Int quad_floor(const QuadRat& x) {
    // Guess from the double value, then pin down exactly by bisection.
    double d = x.to_double();
    Int guess = 0;
    if (std::isfinite(d)) guess = Int(static_cast<long long>(std::floor(d)));
    auto less_than = [&](const Int& c) { return (x - Rat(c)).sign() < 0; };  // x < c
    Int lo = guess, step = 1;
    while (less_than(lo)) {
        lo -= step;
        step *= 2;
    }
    Int hi = lo + 1;
    step = 1;
    while (!less_than(hi)) {
        hi += step;
        step *= 2;
    }
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        if (less_than(mid))
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace sparsecuts
