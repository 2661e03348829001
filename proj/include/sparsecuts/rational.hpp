#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparsecuts {

// All geometry in this library is exact. Rat is an arbitrary-precision
// rational kept in lowest terms with positive denominator (GMP canonical
// form); Int is its integer counterpart.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;

inline int sgn(const Rat& x) { return x.sign(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Parse "num", "-num" or "num/den" (base 10). Rejects zero denominators.
Rat parse_rat(const std::string& s);

/// Canonical string form: "num" when den == 1, else "num/den".
inline std::string rat_str(const Rat& x) { return x.str(); }

inline double rat_double(const Rat& x) { return x.convert_to<double>(); }

// ---- dense vector helpers ----

Rat dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scaled(const RatVec& a, const Rat& s);
Rat norm_sq(const RatVec& a);
Rat norm_one(const RatVec& a);
Rat max_abs(const RatVec& a);
bool is_zero_vec(const RatVec& a);

/// Indices of nonzero entries, ascending.
std::vector<int> support(const RatVec& a);

/// Three-way lexicographic comparison (-1, 0, +1); shorter vectors first on ties.
int lex_cmp(const RatVec& a, const RatVec& b);

RatVec zero_vec(int dim);
RatVec unit_vec(int dim, int i);
RatVec ones_vec(int dim);

/// Smallest positive s with s*a integral; multiplying by it and dividing by the
/// entry gcd yields the primitive integer form of a. Returns 1 for a == 0.
Rat primitive_scale_factor(const RatVec& a);

}  // namespace sparsecuts
