#include "sparsecuts/rational.hpp"

#include <cctype>

namespace sparsecuts {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!check_int(s)) throw std::invalid_argument("bad rational literal: " + s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den)) throw std::invalid_argument("bad rational literal: " + s);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(Int(num), d);
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scaled(const RatVec& a, const Rat& s) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Rat norm_sq(const RatVec& a) {
    Rat s = 0;
    for (const Rat& x : a) s += x * x;
    return s;
}

Rat norm_one(const RatVec& a) {
    Rat s = 0;
    for (const Rat& x : a) s += rat_abs(x);
    return s;
}

Rat max_abs(const RatVec& a) {
    Rat m = 0;
    for (const Rat& x : a) {
        Rat v = rat_abs(x);
        if (v > m) m = v;
    }
    return m;
}

bool is_zero_vec(const RatVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

std::vector<int> support(const RatVec& a) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) idx.push_back(static_cast<int>(i));
    return idx;
}

int lex_cmp(const RatVec& a, const RatVec& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

RatVec zero_vec(int dim) { return RatVec(static_cast<std::size_t>(dim), Rat(0)); }

RatVec unit_vec(int dim, int i) {
    RatVec v = zero_vec(dim);
    v.at(static_cast<std::size_t>(i)) = 1;
    return v;
}

RatVec ones_vec(int dim) { return RatVec(static_cast<std::size_t>(dim), Rat(1)); }

Rat primitive_scale_factor(const RatVec& a) {
    Int l = 1;
    for (const Rat& x : a)
        if (x != 0) l = lcm(l, denominator(x));
    Int g = 0;
    for (const Rat& x : a)
        if (x != 0) g = gcd(g, Int(numerator(x) * (l / denominator(x))));
    if (g == 0) return Rat(1);
    return Rat(l, g);
}

}  // namespace sparsecuts
