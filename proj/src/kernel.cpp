#include "sparsecuts/kernel.hpp"

#include "sparsecuts/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace sparsecuts {

namespace {

void scale_ray_primitive(RatVec& r) {
    Rat s = primitive_scale_factor(r);
    if (s != 1) r = vec_scaled(r, s);
}

void scale_line_canonical(RatVec& l) {
    LinRow tmp{l, Rat(0)};
    canonicalize_eq(tmp);
    l = std::move(tmp.a);
}

bool vec_lex_less(const RatVec& a, const RatVec& b) { return lex_cmp(a, b) < 0; }

using Bits = std::vector<std::uint64_t>;

void bits_set(Bits& b, std::size_t i) {
    std::size_t w = i / 64;
    if (w >= b.size()) b.resize(w + 1, 0);
    b[w] |= (std::uint64_t{1} << (i % 64));
}

Bits bits_and(const Bits& x, const Bits& y) {
    Bits out(std::min(x.size(), y.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] & y[i];
    return out;
}

int bits_count(const Bits& b) {
    int c = 0;
    for (auto w : b) c += __builtin_popcountll(w);
    return c;
}

struct DDRay {
    RatVec v;
    Bits tight;
};

class DDState {
  public:
    DDState(int dim, std::size_t max_rays) : dim_(dim), max_rays_(max_rays) {
        for (int i = 0; i < dim; ++i) lines_.push_back(unit_vec(dim, i));
    }

    void insert(const RatVec& row, bool is_equation) {
        // lineality pivot: the cheap case, no ray combinations needed
        int pivot = -1;
        RatVec sb(lines_.size());
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            sb[i] = dot(row, lines_[i]);
            if (pivot < 0 && sb[i] != 0) pivot = static_cast<int>(i);
        }
        if (pivot >= 0) {
            RatVec b0 = lines_[static_cast<std::size_t>(pivot)];
            Rat sp = sb[static_cast<std::size_t>(pivot)];
            if (!is_equation && sp < 0) {
                b0 = vec_scaled(b0, Rat(-1));
                sp = -sp;
            }
            std::vector<RatVec> nl;
            for (std::size_t i = 0; i < lines_.size(); ++i) {
                if (static_cast<int>(i) == pivot) continue;
                RatVec w = sb[i] == 0 ? lines_[i] : vec_sub(lines_[i], vec_scaled(b0, sb[i] / sp));
                scale_line_canonical(w);
                nl.push_back(std::move(w));
            }
            lines_ = std::move(nl);
            for (auto& r : rays_) {
                Rat sr = dot(row, r.v);
                if (sr != 0) {
                    r.v = vec_sub(r.v, vec_scaled(b0, sr / sp));
                    scale_ray_primitive(r.v);
                }
                bits_set(r.tight, processed_.size());
            }
            if (!is_equation) {
                DDRay nr;
                nr.v = std::move(b0);
                scale_ray_primitive(nr.v);
                for (std::size_t j = 0; j < processed_.size(); ++j) bits_set(nr.tight, j);
                rays_.push_back(std::move(nr));
            }
            processed_.push_back(row);
            check_budget();
            return;
        }

        // row is orthogonal to the lineality space: split the rays
        std::vector<int> pos, neg, zero;
        RatVec val(rays_.size());
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            val[i] = dot(row, rays_[i].v);
            int s = sgn(val[i]);
            if (s > 0)
                pos.push_back(static_cast<int>(i));
            else if (s < 0)
                neg.push_back(static_cast<int>(i));
            else
                zero.push_back(static_cast<int>(i));
        }
        const bool cuts = is_equation ? !pos.empty() || !neg.empty() : !neg.empty();
        if (!cuts) {
            for (std::size_t i = 0; i < rays_.size(); ++i)
                if (val[i] == 0) bits_set(rays_[i].tight, processed_.size());
            processed_.push_back(row);
            return;
        }

        const int needed_rank = dim_ - static_cast<int>(lines_.size()) - 2;
        std::vector<DDRay> next;
        auto keep_side = [&](const std::vector<int>& side, bool mark_tight) {
            for (int i : side) {
                DDRay r = rays_[static_cast<std::size_t>(i)];
                if (mark_tight) bits_set(r.tight, processed_.size());
                next.push_back(std::move(r));
            }
        };
        keep_side(zero, true);
        if (!is_equation) keep_side(pos, false);

        for (int ip : pos) {
            for (int in : neg) {
                const DDRay& rp = rays_[static_cast<std::size_t>(ip)];
                const DDRay& rn = rays_[static_cast<std::size_t>(in)];
                Bits common = bits_and(rp.tight, rn.tight);
                if (bits_count(common) < needed_rank) continue;
                if (!adjacent(common, needed_rank)) continue;
                // positive combination vanishing on the new row
                RatVec w = vec_sub(vec_scaled(rn.v, val[static_cast<std::size_t>(ip)]),
                                   vec_scaled(rp.v, val[static_cast<std::size_t>(in)]));
                scale_ray_primitive(w);
                DDRay nr;
                nr.v = std::move(w);
                nr.tight = std::move(common);
                bits_set(nr.tight, processed_.size());
                next.push_back(std::move(nr));
                if (max_rays_ && next.size() > max_rays_)
                    throw BudgetExceeded("double description ray budget exceeded");
            }
        }
        rays_ = std::move(next);
        processed_.push_back(row);
        check_budget();
    }

    ConeDD finish() {
        ConeDD out;
        for (auto& l : lines_) out.lines.push_back(std::move(l));
        for (auto& r : rays_) out.rays.push_back(std::move(r.v));
        std::sort(out.lines.begin(), out.lines.end(), vec_lex_less);
        std::sort(out.rays.begin(), out.rays.end(), vec_lex_less);
        return out;
    }

  private:
    void check_budget() const {
        if (max_rays_ && rays_.size() > max_rays_) throw BudgetExceeded("double description ray budget exceeded");
    }

    bool adjacent(const Bits& common, int needed_rank) const {
        if (needed_rank < 0) return true;
        std::vector<RatVec> rows;
        for (std::size_t j = 0; j < processed_.size(); ++j) {
            std::size_t w = j / 64;
            if (w < common.size() && (common[w] >> (j % 64)) & 1) rows.push_back(processed_[j]);
        }
        return rank_of(std::move(rows)) == needed_rank;
    }

    int dim_;
    std::size_t max_rays_;
    std::vector<RatVec> lines_;
    std::vector<DDRay> rays_;
    std::vector<RatVec> processed_;
};

}  // namespace

ConeDD dd_cone(int dim, const std::vector<RatVec>& eq_rows, const std::vector<RatVec>& ineq_rows,
               std::size_t max_rays) {
    DDState st(dim, max_rays);
    for (const auto& e : eq_rows) st.insert(e, true);
    for (const auto& r : ineq_rows) st.insert(r, false);
    return st.finish();
}

int rank_of(std::vector<RatVec> rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows.size(); ++c) {
        std::size_t piv = rr;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rr], rows[piv]);
        for (std::size_t r2 = rr + 1; r2 < rows.size(); ++r2) {
            if (rows[r2][c] == 0) continue;
            Rat f = rows[r2][c] / rows[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc) rows[r2][cc] -= f * rows[rr][cc];
        }
        ++rr;
        ++rank;
    }
    return rank;
}

std::vector<int> rref(std::vector<LinRow>& eqs) {
    std::vector<int> pivots;
    if (eqs.empty()) return pivots;
    const std::size_t cols = eqs[0].a.size();
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < eqs.size(); ++c) {
        std::size_t piv = rr;
        while (piv < eqs.size() && eqs[piv].a[c] == 0) ++piv;
        if (piv == eqs.size()) continue;
        std::swap(eqs[rr], eqs[piv]);
        Rat d = eqs[rr].a[c];
        for (auto& x : eqs[rr].a) x /= d;
        eqs[rr].b /= d;
        for (std::size_t r2 = 0; r2 < eqs.size(); ++r2) {
            if (r2 == rr || eqs[r2].a[c] == 0) continue;
            Rat f = eqs[r2].a[c];
            for (std::size_t cc = 0; cc < cols; ++cc) eqs[r2].a[cc] -= f * eqs[rr].a[cc];
            eqs[r2].b -= f * eqs[rr].b;
        }
        pivots.push_back(static_cast<int>(c));
        ++rr;
    }
    // drop zero rows, flag 0 == b as {0, 1}
    std::vector<LinRow> kept;
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        if (is_zero_vec(eqs[r].a)) {
            if (eqs[r].b != 0) kept.push_back(LinRow{zero_vec(static_cast<int>(cols)), Rat(1)});
        } else {
            kept.push_back(std::move(eqs[r]));
        }
    }
    eqs = std::move(kept);
    return pivots;
}

void reduce_row_mod_eqs(LinRow& row, const std::vector<LinRow>& rref_eqs, const std::vector<int>& pivots) {
    for (std::size_t i = 0; i < rref_eqs.size() && i < pivots.size(); ++i) {
        std::size_t c = static_cast<std::size_t>(pivots[i]);
        if (row.a[c] == 0) continue;
        Rat f = row.a[c] / rref_eqs[i].a[c];
        row.a = vec_sub(row.a, vec_scaled(rref_eqs[i].a, f));
        row.b -= f * rref_eqs[i].b;
    }
}

HRep v_to_h(const VRep& p) {
    VRep q = p;
    q.validate();
    q.normalize();
    const int n = q.dim;
    std::vector<RatVec> ineq_rows, eq_rows;
    for (const auto& v : q.vertices) {
        RatVec row(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = -v[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(n)] = 1;  // b - a*v >= 0
        ineq_rows.push_back(std::move(row));
    }
    for (const auto& l : q.lineality) {
        RatVec row = l;
        row.push_back(Rat(0));  // a*l == 0
        eq_rows.push_back(std::move(row));
    }
    std::sort(eq_rows.begin(), eq_rows.end(), vec_lex_less);
    std::sort(ineq_rows.begin(), ineq_rows.end(), vec_lex_less);
    ConeDD cone = dd_cone(n + 1, eq_rows, ineq_rows);

    HRep h;
    h.dim = n;
    for (const auto& l : cone.lines) {
        LinRow e;
        e.a.assign(l.begin(), l.end() - 1);
        e.b = l.back();
        h.equations.push_back(std::move(e));
    }
    std::vector<int> pivots = rref(h.equations);
    for (auto& e : h.equations) canonicalize_eq(e);
    for (const auto& r : cone.rays) {
        LinRow f;
        f.a.assign(r.begin(), r.end() - 1);
        f.b = r.back();
        reduce_row_mod_eqs(f, h.equations, pivots);
        if (is_zero_vec(f.a)) continue;  // the trivial 0 <= b class
        canonicalize_ineq(f);
        h.inequalities.push_back(std::move(f));
    }
    std::sort(h.inequalities.begin(), h.inequalities.end(), row_less);
    h.inequalities.erase(std::unique(h.inequalities.begin(), h.inequalities.end()), h.inequalities.end());
    std::sort(h.equations.begin(), h.equations.end(), row_less);
    return h;
}

GenSet h_to_generators(const HRep& h, std::size_t max_rays) {
    HRep g = h;
    g.validate();
    g.normalize();
    GenSet out;
    out.dim = g.dim;
    if (g.infeasible) return out;
    const int n = g.dim;
    std::vector<RatVec> ineq_rows, eq_rows;
    auto homog = [n](const LinRow& r) {
        RatVec row(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = -r.a[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(n)] = r.b;  // b*t - a*x >= 0
        return row;
    };
    for (const auto& r : g.inequalities) ineq_rows.push_back(homog(r));
    for (const auto& r : g.equations) eq_rows.push_back(homog(r));
    RatVec trow = zero_vec(n + 1);
    trow[static_cast<std::size_t>(n)] = 1;
    ineq_rows.push_back(std::move(trow));  // t >= 0
    std::sort(eq_rows.begin(), eq_rows.end(), vec_lex_less);
    std::sort(ineq_rows.begin(), ineq_rows.end(), vec_lex_less);
    ConeDD cone = dd_cone(n + 1, eq_rows, ineq_rows, max_rays);

    for (const auto& l : cone.lines) {
        RatVec x(l.begin(), l.end() - 1);
        out.lines.push_back(std::move(x));  // t-component is 0 by construction
    }
    for (const auto& r : cone.rays) {
        const Rat& t = r.back();
        RatVec x(r.begin(), r.end() - 1);
        if (t == 0) {
            out.rays.push_back(std::move(x));
        } else {
            out.points.push_back(vec_scaled(x, Rat(1) / t));
        }
    }
    std::sort(out.points.begin(), out.points.end(), vec_lex_less);
    std::sort(out.rays.begin(), out.rays.end(), vec_lex_less);
    std::sort(out.lines.begin(), out.lines.end(), vec_lex_less);
    return out;
}

VRep h_to_v(const HRep& h, std::size_t max_rays) {
    GenSet g = h_to_generators(h, max_rays);
    if (g.empty()) throw InfeasibleError("h_to_v: system is infeasible");
    if (!g.rays.empty())
        throw UnboundedError("h_to_v: polyhedron has " + std::to_string(g.rays.size()) +
                             " recession ray(s) beyond its lineality space");
    VRep v;
    v.dim = g.dim;
    v.vertices = std::move(g.points);
    v.lineality = std::move(g.lines);
    return v;
}

namespace {

/// Remove LP-redundant inequalities in place; assumes h is feasible.
void lp_drop_redundant(HRep& h) {
    for (std::size_t i = 0; i < h.inequalities.size();) {
        HRep rest = h;
        rest.inequalities.erase(rest.inequalities.begin() + static_cast<std::ptrdiff_t>(i));
        LpResult r = maximize(h.inequalities[i].a, rest);
        if (r.status == LpStatus::Optimal && r.value <= h.inequalities[i].b) {
            h.inequalities.erase(h.inequalities.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
}

}  // namespace

HRep reduce(const HRep& hin) {
    HRep h = hin;
    h.validate();
    h.normalize();
    if (h.infeasible) return HRep::canonical_infeasible(h.dim);
    if (!lp_feasible(h)) return HRep::canonical_infeasible(h.dim);

    // promote implicit equalities
    std::vector<LinRow> ineqs, eqs = h.equations;
    for (const auto& r : h.inequalities) {
        LpResult lo = minimize(r.a, h);
        if (lo.status == LpStatus::Optimal && lo.value == r.b)
            eqs.push_back(r);
        else
            ineqs.push_back(r);
    }
    std::vector<int> pivots = rref(eqs);
    for (auto& e : eqs) {
        if (is_zero_vec(e.a) && e.b != 0) return HRep::canonical_infeasible(h.dim);
        canonicalize_eq(e);
    }
    HRep out;
    out.dim = h.dim;
    out.equations = eqs;
    for (auto& r : ineqs) {
        reduce_row_mod_eqs(r, eqs, pivots);
        if (is_zero_vec(r.a)) continue;
        canonicalize_ineq(r);
        out.inequalities.push_back(std::move(r));
    }
    out.normalize();
    lp_drop_redundant(out);
    std::sort(out.inequalities.begin(), out.inequalities.end(), row_less);
    std::sort(out.equations.begin(), out.equations.end(), row_less);
    return out;
}

HRep project(const HRep& hin, const std::vector<int>& keep) {
    HRep h = hin;
    h.validate();
    std::vector<int> k = keep;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (k.empty()) throw std::invalid_argument("project: empty keep set");
    for (int c : k)
        if (c < 0 || c >= h.dim) throw std::invalid_argument("project: keep index out of range");

    auto restrict_cols = [&](const HRep& src) {
        HRep out;
        out.dim = static_cast<int>(k.size());
        out.infeasible = src.infeasible;
        auto shrink = [&](const LinRow& r) {
            LinRow s;
            for (int c : k) s.a.push_back(r.a[static_cast<std::size_t>(c)]);
            s.b = r.b;
            return s;
        };
        for (const auto& r : src.inequalities) out.inequalities.push_back(shrink(r));
        for (const auto& r : src.equations) out.equations.push_back(shrink(r));
        return out;
    };

    h.normalize();
    if (h.infeasible) return HRep::canonical_infeasible(static_cast<int>(k.size()));

    std::vector<int> elim;
    for (int c = 0; c < h.dim; ++c)
        if (!std::binary_search(k.begin(), k.end(), c)) elim.push_back(c);

    while (!elim.empty()) {
        // prefer a variable with an equation (cheap substitution), else the
        // variable with the fewest pairwise products
        int var = -1;
        std::size_t eq_idx = 0;
        for (int c : elim) {
            bool used = false;
            for (std::size_t e = 0; e < h.equations.size(); ++e) {
                if (h.equations[e].a[static_cast<std::size_t>(c)] != 0) {
                    var = c;
                    eq_idx = e;
                    used = true;
                    break;
                }
            }
            if (used) break;
        }
        if (var >= 0) {
            LinRow eq = h.equations[eq_idx];
            h.equations.erase(h.equations.begin() + static_cast<std::ptrdiff_t>(eq_idx));
            const Rat& piv = eq.a[static_cast<std::size_t>(var)];
            auto subst = [&](LinRow& r) {
                const Rat& c0 = r.a[static_cast<std::size_t>(var)];
                if (c0 == 0) return;
                Rat f = c0 / piv;
                r.a = vec_sub(r.a, vec_scaled(eq.a, f));
                r.b -= f * eq.b;
            };
            for (auto& r : h.inequalities) subst(r);
            for (auto& r : h.equations) subst(r);
        } else {
            // Fourier-Motzkin on the variable with the fewest products
            long best_cost = -1;
            for (int c : elim) {
                bool already = true;
                long pos = 0, neg = 0;
                for (const auto& r : h.inequalities) {
                    int s = sgn(r.a[static_cast<std::size_t>(c)]);
                    if (s > 0) ++pos;
                    if (s < 0) ++neg;
                    if (s != 0) already = false;
                }
                if (already) continue;  // handled implicitly; skip for now
                long cost = pos * neg;
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    var = c;
                }
            }
            if (var < 0) break;  // nothing left mentions any eliminated variable
            std::vector<LinRow> zero, pos, neg;
            for (auto& r : h.inequalities) {
                int s = sgn(r.a[static_cast<std::size_t>(var)]);
                if (s > 0)
                    pos.push_back(std::move(r));
                else if (s < 0)
                    neg.push_back(std::move(r));
                else
                    zero.push_back(std::move(r));
            }
            for (const auto& rp : pos) {
                for (const auto& rn : neg) {
                    const Rat& cp = rp.a[static_cast<std::size_t>(var)];
                    const Rat& cn = rn.a[static_cast<std::size_t>(var)];
                    LinRow w;
                    w.a = vec_sub(vec_scaled(rn.a, cp), vec_scaled(rp.a, cn));
                    w.b = cp * rn.b - cn * rp.b;
                    zero.push_back(std::move(w));
                }
            }
            h.inequalities = std::move(zero);
        }
        elim.erase(std::find(elim.begin(), elim.end(), var));
        h.normalize();
        if (h.infeasible) return HRep::canonical_infeasible(static_cast<int>(k.size()));
        lp_drop_redundant(h);
    }

    return reduce(restrict_cols(h));
}

bool member(const HRep& h, const RatVec& x) { return h.satisfied_by(x); }

bool contains(const HRep& h, const VRep& v) {
    GenSet g;
    g.dim = v.dim;
    g.points = v.vertices;
    g.lines = v.lineality;
    return contains_gen(h, g);
}

bool contains_gen(const HRep& h, const GenSet& g) {
    if (h.dim != g.dim) throw std::invalid_argument("contains: dimension mismatch");
    if (h.infeasible) return g.empty();
    for (const auto& p : g.points)
        if (!h.satisfied_by(p)) return false;
    for (const auto& r : g.rays) {
        for (const auto& q : h.inequalities)
            if (dot(q.a, r) > 0) return false;
        for (const auto& q : h.equations)
            if (dot(q.a, r) != 0) return false;
    }
    for (const auto& l : g.lines) {
        for (const auto& q : h.inequalities)
            if (dot(q.a, l) != 0) return false;
        for (const auto& q : h.equations)
            if (dot(q.a, l) != 0) return false;
    }
    return true;
}

bool equal_sets(const HRep& a, const HRep& b) {
    if (a.dim != b.dim) throw std::invalid_argument("equal_sets: dimension mismatch");
    GenSet ga = h_to_generators(a), gb = h_to_generators(b);
    if (ga.empty() || gb.empty()) return ga.empty() == gb.empty();
    return contains_gen(a, gb) && contains_gen(b, ga);
}

}  // namespace sparsecuts
