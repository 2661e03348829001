#include "sparsecuts/lp.hpp"

#include <algorithm>

namespace sparsecuts {

namespace {

// Dense tableau simplex. Columns: structural variables (all >= 0), then one
// artificial per row that needs one, then the right-hand side.
class Tableau {
  public:
    Tableau(std::vector<RatVec> rows, RatVec rhs) : body_(std::move(rows)), rhs_(std::move(rhs)) {
        m_ = static_cast<int>(body_.size());
        n_struct_ = m_ ? static_cast<int>(body_[0].size()) : 0;
        // normalize rhs >= 0
        flipped_.assign(static_cast<std::size_t>(m_), false);
        for (int r = 0; r < m_; ++r) {
            if (rhs_[idx(r)] < 0) {
                flipped_[idx(r)] = true;
                rhs_[idx(r)] = -rhs_[idx(r)];
                for (auto& v : body_[idx(r)]) v = -v;
            }
        }
    }

    int struct_cols() const { return n_struct_; }
    bool row_flipped(int r) const { return flipped_[idx(r)]; }

    // Give row r a starting basic column. If col >= 0 and usable (unit in this
    // row post-flip), use it, else append an artificial.
    void seed_basis(const std::vector<int>& candidate_cols) {
        basic_.assign(static_cast<std::size_t>(m_), -1);
        art_col_.assign(static_cast<std::size_t>(m_), -1);
        int extra = 0;
        for (int r = 0; r < m_; ++r) {
            int c = candidate_cols[idx(r)];
            if (c >= 0 && !flipped_[idx(r)] && body_[idx(r)][idx(c)] == 1) {
                basic_[idx(r)] = c;
            } else {
                art_col_[idx(r)] = n_struct_ + extra;
                basic_[idx(r)] = n_struct_ + extra;
                ++extra;
            }
        }
        n_art_ = extra;
        for (int r = 0; r < m_; ++r) {
            body_[idx(r)].resize(static_cast<std::size_t>(n_struct_ + n_art_), Rat(0));
            if (art_col_[idx(r)] >= 0) body_[idx(r)][idx(art_col_[idx(r)])] = 1;
        }
        cols_ = n_struct_ + n_art_;
    }

    bool has_artificials() const { return n_art_ > 0; }

    // Maximize c (length == cols_, artificials included). Returns false when
    // unbounded. Bland's rule: entering = lowest eligible column index,
    // leaving = lowest basic variable among minimum ratios.
    bool run(const RatVec& c, bool ban_artificials) {
        compute_obj(c);
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (ban_artificials && j >= n_struct_) break;
                if (obj_[idx(j)] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int r = 0; r < m_; ++r) {
                const Rat& p = body_[idx(r)][idx(enter)];
                if (p <= 0) continue;
                Rat ratio = rhs_[idx(r)] / p;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basic_[idx(r)] < basic_[idx(leave)])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    // Drive basic artificials out after phase 1; drops redundant rows.
    void purge_artificials() {
        std::vector<int> keep;
        for (int r = 0; r < m_; ++r) {
            if (basic_[idx(r)] < n_struct_) {
                keep.push_back(r);
                continue;
            }
            int piv = -1;
            for (int j = 0; j < n_struct_; ++j) {
                if (body_[idx(r)][idx(j)] != 0) {
                    piv = j;
                    break;
                }
            }
            if (piv >= 0) {
                pivot(r, piv);
                keep.push_back(r);
            }
            // else: row is 0 == 0, drop it
        }
        if (static_cast<int>(keep.size()) != m_) {
            std::vector<RatVec> nb;
            RatVec nr;
            std::vector<int> nbasic;
            std::vector<bool> nflip;
            std::vector<int> nart;
            std::vector<int> norig;
            for (int r : keep) {
                nb.push_back(std::move(body_[idx(r)]));
                nr.push_back(rhs_[idx(r)]);
                nbasic.push_back(basic_[idx(r)]);
                nflip.push_back(flipped_[idx(r)]);
                nart.push_back(art_col_[idx(r)]);
                norig.push_back(orig_row_.empty() ? r : orig_row_[idx(r)]);
            }
            body_ = std::move(nb);
            rhs_ = std::move(nr);
            basic_ = std::move(nbasic);
            flipped_ = nflip;
            art_col_ = nart;
            orig_row_ = norig;
            m_ = static_cast<int>(body_.size());
        }
    }

    void remember_rows() {
        orig_row_.resize(static_cast<std::size_t>(m_));
        for (int r = 0; r < m_; ++r) orig_row_[idx(r)] = r;
    }

    Rat objective_value() const { return obj_value_; }

    /// Value of structural column j in the current basic solution.
    RatVec solution() const {
        RatVec x(static_cast<std::size_t>(n_struct_), Rat(0));
        for (int r = 0; r < m_; ++r)
            if (basic_[idx(r)] < n_struct_) x[idx(basic_[idx(r)])] = rhs_[idx(r)];
        return x;
    }

    /// Reduced cost of column j at the current basis (c_j - z_j).
    const Rat& reduced_cost(int j) const { return obj_[idx(j)]; }

    int artificial_of(int orig_row) const {
        for (int r = 0; r < m_; ++r)
            if (orig_of(r) == orig_row) return art_col_[idx(r)];
        return -1;
    }
    bool row_alive(int orig_row) const {
        for (int r = 0; r < m_; ++r)
            if (orig_of(r) == orig_row) return true;
        return false;
    }

  private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
    int orig_of(int r) const { return orig_row_.empty() ? r : orig_row_[idx(r)]; }

    void compute_obj(const RatVec& c) {
        cost_ = c;
        obj_.assign(static_cast<std::size_t>(cols_), Rat(0));
        obj_value_ = 0;
        for (int j = 0; j < cols_; ++j) obj_[idx(j)] = c[idx(j)];
        for (int r = 0; r < m_; ++r) {
            const Rat& cb = c[idx(basic_[idx(r)])];
            if (cb == 0) continue;
            for (int j = 0; j < cols_; ++j) obj_[idx(j)] -= cb * body_[idx(r)][idx(j)];
            obj_value_ += cb * rhs_[idx(r)];
        }
    }

    void pivot(int r, int j) {
        const Rat p = body_[idx(r)][idx(j)];
        for (auto& v : body_[idx(r)]) v /= p;
        rhs_[idx(r)] /= p;
        for (int rr = 0; rr < m_; ++rr) {
            if (rr == r) continue;
            const Rat f = body_[idx(rr)][idx(j)];
            if (f == 0) continue;
            for (int jj = 0; jj < cols_; ++jj) body_[idx(rr)][idx(jj)] -= f * body_[idx(r)][idx(jj)];
            rhs_[idx(rr)] -= f * rhs_[idx(r)];
        }
        const Rat g = obj_[idx(j)];
        if (g != 0) {
            for (int jj = 0; jj < cols_; ++jj) obj_[idx(jj)] -= g * body_[idx(r)][idx(jj)];
            obj_value_ += g * rhs_[idx(r)];
        }
        basic_[idx(r)] = j;
    }

    std::vector<RatVec> body_;
    RatVec rhs_;
    RatVec obj_;
    RatVec cost_;
    Rat obj_value_;
    std::vector<int> basic_;
    std::vector<int> art_col_;
    std::vector<int> orig_row_;
    std::vector<bool> flipped_;
    int m_ = 0, n_struct_ = 0, n_art_ = 0, cols_ = 0;
};

}  // namespace

LpResult maximize(const RatVec& c, const HRep& h) {
    h.validate();
    if (static_cast<int>(c.size()) != h.dim) throw std::invalid_argument("maximize: dimension mismatch");
    LpResult out;
    if (h.infeasible) return out;

    const int n = h.dim;
    const int m1 = static_cast<int>(h.inequalities.size());
    const int m2 = static_cast<int>(h.equations.size());
    if (m1 + m2 == 0) {
        out.status = is_zero_vec(c) ? LpStatus::Optimal : LpStatus::Unbounded;
        if (out.status == LpStatus::Optimal) {
            out.value = 0;
            out.argmax = zero_vec(n);
        }
        return out;
    }
    const int nc = 2 * n + m1;  // x = u - w, one slack per inequality

    std::vector<RatVec> rows;
    RatVec rhs;
    std::vector<int> seed(static_cast<std::size_t>(m1 + m2), -1);
    for (int i = 0; i < m1; ++i) {
        RatVec row(static_cast<std::size_t>(nc), Rat(0));
        for (int j = 0; j < n; ++j) {
            row[static_cast<std::size_t>(j)] = h.inequalities[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(n + j)] = -row[static_cast<std::size_t>(j)];
        }
        row[static_cast<std::size_t>(2 * n + i)] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(h.inequalities[static_cast<std::size_t>(i)].b);
        seed[static_cast<std::size_t>(i)] = 2 * n + i;
    }
    for (int i = 0; i < m2; ++i) {
        RatVec row(static_cast<std::size_t>(nc), Rat(0));
        for (int j = 0; j < n; ++j) {
            row[static_cast<std::size_t>(j)] = h.equations[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(n + j)] = -row[static_cast<std::size_t>(j)];
        }
        rows.push_back(std::move(row));
        rhs.push_back(h.equations[static_cast<std::size_t>(i)].b);
    }

    Tableau tab(std::move(rows), std::move(rhs));
    tab.seed_basis(seed);
    tab.remember_rows();

    if (tab.has_artificials()) {
        RatVec phase1(static_cast<std::size_t>(nc), Rat(0));
        phase1.resize(static_cast<std::size_t>(nc) + static_cast<std::size_t>(m1 + m2), Rat(0));
        // cost -1 on every artificial column
        for (int r = 0; r < m1 + m2; ++r) {
            int ac = tab.artificial_of(r);
            if (ac >= 0) phase1[static_cast<std::size_t>(ac)] = -1;
        }
        phase1.resize(static_cast<std::size_t>(nc) + static_cast<std::size_t>(m1 + m2), Rat(0));
        tab.run(phase1, false);
        if (tab.objective_value() != 0) return out;  // Infeasible
        tab.purge_artificials();
    }

    RatVec phase2(static_cast<std::size_t>(nc) + static_cast<std::size_t>(m1 + m2), Rat(0));
    for (int j = 0; j < n; ++j) {
        phase2[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
        phase2[static_cast<std::size_t>(n + j)] = -c[static_cast<std::size_t>(j)];
    }
    if (!tab.run(phase2, true)) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    out.value = tab.objective_value();
    RatVec cols = tab.solution();
    out.argmax.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out.argmax[static_cast<std::size_t>(j)] =
            cols[static_cast<std::size_t>(j)] - cols[static_cast<std::size_t>(n + j)];

    // duals: y_i = -reduced_cost(slack_i); equations read off artificials.
    out.dual_ineq.assign(static_cast<std::size_t>(m1), Rat(0));
    for (int i = 0; i < m1; ++i) out.dual_ineq[static_cast<std::size_t>(i)] = -tab.reduced_cost(2 * n + i);
    out.dual_eq.assign(static_cast<std::size_t>(m2), Rat(0));
    for (int i = 0; i < m2; ++i) {
        int ac = tab.artificial_of(m1 + i);
        if (ac >= 0) {
            Rat y = -tab.reduced_cost(ac);
            out.dual_eq[static_cast<std::size_t>(i)] = tab.row_flipped(m1 + i) ? Rat(-y) : y;
        }
    }
    return out;
}

bool lp_feasible(const HRep& h) {
    return maximize(zero_vec(h.dim), h).status == LpStatus::Optimal;
}

bool dual_certificate_ok(const RatVec& c, const HRep& h, const LpResult& r) {
    if (r.status != LpStatus::Optimal) return false;
    if (r.dual_ineq.size() != h.inequalities.size() || r.dual_eq.size() != h.equations.size()) return false;
    for (const Rat& y : r.dual_ineq)
        if (y < 0) return false;
    RatVec combo = zero_vec(h.dim);
    Rat val = 0;
    for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
        if (r.dual_ineq[i] == 0) continue;
        combo = vec_add(combo, vec_scaled(h.inequalities[i].a, r.dual_ineq[i]));
        val += r.dual_ineq[i] * h.inequalities[i].b;
    }
    for (std::size_t i = 0; i < h.equations.size(); ++i) {
        if (r.dual_eq[i] == 0) continue;
        combo = vec_add(combo, vec_scaled(h.equations[i].a, r.dual_eq[i]));
        val += r.dual_eq[i] * h.equations[i].b;
    }
    return combo == c && val == r.value;
}

std::optional<RatVec> nonneg_solve(const std::vector<RatVec>& eq_rows, const RatVec& rhs) {
    if (eq_rows.size() != rhs.size()) throw std::invalid_argument("nonneg_solve: shape mismatch");
    if (eq_rows.empty()) return RatVec{};
    const int m = static_cast<int>(eq_rows.size());
    const int n = static_cast<int>(eq_rows[0].size());
    std::vector<RatVec> rows = eq_rows;
    Tableau tab(std::move(rows), rhs);
    tab.seed_basis(std::vector<int>(static_cast<std::size_t>(m), -1));
    tab.remember_rows();
    RatVec phase1(static_cast<std::size_t>(n + m), Rat(0));
    for (int r = 0; r < m; ++r) {
        int ac = tab.artificial_of(r);
        if (ac >= 0) phase1[static_cast<std::size_t>(ac)] = -1;
    }
    tab.run(phase1, false);
    if (tab.objective_value() != 0) return std::nullopt;
    RatVec mu = tab.solution();
    mu.resize(static_cast<std::size_t>(n));
    return mu;
}

}  // namespace sparsecuts
