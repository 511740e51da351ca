#include "erelax/simplex.hpp"

#include <cassert>

namespace erelax {

GeneralLp GeneralLp::from_box(const LinearProgram& lp, const Box& box) {
    if (static_cast<int>(box.size()) != lp.n)
        throw DimensionMismatch("box has " + std::to_string(box.size()) + " entries, lp has " +
                                std::to_string(lp.n) + " variables");
    GeneralLp g;
    g.n = lp.n;
    g.rows = lp.rows;
    g.lo.reserve(box.size());
    g.hi.reserve(box.size());
    for (const auto& iv : box.bounds) {
        if (iv.lo > iv.hi) throw std::invalid_argument("box bound with lo > hi");
        g.lo.push_back(iv.lo);
        g.hi.push_back(iv.hi);
    }
    return g;
}

bool is_feasible(const LpOutcome& o) { return std::holds_alternative<FeasibleResult>(o); }
bool is_optimal(const LpOutcome& o) { return std::holds_alternative<OptimalResult>(o); }
bool is_infeasible(const LpOutcome& o) { return std::holds_alternative<InfeasibleResult>(o); }

namespace {

// Dense tableau for the standardized system  D xhat + S s (+ I t) = btilde,
// all variables >= 0. Row layout: original rows first, then upper-bound rows.
// Column layout: n structural, then one slack per row, then artificials, then
// the right-hand side.
class Tableau {
public:
    Tableau(const GeneralLp& p) : n_(p.n) {
        std::vector<std::vector<Rational>> dense_rows;
        std::vector<Rational> rhs;
        for (const auto& row : p.rows) {
            std::vector<Rational> a(static_cast<std::size_t>(n_), Rational(0));
            Rational b = row.rhs;
            for (const auto& [idx, coeff] : row.coeffs) {
                if (idx < 0 || idx >= n_) throw DimensionMismatch("row index out of range");
                a[static_cast<std::size_t>(idx)] += coeff;
            }
            for (int i = 0; i < n_; ++i)
                b -= a[static_cast<std::size_t>(i)] * p.lo[static_cast<std::size_t>(i)];
            dense_rows.push_back(std::move(a));
            rhs.push_back(std::move(b));
        }
        upper_row_of_.assign(static_cast<std::size_t>(n_), -1);
        for (int i = 0; i < n_; ++i) {
            const auto& h = p.hi[static_cast<std::size_t>(i)];
            if (!h) continue;
            std::vector<Rational> a(static_cast<std::size_t>(n_), Rational(0));
            a[static_cast<std::size_t>(i)] = 1;
            upper_row_of_[static_cast<std::size_t>(i)] = static_cast<int>(dense_rows.size());
            dense_rows.push_back(std::move(a));
            rhs.push_back(*h - p.lo[static_cast<std::size_t>(i)]);
        }
        m_ = static_cast<int>(dense_rows.size());
        n_orig_rows_ = static_cast<int>(p.rows.size());

        // Count artificials: rows whose shifted rhs is negative get negated
        // and need one.
        for (int r = 0; r < m_; ++r)
            if (rhs[static_cast<std::size_t>(r)] < 0) ++n_art_;

        cols_ = n_ + m_ + n_art_ + 1;
        a_.assign(static_cast<std::size_t>(m_ + 1) * static_cast<std::size_t>(cols_), Rational(0));
        basis_.assign(static_cast<std::size_t>(m_), -1);
        active_.assign(static_cast<std::size_t>(m_), true);

        int art = 0;
        for (int r = 0; r < m_; ++r) {
            const bool neg = rhs[static_cast<std::size_t>(r)] < 0;
            const Rational sign = neg ? -1 : 1;
            for (int j = 0; j < n_; ++j)
                at(r, j) = sign * dense_rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            at(r, slack_col(r)) = sign;
            at(r, rhs_col()) = sign * rhs[static_cast<std::size_t>(r)];
            if (neg) {
                at(r, art_col(art)) = 1;
                basis_[static_cast<std::size_t>(r)] = art_col(art);
                ++art;
            } else {
                basis_[static_cast<std::size_t>(r)] = slack_col(r);
            }
        }
    }

    int slack_col(int r) const { return n_ + r; }
    int art_col(int a) const { return n_ + m_ + a; }
    int rhs_col() const { return cols_ - 1; }
    bool is_artificial(int col) const { return col >= n_ + m_; }

    Rational& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const Rational& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }

    int obj_row() const { return m_; }

    // Rebuilds the objective row for costs c over all columns (rhs entry 0),
    // then cancels the basic columns so reduced costs are correct.
    void set_objective(const std::vector<Rational>& full_costs) {
        for (int j = 0; j < cols_; ++j) at(obj_row(), j) = 0;
        for (std::size_t j = 0; j < full_costs.size(); ++j)
            at(obj_row(), static_cast<int>(j)) = full_costs[j];
        for (int r = 0; r < m_; ++r) {
            if (!active_[static_cast<std::size_t>(r)]) continue;
            const Rational cb = at(obj_row(), basis_[static_cast<std::size_t>(r)]);
            if (cb != 0) add_multiple_to_obj(r, -cb);
        }
    }

    void add_multiple_to_obj(int r, const Rational& factor) {
        for (int j = 0; j < cols_; ++j) {
            const Rational& v = at(r, j);
            if (v != 0) at(obj_row(), j) += factor * v;
        }
    }

    void pivot(int prow, int pcol) {
        const Rational inv = Rational(1) / at(prow, pcol);
        if (inv != 1)
            for (int j = 0; j < cols_; ++j) {
                Rational& v = at(prow, j);
                if (v != 0) v *= inv;
            }
        for (int r = 0; r <= m_; ++r) {
            if (r == prow) continue;
            if (r < m_ && !active_[static_cast<std::size_t>(r)]) continue;
            const Rational factor = at(r, pcol);
            if (factor == 0) continue;
            for (int j = 0; j < cols_; ++j) {
                const Rational& v = at(prow, j);
                if (v != 0) at(r, j) -= factor * v;
            }
            at(r, pcol) = 0;  // kill residual round-off-free but explicit
        }
        basis_[static_cast<std::size_t>(prow)] = pcol;
    }

    // Bland's rule loop; returns false when the entering column is unbounded
    // (no positive pivot entry). allow_artificial gates artificial columns.
    bool run(bool allow_artificial) {
        for (;;) {
            int enter = -1;
            const int limit = allow_artificial ? n_ + m_ + n_art_ : n_ + m_;
            for (int j = 0; j < limit; ++j) {
                if (at(obj_row(), j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int r = 0; r < m_; ++r) {
                if (!active_[static_cast<std::size_t>(r)]) continue;
                const Rational& piv = at(r, enter);
                if (piv <= 0) continue;
                Rational ratio = at(r, rhs_col()) / piv;
                if (leave < 0 || ratio < best ||
                    (ratio == best &&
                     basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    // After a zero-value phase 1, pivot artificials out of the basis or drop
    // redundant rows.
    void purge_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (!active_[static_cast<std::size_t>(r)]) continue;
            if (!is_artificial(basis_[static_cast<std::size_t>(r)])) continue;
            assert(at(r, rhs_col()) == 0);
            int pcol = -1;
            for (int j = 0; j < n_ + m_; ++j) {
                if (at(r, j) != 0) {
                    pcol = j;
                    break;
                }
            }
            if (pcol >= 0)
                pivot(r, pcol);
            else
                active_[static_cast<std::size_t>(r)] = false;
        }
    }

    std::vector<Rational> structural_solution() const {
        std::vector<Rational> x(static_cast<std::size_t>(n_), Rational(0));
        for (int r = 0; r < m_; ++r) {
            if (!active_[static_cast<std::size_t>(r)]) continue;
            const int b = basis_[static_cast<std::size_t>(r)];
            if (b < n_) x[static_cast<std::size_t>(b)] = at(r, rhs_col());
        }
        return x;
    }

    // Multiplier (for the <=-form standardized row r) read off the final
    // reduced cost of that row's slack column.
    Rational row_multiplier(int r) const {
        if (!active_[static_cast<std::size_t>(r)]) return Rational(0);
        return at(obj_row(), slack_col(r));
    }

    int n_vars() const { return n_; }
    int n_rows() const { return m_; }
    int n_orig_rows() const { return n_orig_rows_; }
    int n_artificials() const { return n_art_; }
    int upper_row_of(int var) const { return upper_row_of_[static_cast<std::size_t>(var)]; }

private:
    int n_ = 0;
    int m_ = 0;
    int n_orig_rows_ = 0;
    int n_art_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
    std::vector<int> basis_;
    std::vector<bool> active_;
    std::vector<int> upper_row_of_;
};

std::vector<Rational> unshift(const GeneralLp& p, std::vector<Rational> xhat) {
    for (int i = 0; i < p.n; ++i) xhat[static_cast<std::size_t>(i)] += p.lo[static_cast<std::size_t>(i)];
    return xhat;
}

}  // namespace

LpOutcome solve_general(const GeneralLp& p, const std::vector<Rational>* objective) {
    if (static_cast<int>(p.lo.size()) != p.n || static_cast<int>(p.hi.size()) != p.n)
        throw DimensionMismatch("bound vectors do not match variable count");
    if (objective && static_cast<int>(objective->size()) != p.n)
        throw DimensionMismatch("objective does not match variable count");
    for (int i = 0; i < p.n; ++i)
        if (p.hi[static_cast<std::size_t>(i)] &&
            *p.hi[static_cast<std::size_t>(i)] < p.lo[static_cast<std::size_t>(i)])
            throw std::invalid_argument("variable bound with hi < lo");

    Tableau t(p);

    if (t.n_artificials() > 0) {
        std::vector<Rational> costs(static_cast<std::size_t>(t.n_vars() + t.n_rows()), Rational(0));
        costs.resize(static_cast<std::size_t>(t.n_vars() + t.n_rows() + t.n_artificials()), Rational(1));
        t.set_objective(costs);
        const bool bounded = t.run(true);
        assert(bounded);
        (void)bounded;
        Rational infeas = -t.at(t.obj_row(), t.rhs_col());
        if (infeas > 0) {
            std::vector<Rational> farkas;
            farkas.reserve(static_cast<std::size_t>(t.n_orig_rows()));
            for (int r = 0; r < t.n_orig_rows(); ++r) farkas.push_back(t.row_multiplier(r));
            if (!verify_farkas(p, farkas))
                throw std::logic_error("internal: phase-1 Farkas certificate failed verification");
            return InfeasibleResult{std::move(farkas)};
        }
        t.purge_artificials();
    }

    if (!objective) {
        FeasibleResult res{unshift(p, t.structural_solution())};
        if (!verify_witness(p, res.witness))
            throw std::logic_error("internal: phase-1 witness failed verification");
        return res;
    }

    std::vector<Rational> costs(
        static_cast<std::size_t>(t.n_vars() + t.n_rows() + t.n_artificials()), Rational(0));
    for (int i = 0; i < p.n; ++i) costs[static_cast<std::size_t>(i)] = (*objective)[static_cast<std::size_t>(i)];
    t.set_objective(costs);
    if (!t.run(false)) return UnboundedResult{};

    OptimalResult res;
    res.primal = unshift(p, t.structural_solution());
    Rational shift_part = 0;
    for (int i = 0; i < p.n; ++i)
        shift_part += (*objective)[static_cast<std::size_t>(i)] * p.lo[static_cast<std::size_t>(i)];
    res.value = -t.at(t.obj_row(), t.rhs_col()) + shift_part;

    res.dual_rows.reserve(static_cast<std::size_t>(t.n_orig_rows()));
    for (int r = 0; r < t.n_orig_rows(); ++r) res.dual_rows.push_back(t.row_multiplier(r));
    res.dual_upper.assign(static_cast<std::size_t>(p.n), Rational(0));
    for (int i = 0; i < p.n; ++i) {
        const int ur = t.upper_row_of(i);
        if (ur >= 0) res.dual_upper[static_cast<std::size_t>(i)] = t.row_multiplier(ur);
    }
    // w = c + A^T y + u, the lower-bound multipliers; equals the final
    // reduced costs of the structural columns.
    res.dual_lower.assign(static_cast<std::size_t>(p.n), Rational(0));
    for (int i = 0; i < p.n; ++i) {
        Rational w = (*objective)[static_cast<std::size_t>(i)] +
                     res.dual_upper[static_cast<std::size_t>(i)];
        for (int r = 0; r < t.n_orig_rows(); ++r) {
            if (res.dual_rows[static_cast<std::size_t>(r)] == 0) continue;
            for (const auto& [idx, coeff] : p.rows[static_cast<std::size_t>(r)].coeffs)
                if (idx == i) w += coeff * res.dual_rows[static_cast<std::size_t>(r)];
        }
        res.dual_lower[static_cast<std::size_t>(i)] = std::move(w);
    }
    if (!verify_optimal(p, *objective, res))
        throw std::logic_error("internal: optimal certificate failed verification");
    return res;
}

LpOutcome check_feasible(const LinearProgram& lp, const Box& box) {
    return solve_general(GeneralLp::from_box(lp, box), nullptr);
}

LpOutcome minimize(const LinearProgram& lp, const std::vector<Rational>& objective, const Box& box) {
    if (static_cast<int>(objective.size()) != lp.n)
        throw DimensionMismatch("objective has " + std::to_string(objective.size()) +
                                " entries, lp has " + std::to_string(lp.n));
    return solve_general(GeneralLp::from_box(lp, box), &objective);
}

bool verify_witness(const GeneralLp& p, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != p.n) return false;
    for (int i = 0; i < p.n; ++i) {
        if (x[static_cast<std::size_t>(i)] < p.lo[static_cast<std::size_t>(i)]) return false;
        if (p.hi[static_cast<std::size_t>(i)] &&
            x[static_cast<std::size_t>(i)] > *p.hi[static_cast<std::size_t>(i)])
            return false;
    }
    for (const auto& row : p.rows) {
        Rational v = 0;
        for (const auto& [idx, coeff] : row.coeffs) v += coeff * x[static_cast<std::size_t>(idx)];
        if (v > row.rhs) return false;
    }
    return true;
}

bool verify_farkas(const GeneralLp& p, const std::vector<Rational>& y) {
    if (y.size() != p.rows.size()) return false;
    for (const auto& yr : y)
        if (yr < 0) return false;
    // s = -A^T y; completing with u = max(s,0) on uppers and w = max(-s,0)
    // on lowers is the cheapest valid completion, so it is checked directly.
    std::vector<Rational> s(static_cast<std::size_t>(p.n), Rational(0));
    Rational total = 0;
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        if (y[r] == 0) continue;
        total += y[r] * p.rows[r].rhs;
        for (const auto& [idx, coeff] : p.rows[r].coeffs)
            s[static_cast<std::size_t>(idx)] -= y[r] * coeff;
    }
    for (int i = 0; i < p.n; ++i) {
        const Rational& si = s[static_cast<std::size_t>(i)];
        if (si > 0) {
            if (!p.hi[static_cast<std::size_t>(i)]) return false;
            total += si * *p.hi[static_cast<std::size_t>(i)];
        } else if (si < 0) {
            total += si * p.lo[static_cast<std::size_t>(i)];
        }
    }
    return total < 0;
}

bool verify_optimal(const GeneralLp& p, const std::vector<Rational>& c, const OptimalResult& res) {
    if (!verify_witness(p, res.primal)) return false;
    if (res.dual_rows.size() != p.rows.size()) return false;
    if (static_cast<int>(res.dual_upper.size()) != p.n) return false;
    if (static_cast<int>(res.dual_lower.size()) != p.n) return false;
    for (const auto& v : res.dual_rows)
        if (v < 0) return false;
    for (const auto& v : res.dual_upper)
        if (v < 0) return false;
    for (const auto& v : res.dual_lower)
        if (v < 0) return false;
    Rational primal_value = 0;
    for (int i = 0; i < p.n; ++i)
        primal_value += c[static_cast<std::size_t>(i)] * res.primal[static_cast<std::size_t>(i)];
    if (primal_value != res.value) return false;
    // stationarity: A^T y + u - w + c = 0
    std::vector<Rational> stat(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i)
        stat[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] +
                                            res.dual_upper[static_cast<std::size_t>(i)] -
                                            res.dual_lower[static_cast<std::size_t>(i)];
    for (std::size_t r = 0; r < p.rows.size(); ++r)
        for (const auto& [idx, coeff] : p.rows[r].coeffs)
            stat[static_cast<std::size_t>(idx)] += coeff * res.dual_rows[r];
    for (const auto& v : stat)
        if (v != 0) return false;
    // strong duality: c.x* = -b^T y - hi^T u + lo^T w
    Rational dual_value = 0;
    for (std::size_t r = 0; r < p.rows.size(); ++r) dual_value -= res.dual_rows[r] * p.rows[r].rhs;
    for (int i = 0; i < p.n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (res.dual_upper[idx] != 0) {
            if (!p.hi[idx]) return false;
            dual_value -= res.dual_upper[idx] * *p.hi[idx];
        }
        dual_value += res.dual_lower[idx] * p.lo[idx];
    }
    return dual_value == res.value;
}

}  // namespace erelax
