#include "polytrope/lp.hpp"

#include "polytrope/linalg.hpp"

#include <cassert>

namespace polytrope {

namespace {

// Bounded-variable primal simplex on one of two homogeneous slack programs.
//
// Per-row mode (relative interior / mixed systems):
//   maximize sum_i s_i
//   subject to a_i.x - s_i - w_i = 0   (one row per inequality, s_i in [0,1], w_i >= 0)
//              e_j.x          = 0      (equality rows, artificial basic pinned to [0,0])
//
// Shared-t mode (strict-only systems, far fewer pivots):
//   maximize t, subject to a_i.x - t - w_i = 0, t in [0,1].
//
// x = 0 is feasible either way, so phase one is never needed. In per-row
// mode, s_i is 1 at the optimum exactly when row i can be strictly positive
// somewhere on the closed cone {e = 0, a >= 0}: a point positive on one row
// can be added to a point positive on another without leaving the cone, and
// scaling pushes every non-degenerate row to the cap together. Rows with
// s_i = 0 therefore vanish identically on the cone, and the witness x* lies
// in its relative interior. In shared-t mode homogeneity forces t* to 0 or
// 1, with 1 exactly at strict feasibility.
class MaxSlackSimplex {
public:
    MaxSlackSimplex(int dim, const std::vector<std::vector<Rational>>& ineq,
                    const std::vector<std::vector<Rational>>& eq, bool shared_t)
        : dim_(dim), m_(static_cast<int>(ineq.size())), p_(static_cast<int>(eq.size())),
          shared_t_(shared_t), ns_(shared_t ? 1 : m_) {
        const int rows = m_ + p_;
        nv_ = dim_ + ns_ + m_ + p_; // x, slack block, w, artificials
        kind_.assign(nv_, Kind::NonNeg);
        for (int v = 0; v < dim_; ++v) kind_[v] = Kind::Free;
        for (int i = 0; i < ns_; ++i) kind_[dim_ + i] = Kind::Boxed01;
        for (int j = 0; j < p_; ++j) kind_[dim_ + ns_ + m_ + j] = Kind::Fixed0;

        // Rows are kept with the basic column at +1, so inequality rows enter
        // negated: -a_i.x + s + w_i = 0 with w_i basic.
        a_.assign(rows, std::vector<Rational>(nv_, Rational(0)));
        for (int i = 0; i < m_; ++i) {
            for (int v = 0; v < dim_; ++v) a_[i][v] = -ineq[i][v];
            a_[i][dim_ + (shared_t_ ? 0 : i)] = 1;
            a_[i][dim_ + ns_ + i] = 1; // w_i
        }
        for (int j = 0; j < p_; ++j) {
            for (int v = 0; v < dim_; ++v) a_[m_ + j][v] = eq[j][v];
            a_[m_ + j][dim_ + ns_ + m_ + j] = 1;
        }

        rc_.assign(nv_, Rational(0));
        for (int i = 0; i < ns_; ++i) rc_[dim_ + i] = 1;

        basis_.resize(rows);
        state_.assign(nv_, State::AtLower);
        beta_.assign(rows, Rational(0));
        for (int i = 0; i < m_; ++i) set_basic(i, dim_ + ns_ + i);
        for (int j = 0; j < p_; ++j) set_basic(m_ + j, dim_ + ns_ + m_ + j);
    }

    void solve() {
        while (step()) {
        }
    }

    std::vector<Rational> x_values() const {
        std::vector<Rational> x(dim_, Rational(0));
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] < dim_) x[basis_[r]] = beta_[r];
        return x;
    }

    bool slack_at_one(int i) const { return value_of(dim_ + (shared_t_ ? 0 : i)) == 1; }

private:
    enum class Kind { Free, NonNeg, Boxed01, Fixed0 };
    enum class State { Basic, AtLower, AtUpper };

    void set_basic(int row, int v) {
        basis_[row] = v;
        state_[v] = State::Basic;
    }

    Rational value_of(int v) const {
        if (state_[v] == State::Basic) {
            for (std::size_t r = 0; r < basis_.size(); ++r)
                if (basis_[r] == v) return beta_[r];
        }
        return state_[v] == State::AtUpper ? Rational(1) : Rational(0);
    }

    bool lower_bounded(int v) const { return kind_[v] != Kind::Free; }
    bool upper_bounded(int v) const { return kind_[v] == Kind::Boxed01 || kind_[v] == Kind::Fixed0; }
    Rational lower_of(int) const { return Rational(0); }
    Rational upper_of(int v) const { return kind_[v] == Kind::Boxed01 ? Rational(1) : Rational(0); }

    // One Bland step; false at optimality.
    bool step() {
        int enter = -1, dir = 0;
        for (int v = 0; v < nv_; ++v) {
            if (state_[v] == State::Basic || kind_[v] == Kind::Fixed0) continue;
            if (rc_[v] > 0 && state_[v] == State::AtLower) {
                enter = v;
                dir = 1;
                break;
            }
            if (rc_[v] < 0 && (state_[v] == State::AtUpper || kind_[v] == Kind::Free)) {
                enter = v;
                dir = -1;
                break;
            }
        }
        if (enter < 0) return false;

        // Ratio test: first basic variable (smallest index on ties) to hit a
        // bound as `enter` moves by t in direction dir; the entering variable's
        // own opposite bound competes as a bound flip.
        bool limited = false;
        Rational tmax;
        int leave_row = -1;
        bool leave_to_upper = false;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const Rational& coef = a_[r][enter];
            if (coef == 0) continue;
            const int bv = basis_[r];
            // beta_r moves by -coef*dir per unit t
            const int move = -sgn(coef) * dir;
            if (move < 0 && lower_bounded(bv)) {
                Rational t = (beta_[r] - lower_of(bv)) / (coef * dir);
                if (!limited || t < tmax || (t == tmax && bv < basis_[leave_row])) {
                    limited = true;
                    tmax = t;
                    leave_row = static_cast<int>(r);
                    leave_to_upper = false;
                }
            } else if (move > 0 && upper_bounded(bv)) {
                Rational t = (upper_of(bv) - beta_[r]) / (-coef * dir);
                if (!limited || t < tmax || (t == tmax && bv < basis_[leave_row])) {
                    limited = true;
                    tmax = t;
                    leave_row = static_cast<int>(r);
                    leave_to_upper = true;
                }
            }
        }
        bool own_flip = false;
        if (kind_[enter] == Kind::Boxed01) {
            Rational span(1);
            if (!limited || span < tmax) {
                limited = true;
                tmax = span;
                own_flip = true;
                leave_row = -1;
            }
        }
        assert(limited && "objective is bounded, a blocking bound must exist");

        // Move the entering variable by tmax.
        if (tmax != 0) {
            for (std::size_t r = 0; r < basis_.size(); ++r)
                if (a_[r][enter] != 0) beta_[r] -= a_[r][enter] * dir * tmax;
        }
        if (own_flip) {
            state_[enter] = state_[enter] == State::AtLower ? State::AtUpper : State::AtLower;
            return true;
        }

        const int leave = basis_[leave_row];
        state_[leave] = leave_to_upper ? State::AtUpper : State::AtLower;
        Rational new_value = value_nonbasic(enter) + dir * tmax;
        basis_[leave_row] = enter;
        state_[enter] = State::Basic;
        beta_[leave_row] = std::move(new_value);
        pivot(leave_row, enter);
        return true;
    }

    Rational value_nonbasic(int v) const {
        return state_[v] == State::AtUpper ? upper_of(v) : Rational(0);
    }

    void pivot(int prow, int pcol) {
        std::vector<Rational>& prowv = a_[prow];
        const Rational inv = prowv[pcol];
        for (int c = 0; c < nv_; ++c)
            if (prowv[c] != 0) prowv[c] /= inv;
        for (std::size_t r = 0; r < a_.size(); ++r) {
            if (static_cast<int>(r) == prow) continue;
            const Rational f = a_[r][pcol];
            if (f == 0) continue;
            std::vector<Rational>& row = a_[r];
            for (int c = 0; c < nv_; ++c)
                if (prowv[c] != 0) row[c] -= f * prowv[c];
        }
        const Rational f = rc_[pcol];
        if (f != 0)
            for (int c = 0; c < nv_; ++c)
                if (prowv[c] != 0) rc_[c] -= f * prowv[c];
    }

    int dim_, m_, p_;
    bool shared_t_ = false;
    int ns_ = 0;
    int nv_ = 0;
    std::vector<Kind> kind_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> rc_;
    std::vector<int> basis_;
    std::vector<State> state_;
    std::vector<Rational> beta_;
};

struct NormalizedSystem {
    std::vector<std::vector<Rational>> ineq; // oriented to >= / >
    std::vector<char> strict;                // per ineq row
    std::vector<std::vector<Rational>> eq;
    std::vector<int> ineq_source; // constraint index per ineq row
};

NormalizedSystem normalize(const ConeSystem& sys) {
    NormalizedSystem out;
    for (std::size_t k = 0; k < sys.constraints.size(); ++k) {
        const auto& c = sys.constraints[k];
        switch (c.rel) {
        case Relation::Eq:
            out.eq.push_back(c.normal);
            break;
        case Relation::Ge:
        case Relation::Gt: {
            out.ineq.push_back(c.normal);
            out.strict.push_back(c.rel == Relation::Gt);
            out.ineq_source.push_back(static_cast<int>(k));
            break;
        }
        case Relation::Le:
        case Relation::Lt: {
            std::vector<Rational> neg(c.normal.size());
            for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -c.normal[i];
            out.ineq.push_back(std::move(neg));
            out.strict.push_back(c.rel == Relation::Lt);
            out.ineq_source.push_back(static_cast<int>(k));
            break;
        }
        }
    }
    return out;
}

Witness make_witness(const ConeSystem& sys, std::vector<Rational> point) {
    Witness w;
    w.slacks.reserve(sys.constraints.size());
    for (const auto& c : sys.constraints) w.slacks.push_back(dot(c.normal, point));
    w.point = std::move(point);
    return w;
}

struct SolveResult {
    std::vector<Rational> point;
    std::vector<char> row_open; // per ineq row of the normalized system
};

SolveResult solve_max_slack(int dim, const NormalizedSystem& ns, bool shared_t) {
    MaxSlackSimplex simplex(dim, ns.ineq, ns.eq, shared_t);
    simplex.solve();
    SolveResult res;
    res.point = simplex.x_values();
    res.row_open.resize(ns.ineq.size());
    for (std::size_t i = 0; i < ns.ineq.size(); ++i) res.row_open[i] = simplex.slack_at_one(static_cast<int>(i));
    return res;
}

} // namespace

std::optional<Witness> feasible(const ConeSystem& sys) {
    NormalizedSystem ns = normalize(sys);
    bool all_strict = ns.eq.empty();
    for (char s : ns.strict) all_strict = all_strict && s;
    SolveResult res = solve_max_slack(sys.dim, ns, all_strict && !ns.ineq.empty());
    for (std::size_t i = 0; i < ns.ineq.size(); ++i)
        if (ns.strict[i] && !res.row_open[i]) return std::nullopt;
    return make_witness(sys, std::move(res.point));
}

RelativeInterior relative_interior(const ConeSystem& sys) {
    NormalizedSystem ns = normalize(sys);
    SolveResult res = solve_max_slack(sys.dim, ns, false);
    for (std::size_t i = 0; i < ns.ineq.size(); ++i)
        if (ns.strict[i] && !res.row_open[i]) throw InfeasibleSystem();

    RelativeInterior out;
    out.forced_zero.assign(sys.constraints.size(), 0);
    RationalMatrix zero_rows;
    for (const auto& e : ns.eq) zero_rows.push_back(e);
    for (std::size_t k = 0; k < sys.constraints.size(); ++k)
        if (sys.constraints[k].rel == Relation::Eq) out.forced_zero[k] = 1;
    for (std::size_t i = 0; i < ns.ineq.size(); ++i)
        if (!res.row_open[i]) {
            out.forced_zero[ns.ineq_source[i]] = 1;
            zero_rows.push_back(ns.ineq[i]);
        }
    out.dimension = sys.dim - (zero_rows.empty() ? 0 : rank_of(std::move(zero_rows)));
    out.witness = make_witness(sys, std::move(res.point));
    return out;
}

int cone_dimension(const ConeSystem& sys) { return relative_interior(sys).dimension; }

Witness interior_witness(const ConeSystem& sys) { return relative_interior(sys).witness; }

bool witness_satisfies(const ConeSystem& sys, const std::vector<Rational>& point) {
    for (const auto& c : sys.constraints) {
        const Rational v = dot(c.normal, point);
        switch (c.rel) {
        case Relation::Eq:
            if (v != 0) return false;
            break;
        case Relation::Ge:
            if (v < 0) return false;
            break;
        case Relation::Gt:
            if (v <= 0) return false;
            break;
        case Relation::Le:
            if (v > 0) return false;
            break;
        case Relation::Lt:
            if (v >= 0) return false;
            break;
        }
    }
    return true;
}

} // namespace polytrope
