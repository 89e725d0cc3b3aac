#include "snp/simplex.hpp"

#include <algorithm>

#include "snp/errors.hpp"

namespace snp {

namespace {

// Dense tableau two-phase simplex.  Columns 0..ncols-1 are structural (plus
// slacks appended by the caller-facing wrapper); artificials live past them.
// Row 0 is the objective.  Small systems only; clarity over speed.
struct Tableau {
    int m, n; // constraint rows, total columns (without rhs)
    std::vector<std::vector<Rational>> t; // (m+1) x (n+1), last col = rhs
    std::vector<int> basis;               // basis column per row 1..m

    Tableau(int m_, int n_) : m(m_), n(n_), t(m_ + 1, std::vector<Rational>(n_ + 1)), basis(m_ + 1, -1) {}

    void pivot(int row, int col) {
        Rational p = t[row][col];
        for (auto& v : t[row]) v /= p;
        for (int r = 0; r <= m; ++r) {
            if (r == row) continue;
            Rational f = t[r][col];
            if (is_zero(f)) continue;
            for (int c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
        }
        basis[row] = col;
    }

    // Bland: entering = lowest-index column with positive objective row
    // coefficient (we maximize, objective stored as z-row: choose t[0][c] < 0).
    bool iterate(int allowed_cols) {
        for (;;) {
            int col = -1;
            for (int c = 0; c < allowed_cols; ++c) {
                if (sgn(t[0][c]) < 0) {
                    col = c;
                    break;
                }
            }
            if (col < 0) return true; // optimal
            int row = -1;
            for (int r = 1; r <= m; ++r) {
                if (sgn(t[r][col]) > 0) {
                    if (row < 0) {
                        row = r;
                        continue;
                    }
                    Rational cur = t[r][n] / t[r][col];
                    Rational best = t[row][n] / t[row][col];
                    if (cur < best || (cur == best && basis[r] < basis[row])) row = r;
                }
            }
            if (row < 0) return false; // unbounded
            pivot(row, col);
        }
    }
};

} // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& A,
                  const std::vector<Rational>& b,
                  const std::vector<Rational>& c,
                  const std::vector<Rel>& rel) {
    const int m = static_cast<int>(A.size());
    const int nstruct = static_cast<int>(c.size());
    int nslack = 0;
    for (auto r : rel)
        if (r == Rel::LE) ++nslack;
    const int n = nstruct + nslack + m; // + artificials
    Tableau tab(m, n);

    int slack = nstruct;
    for (int r = 0; r < m; ++r) {
        int sign = sgn(b[r]) < 0 ? -1 : 1;
        for (int j = 0; j < nstruct; ++j) tab.t[r + 1][j] = sign * A[r][j];
        if (rel[r] == Rel::LE) {
            tab.t[r + 1][slack] = sign;
            ++slack;
        }
        tab.t[r + 1][nstruct + nslack + r] = 1; // artificial
        tab.t[r + 1][n] = sign * b[r];
        tab.basis[r + 1] = nstruct + nslack + r;
    }

    // Phase 1: minimize artificial sum == maximize -(sum of artificials)
    for (int r = 1; r <= m; ++r)
        for (int cidx = 0; cidx <= n; ++cidx) tab.t[0][cidx] -= tab.t[r][cidx];
    for (int j = nstruct + nslack; j < n; ++j) tab.t[0][j] = 0;
    if (!tab.iterate(n)) throw InternalError("phase-1 simplex unbounded");
    if (!is_zero(tab.t[0][n])) return {LpStatus::Infeasible, Rational(0), {}};

    // Drive leftover artificials out of the basis where possible.
    for (int r = 1; r <= m; ++r) {
        if (tab.basis[r] >= nstruct + nslack) {
            int col = -1;
            for (int j = 0; j < nstruct + nslack; ++j)
                if (!is_zero(tab.t[r][j])) {
                    col = j;
                    break;
                }
            if (col >= 0) tab.pivot(r, col);
            // else: redundant row, keep the zero artificial in basis
        }
    }

    // Phase 2 objective.
    for (int j = 0; j <= n; ++j) tab.t[0][j] = 0;
    for (int j = 0; j < nstruct; ++j) tab.t[0][j] = -c[j];
    for (int r = 1; r <= m; ++r) {
        int bcol = tab.basis[r];
        if (bcol < nstruct && !is_zero(tab.t[0][bcol])) {
            Rational f = tab.t[0][bcol];
            for (int j = 0; j <= n; ++j) tab.t[0][j] -= f * tab.t[r][j];
        }
    }
    if (!tab.iterate(nstruct + nslack)) return {LpStatus::Unbounded, Rational(0), {}};

    std::vector<Rational> x(nstruct, Rational(0));
    for (int r = 1; r <= m; ++r)
        if (tab.basis[r] < nstruct) x[tab.basis[r]] = tab.t[r][n];
    return {LpStatus::Optimal, tab.t[0][n], x};
}

// Revised phase-one simplex for hull membership: minimize artificial sum on
//   [G; 1...1] lambda = [point; 1], lambda >= 0.
// Dense basis inverse (m = dim+1 is small); Bland's rule on generator order.
bool in_convex_hull(const std::vector<std::vector<int>>& generators,
                    const std::vector<Rational>& point) {
    const int m = static_cast<int>(point.size()) + 1;
    const int ncols = static_cast<int>(generators.size());

    std::vector<Rational> rhs(m);
    std::vector<int> rowsign(m, 1);
    for (int r = 0; r + 1 < m; ++r) rhs[r] = point[r];
    rhs[m - 1] = 1;
    for (int r = 0; r < m; ++r)
        if (sgn(rhs[r]) < 0) {
            rowsign[r] = -1;
            rhs[r] = -rhs[r];
        }

    auto column = [&](int j, int r) -> Rational {
        int raw = (r + 1 < m) ? generators[j][r] : 1;
        return Rational(rowsign[r] * raw);
    };

    // B^{-1} as dense matrix; basis starts as the artificial identity.
    std::vector<std::vector<Rational>> binv(m, std::vector<Rational>(m, Rational(0)));
    for (int r = 0; r < m; ++r) binv[r][r] = 1;
    std::vector<int> basis(m); // >= ncols means artificial (index - ncols)
    for (int r = 0; r < m; ++r) basis[r] = ncols + r;
    std::vector<Rational> xb = rhs; // current basic values

    auto objective_zero = [&]() {
        for (int r = 0; r < m; ++r)
            if (basis[r] >= ncols && !is_zero(xb[r])) return false;
        return true;
    };

    std::vector<Rational> y(m), d(m);
    for (;;) {
        if (objective_zero()) return true;
        // y = cB * B^{-1}, cB = 1 on artificial rows
        for (int cidx = 0; cidx < m; ++cidx) {
            y[cidx] = 0;
            for (int r = 0; r < m; ++r)
                if (basis[r] >= ncols) y[cidx] += binv[r][cidx];
        }
        // entering: first structural column with reduced cost < 0, i.e. y.Aj > 0
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            bool in_basis = false;
            for (int r = 0; r < m; ++r)
                if (basis[r] == j) {
                    in_basis = true;
                    break;
                }
            if (in_basis) continue;
            Rational red(0);
            for (int r = 0; r < m; ++r) {
                if (is_zero(y[r])) continue;
                red += y[r] * column(j, r);
            }
            if (sgn(red) > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false; // optimum > 0: infeasible
        // d = B^{-1} A_enter
        for (int r = 0; r < m; ++r) {
            d[r] = 0;
            for (int k = 0; k < m; ++k) {
                Rational a = column(enter, k);
                if (!is_zero(a) && !is_zero(binv[r][k])) d[r] += binv[r][k] * a;
            }
        }
        // ratio test, Bland tie-break on basis index
        int leave = -1;
        for (int r = 0; r < m; ++r) {
            if (sgn(d[r]) > 0) {
                if (leave < 0) {
                    leave = r;
                    continue;
                }
                Rational cur = xb[r] / d[r], best = xb[leave] / d[leave];
                if (cur < best || (cur == best && basis[r] < basis[leave])) leave = r;
            }
        }
        if (leave < 0) throw InternalError("hull membership LP unbounded");
        // pivot: update binv and xb
        Rational p = d[leave];
        for (int cidx = 0; cidx < m; ++cidx) binv[leave][cidx] /= p;
        xb[leave] /= p;
        for (int r = 0; r < m; ++r) {
            if (r == leave || is_zero(d[r])) continue;
            Rational f = d[r];
            for (int cidx = 0; cidx < m; ++cidx) binv[r][cidx] -= f * binv[leave][cidx];
            xb[r] -= f * xb[leave];
        }
        basis[leave] = enter;
    }
}

} // namespace snp
