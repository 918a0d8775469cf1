#include <algorithm>

#include "chromatic/mosaic.hpp"

namespace chromatic {

namespace {

// Phase-I simplex with Bland's rule: is {x : A x <= b} nonempty (x free)?
// Small exact tableau; sizes here are at most ~25 rows and ~12 variables.
bool linear_feasible(const QMat& a, const QVec& b) {
    const std::size_t rows = a.size();
    if (rows == 0) return true;
    const std::size_t nv = a[0].size();

    // Standard form: split x = xp - xn (>= 0), add slack s (>= 0) and
    // artificials on rows with negative rhs; minimize the artificial sum.
    // Tableau columns: [xp | xn | slack | artificial], then rhs.
    std::size_t n_art = 0;
    for (const auto& bi : b) (void)bi;
    std::vector<int> art_col(rows, -1);
    for (std::size_t r = 0; r < rows; ++r)
        if (b[r] < 0) art_col[r] = static_cast<int>(n_art++);

    const std::size_t cols = 2 * nv + rows + n_art;
    QMat t(rows, qvec(cols + 1));
    std::vector<int> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        int flip = b[r] < 0 ? -1 : 1;
        for (std::size_t c = 0; c < nv; ++c) {
            t[r][c] = flip * a[r][c];
            t[r][nv + c] = -flip * a[r][c];
        }
        t[r][2 * nv + r] = flip;  // slack
        t[r][cols] = flip * b[r];
        if (art_col[r] >= 0) {
            t[r][2 * nv + rows + art_col[r]] = 1;
            basis[r] = static_cast<int>(2 * nv + rows + art_col[r]);
        } else {
            basis[r] = static_cast<int>(2 * nv + r);
        }
    }

    // Objective row: minimize sum of artificials; expressed in terms of the
    // nonbasic columns by subtracting the artificial rows.
    QVec obj = qvec(cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        if (art_col[r] < 0) continue;
        for (std::size_t c = 0; c <= cols; ++c) obj[c] -= t[r][c];
    }

    while (true) {
        // Bland: entering = smallest-index column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;  // optimal
        // Leaving: min ratio, ties by smallest basis variable (Bland).
        std::size_t leave = rows;
        Rat best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][cols] / t[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) break;  // unbounded: cannot happen for phase I (objective >= 0)
        // Pivot.
        Rat piv = t[leave][enter];
        for (std::size_t c = 0; c <= cols; ++c) t[leave][c] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rat f = t[r][enter];
            for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t c = 0; c <= cols; ++c) obj[c] -= f * t[leave][c];
        }
        basis[leave] = static_cast<int>(enter);
    }
    // Feasible iff all artificials can be driven to zero.
    Rat value(0);
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= static_cast<int>(2 * nv + rows)) value += t[r][cols];
    return value == 0;
}

}  // namespace

bool is_delaunay_oracle(const ChromaticPointSet& chi, const Simplex& nu, const Rat& scale_M) {
    chi.validate();
    if (chi.size() > 25) throw input_error("is_delaunay_oracle: point cap (25) exceeded");
    for (int i = 0; i < nu.size(); ++i)
        if (nu[i] < 0 || nu[i] >= static_cast<int>(chi.size()))
            throw input_error("simplex vertex out of range");

    LiftedPointSet lp = lift(chi, scale_M);
    const int k = lp.chart_dim();
    const std::size_t n = chi.size();

    // Linearized sphere through the lifted nu: 2 x_i . z + w = |x_i|^2 for
    // members, <= for everyone else.  The quadratic terms cancel, so this is
    // exact rational linear feasibility in (z, w).
    QMat eq;
    QVec eq_rhs;
    QMat le;
    QVec le_rhs;
    for (std::size_t i = 0; i < n; ++i) {
        QVec x = lp.chart(i);
        QVec row(k + 1);
        for (int c = 0; c < k; ++c) row[c] = 2 * x[c];
        row[k] = 1;
        Rat rhs = norm_sq(x);
        if (nu.contains(static_cast<int>(i))) {
            eq.push_back(std::move(row));
            eq_rhs.push_back(rhs);
        } else {
            le.push_back(std::move(row));
            le_rhs.push_back(rhs);
        }
    }

    auto sol = solve_affine(eq, eq_rhs, k + 1);
    if (!sol) return false;  // no sphere passes through nu at all

    // Substitute z,w = particular + span(nullspace) into the inequalities.
    const std::size_t f = sol->nullspace.size();
    QMat a;
    QVec b;
    for (std::size_t r = 0; r < le.size(); ++r) {
        Rat base = dot(le[r], sol->particular);
        QVec row(f);
        for (std::size_t c = 0; c < f; ++c) row[c] = dot(le[r], sol->nullspace[c]);
        Rat slack = le_rhs[r] - base;
        if (f == 0) {
            if (slack < 0) return false;
        } else {
            a.push_back(std::move(row));
            b.push_back(slack);
        }
    }
    if (f == 0) return true;
    return linear_feasible(a, b);
}

}  // namespace chromatic
