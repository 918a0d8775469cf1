#include "chromatic/stack.hpp"

#include <algorithm>

namespace chromatic {

Rat Stack::max_radius_sq() const {
    Rat m(0);
    for (const auto& r : radius_sq_per_color) m = std::max(m, r);
    return m;
}

namespace {

struct ColorData {
    int color;
    QVec rep;        // one representative point of nu with this color
    QVec lin;        // linear part of g_j over the flat parameters
    Rat constant;    // constant part
};

}  // namespace

Stack smallest_stack_through(const ChromaticPointSet& chi, const Simplex& nu) {
    const int d = chi.dim_d;
    for (int i = 0; i < nu.size(); ++i)
        if (nu[i] < 0 || nu[i] >= static_cast<int>(chi.size()))
            throw input_error("simplex vertex out of range");

    // Colors used by nu, each with its point list.
    std::vector<std::pair<int, std::vector<int>>> groups;
    for (int i = 0; i < nu.size(); ++i) {
        int c = chi.colors[nu[i]];
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == c; });
        if (it == groups.end())
            groups.push_back({c, {nu[i]}});
        else
            it->second.push_back(nu[i]);
    }
    std::sort(groups.begin(), groups.end());

    // Equidistance constraints: within each color, all points of nu at equal
    // distance from the center.  2 (a - a0) . z = |a|^2 - |a0|^2.
    QMat eq;
    QVec rhs;
    for (const auto& [c, idx] : groups) {
        const QVec& a0 = chi.points[idx[0]];
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const QVec& a = chi.points[idx[t]];
            QVec row(d);
            for (int j = 0; j < d; ++j) row[j] = 2 * (a[j] - a0[j]);
            eq.push_back(std::move(row));
            rhs.push_back(norm_sq(a) - norm_sq(a0));
        }
    }
    auto flat = solve_affine(eq, rhs, d);
    if (!flat)
        throw general_position_error("degenerate equidistance system for simplex " +
                                     nu.to_string());

    const QVec& z0 = flat->particular;
    const auto& N = flat->nullspace;  // basis vectors in R^d
    const std::size_t mfree = N.size();

    // g_j(t) = |z0 + N t - a_j|^2 = t^T Q t + lin_j . t + const_j with a
    // common Gram part Q.
    QMat Q(mfree, qvec(mfree));
    for (std::size_t i = 0; i < mfree; ++i)
        for (std::size_t j = 0; j < mfree; ++j) Q[i][j] = dot(N[i], N[j]);

    std::vector<ColorData> cd;
    for (const auto& [c, idx] : groups) {
        ColorData e;
        e.color = c;
        e.rep = chi.points[idx[0]];
        QVec w = sub(z0, e.rep);
        e.constant = norm_sq(w);
        e.lin = qvec(mfree);
        for (std::size_t l = 0; l < mfree; ++l) e.lin[l] = 2 * dot(N[l], w);
        cd.push_back(std::move(e));
    }
    const std::size_t u = cd.size();

    auto value_at = [&](const ColorData& e, const QVec& t) {
        Rat v = e.constant + dot(e.lin, t);
        for (std::size_t i = 0; i < mfree; ++i)
            for (std::size_t j = 0; j < mfree; ++j) v += t[i] * Q[i][j] * t[j];
        return v;
    };

    QVec best_t;
    Rat best_v;
    bool have_best = false;

    if (mfree == 0) {
        best_t = qvec(0);
        best_v = Rat(0);
        for (const auto& e : cd) best_v = std::max(best_v, value_at(e, best_t));
        have_best = true;
    } else {
        // Enumerate candidate active subsets; the optimum's argmax set always
        // yields a feasible candidate, so the minimum over feasible
        // candidates is exact (max of convex quadratics with a shared
        // positive-definite part).
        for (unsigned mask = 1; mask < (1u << u); ++mask) {
            std::vector<int> S;
            for (std::size_t j = 0; j < u; ++j)
                if (mask & (1u << j)) S.push_back(static_cast<int>(j));

            // Equal-value constraints within S.
            QMat C;
            QVec e_rhs;
            for (std::size_t t = 1; t < S.size(); ++t) {
                QVec row(mfree);
                for (std::size_t l = 0; l < mfree; ++l)
                    row[l] = cd[S[0]].lin[l] - cd[S[t]].lin[l];
                C.push_back(std::move(row));
                e_rhs.push_back(cd[S[t]].constant - cd[S[0]].constant);
            }
            auto sub_flat = solve_affine(C, e_rhs, mfree);
            if (!sub_flat) continue;

            const QVec& t0 = sub_flat->particular;
            const auto& P = sub_flat->nullspace;
            QVec tstar;
            if (P.empty()) {
                tstar = t0;
            } else {
                // Minimize the common quadratic on t0 + span(P):
                // (2 P^T Q P) tau = -P^T (2 Q t0 + lin).
                const std::size_t pf = P.size();
                QVec grad0(mfree);
                for (std::size_t i = 0; i < mfree; ++i) {
                    grad0[i] = cd[S[0]].lin[i];
                    for (std::size_t j = 0; j < mfree; ++j) grad0[i] += 2 * Q[i][j] * t0[j];
                }
                QMat sys(pf, qvec(pf));
                QVec srhs(pf);
                for (std::size_t a = 0; a < pf; ++a) {
                    for (std::size_t b = 0; b < pf; ++b) {
                        Rat acc(0);
                        for (std::size_t i = 0; i < mfree; ++i)
                            for (std::size_t j = 0; j < mfree; ++j)
                                acc += P[a][i] * 2 * Q[i][j] * P[b][j];
                        sys[a][b] = acc;
                    }
                    srhs[a] = -dot(P[a], grad0);
                }
                auto tau = solve_unique(std::move(sys), std::move(srhs));
                if (!tau) continue;  // cannot happen for a positive-definite system
                tstar = t0;
                for (std::size_t a = 0; a < pf; ++a)
                    for (std::size_t i = 0; i < mfree; ++i) tstar[i] += (*tau)[a] * P[a][i];
            }

            Rat v = value_at(cd[S[0]], tstar);
            bool feasible = true;
            for (std::size_t j = 0; j < u && feasible; ++j) {
                if (mask & (1u << j)) continue;
                if (value_at(cd[j], tstar) > v) feasible = false;
            }
            if (!feasible) continue;
            if (!have_best || v < best_v) {
                best_v = v;
                best_t = tstar;
                have_best = true;
            }
        }
        if (!have_best)
            throw general_position_error("min-max stack solver found no candidate for " +
                                         nu.to_string());
    }

    Stack st;
    st.center = z0;
    for (std::size_t l = 0; l < mfree; ++l)
        for (int i = 0; i < d; ++i) st.center[i] += best_t[l] * N[l][i];
    st.radius_sq_per_color.assign(chi.sigma_size, Rat(0));
    for (const auto& e : cd)
        st.radius_sq_per_color[e.color] = norm_sq(sub(st.center, e.rep));
    st.stack_radius_sq = st.max_radius_sq();
    return st;
}

bool is_empty_stack(const ChromaticPointSet& chi, const Stack& stack) {
    for (std::size_t i = 0; i < chi.size(); ++i) {
        int c = chi.colors[i];
        const Rat& r_sq = stack.radius_sq_per_color[c];
        if (r_sq == 0) continue;  // empty interior
        if (norm_sq(sub(chi.points[i], stack.center)) < r_sq) return false;
    }
    return true;
}

}  // namespace chromatic
