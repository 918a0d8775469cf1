#include "chromatic/linalg.hpp"

#include <cassert>

namespace chromatic {

Rat dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

QVec sub(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Rat norm_sq(const QVec& a) { return dot(a, a); }

Rat determinant(QMat m) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

namespace {

// Row echelon; returns pivot column per row-of-echelon.
std::vector<std::size_t> echelonize(QMat& m, std::vector<int>* rhs_rows = nullptr) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (rhs_rows) std::swap((*rhs_rows)[p], (*rhs_rows)[r]);
        Rat inv = 1 / m[r][c];
        for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][c] == 0) continue;
            Rat f = m[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc) m[rr][cc] -= f * m[r][cc];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMat m) { return echelonize(m).size(); }

std::optional<AffineSolution> solve_affine(QMat a, QVec b, std::size_t cols) {
    const std::size_t rows = a.size();
    if (rows == 0) {
        AffineSolution sol;
        sol.particular = qvec(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            QVec v = qvec(cols);
            v[c] = 1;
            sol.nullspace.push_back(std::move(v));
        }
        return sol;
    }
    // Augment.
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    auto pivots = echelonize(aug);
    // Inconsistent if a pivot lands in the augmented column.
    for (auto p : pivots)
        if (p == cols) return std::nullopt;

    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    AffineSolution sol;
    sol.particular = qvec(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][cols];

    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v = qvec(cols);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][free_c];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::optional<QVec> solve_unique(QMat a, QVec b) {
    if (a.empty()) return std::nullopt;
    std::size_t cols = a[0].size();
    auto sol = solve_affine(std::move(a), std::move(b), cols);
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    return sol->particular;
}

}  // namespace chromatic
