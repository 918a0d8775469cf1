#pragma once

#include <optional>
#include <vector>

#include "chromatic/rational.hpp"

namespace chromatic {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major

inline QVec qvec(std::size_t n) { return QVec(n, Rat(0)); }
inline QMat qmat(std::size_t rows, std::size_t cols) { return QMat(rows, qvec(cols)); }

Rat dot(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
Rat norm_sq(const QVec& a);

// Exact determinant by fraction-free elimination.
Rat determinant(QMat m);

std::size_t rank(QMat m);

// Solution set of A x = b described by a particular solution and a nullspace
// basis (columns).  Empty optional when inconsistent.
struct AffineSolution {
    QVec particular;
    std::vector<QVec> nullspace;  // basis vectors of the homogeneous system
};
std::optional<AffineSolution> solve_affine(QMat a, QVec b, std::size_t cols);

// Unique solution of a square nonsingular system; empty optional when the
// system is singular or inconsistent.
std::optional<QVec> solve_unique(QMat a, QVec b);

}  // namespace chromatic
