#include "chromatic/predicates.hpp"

namespace chromatic {

int orientation(const std::vector<QVec>& pts) {
    if (pts.empty()) throw input_error("orientation needs at least one point");
    const std::size_t k = pts.size() - 1;
    for (const auto& p : pts)
        if (p.size() != k) throw input_error("orientation: need k+1 points of dimension k");
    QMat m(k, qvec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) m[i][c] = pts[i + 1][c] - pts[0][c];
    Rat det = determinant(std::move(m));
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

int in_sphere_flat(const std::vector<QVec>& pts) {
    if (pts.size() < 3) throw input_error("in_sphere_flat needs k+2 >= 3 points");
    const std::size_t k = pts.size() - 2;
    const std::size_t amb = pts[0].size();
    for (const auto& p : pts)
        if (p.size() != amb) throw input_error("in_sphere_flat: mixed ambient dimensions");

    // Difference vectors against the first point; the query is the last.
    std::vector<QVec> y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = sub(pts[i + 1], pts[0]);
    QVec w = sub(pts.back(), pts[0]);

    // Gram data.  The sign of the Schur complement sw - h G^{-1} l is the
    // position of the query relative to the circumsphere of the first k+1
    // points, intrinsic to their flat.
    QMat m(k + 1, qvec(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = dot(y[i], y[j]);
        m[i][k] = norm_sq(y[i]);
    }
    for (std::size_t j = 0; j < k; ++j) m[k][j] = dot(w, y[j]);
    m[k][k] = norm_sq(w);

    // Degenerate base: Gram of the y_i must be nonsingular.
    QMat gram(k, qvec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = m[i][j];
    if (determinant(gram) == 0)
        throw general_position_error("in_sphere_flat: base points affinely dependent");

    // The query must lie in the flat of the base points.
    {
        QMat span(k + 1, qvec(amb));
        for (std::size_t i = 0; i < k; ++i) span[i] = y[i];
        span[k] = w;
        QMat base(k, qvec(amb));
        for (std::size_t i = 0; i < k; ++i) base[i] = y[i];
        if (rank(std::move(span)) != rank(std::move(base)))
            throw input_error("in_sphere_flat: query point outside the flat");
    }

    Rat det = determinant(std::move(m));
    return det < 0 ? -1 : det > 0 ? 1 : 0;
}

}  // namespace chromatic
