#include "chromatic/points.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace chromatic {

std::vector<int> ChromaticPointSet::color_class(int j) const {
    std::vector<int> idx;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == j) idx.push_back(static_cast<int>(i));
    return idx;
}

ChromaticPointSet ChromaticPointSet::restrict_colors(const std::vector<int>& tau,
                                                     std::vector<int>* original_index) const {
    std::set<int> keep(tau.begin(), tau.end());
    if (keep.empty()) throw input_error("empty color subset");
    // Colors are renumbered by their order in sorted tau.
    std::vector<int> remap(sigma_size, -1);
    int next = 0;
    for (int c : keep) {
        if (c < 0 || c >= sigma_size) throw input_error("color outside sigma");
        remap[c] = next++;
    }
    ChromaticPointSet out;
    out.dim_d = dim_d;
    out.sigma_size = next;
    out.require_general_position = require_general_position;
    if (original_index) original_index->clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (remap[colors[i]] < 0) continue;
        out.points.push_back(points[i]);
        out.colors.push_back(remap[colors[i]]);
        if (original_index) original_index->push_back(static_cast<int>(i));
    }
    return out;
}

void ChromaticPointSet::validate() const {
    if (dim_d < 1 || dim_d > 3) throw input_error("ambient dimension must be 1..3");
    if (sigma_size < 1) throw input_error("need at least one color");
    if (points.size() != colors.size()) throw input_error("points/colors length mismatch");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim_d) throw input_error("point dimension mismatch");
    for (int c : colors)
        if (c < 0 || c >= sigma_size) throw input_error("color index outside sigma");
    std::set<QVec> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second) throw input_error("duplicate point in input");
}

Rat ChromaticPointSet::min_interpoint_dist_sq() const {
    Rat best(-1);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Rat d = norm_sq(sub(points[i], points[j]));
            if (best < 0 || d < best) best = d;
        }
    return best;
}

double ChromaticPointSet::spread() const {
    if (points.size() < 2) return 1.0;
    Rat dmin(-1), dmax(0);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Rat d = norm_sq(sub(points[i], points[j]));
            if (dmin < 0 || d < dmin) dmin = d;
            if (d > dmax) dmax = d;
        }
    return std::sqrt(to_double(dmax) / to_double(dmin));
}

LiftedPointSet lift(const ChromaticPointSet& chi, const Rat& scale_M) {
    if (scale_M <= 0) throw input_error("lift scale must be positive");
    if (chi.sigma_size < 1) throw input_error("sigma_size must be >= 1");
    LiftedPointSet out;
    out.s = chi.s();
    out.d = chi.dim_d;
    out.scale_M = scale_M;
    out.ambient_dim = out.s + 1 + out.d;
    out.fiber_index = chi.colors;
    out.lifted_points.reserve(chi.points.size());
    for (std::size_t i = 0; i < chi.points.size(); ++i) {
        QVec p = qvec(out.ambient_dim);
        int j = chi.colors[i];
        if (j > 0) p[j] = scale_M;  // u_0 = origin, u_j = M e_j
        for (int c = 0; c < out.d; ++c) p[out.s + 1 + c] = chi.points[i][c];
        out.lifted_points.push_back(std::move(p));
    }
    return out;
}

QVec LiftedPointSet::chart(std::size_t i) const {
    QVec c(lifted_points[i].begin() + 1, lifted_points[i].end());
    return c;
}

ChromaticPointSet jitter(const ChromaticPointSet& chi, std::uint64_t seed, const Rat& magnitude) {
    ChromaticPointSet out = chi;
    if (chi.points.size() < 2) return out;
    Rat min_d = chi.min_interpoint_dist_sq();
    // Scale: magnitude * min distance, bounded by a dyadic below sqrt(min_d).
    double scale_target = to_double(magnitude) * std::sqrt(to_double(min_d));
    int e = static_cast<int>(std::floor(std::log2(std::max(scale_target, 1e-300))));
    Rat scale = e >= 0 ? Rat(Int(1) << e, 1) : Rat(1, Int(1) << (-e));
    DyadicSampler rng(seed, 30);
    for (auto& p : out.points)
        for (auto& c : p) c += (rng.unit() - Rat(1, 2)) * scale;
    return out;
}

}  // namespace chromatic
