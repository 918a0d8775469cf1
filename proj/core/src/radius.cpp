#include "chromatic/radius.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace chromatic {

const Rat& RadiusFunction::at(const Simplex& s) const {
    auto it = value_sq.find(s);
    if (it == value_sq.end()) throw input_error("simplex not in radius function: " + s.to_string());
    return it->second;
}

Rat RadiusFunction::max_finite_value() const {
    Rat m(0);
    for (const auto& [s, v] : value_sq) m = std::max(m, v);
    return m;
}

RadiusFunction radius_function(const ChromaticDelaunayMosaic& mosaic) {
    RadiusFunction rf;
    rf.mosaic = &mosaic;
    const auto& chi = mosaic.point_set;
    const int top = mosaic.top_dim();

    for (int p = top; p >= 0; --p) {
        // Coface values of one dimension higher, grouped per face.
        std::unordered_map<Simplex, Rat, SimplexHash> coface_min;
        if (p < top) {
            for (const auto& tau : mosaic.simplices_by_dim[p + 1]) {
                const Rat& tv = rf.value_sq.at(tau);
                for (int drop = 0; drop < tau.size(); ++drop) {
                    Simplex face = tau.without(drop);
                    auto it = coface_min.find(face);
                    if (it == coface_min.end())
                        coface_min.emplace(face, tv);
                    else if (tv < it->second)
                        it->second = tv;
                }
            }
        }
        for (const auto& sigma : mosaic.simplices_by_dim[p]) {
            Stack st = smallest_stack_through(chi, sigma);
            if (is_empty_stack(chi, st)) {
                rf.value_sq.emplace(sigma, st.stack_radius_sq);
            } else {
                auto it = coface_min.find(sigma);
                if (it == coface_min.end())
                    throw general_position_error(
                        "top simplex with non-empty smallest stack: " + sigma.to_string());
                rf.value_sq.emplace(sigma, it->second);
            }
        }
    }
    return rf;
}

RadiusFunction mono_radius_function(const ChromaticDelaunayMosaic& mosaic) {
    std::set<int> used(mosaic.point_set.colors.begin(), mosaic.point_set.colors.end());
    if (used.size() > 1) throw input_error("mono_radius_function needs a single-color mosaic");
    return radius_function(mosaic);
}

ChromaticDelaunayMosaic alpha_complex(const RadiusFunction& rf, const Rat& r_sq) {
    const auto& mosaic = *rf.mosaic;
    ChromaticDelaunayMosaic out;
    out.point_set = mosaic.point_set;
    for (const auto& level : mosaic.simplices_by_dim) {
        std::vector<Simplex> keep;
        for (const auto& s : level)
            if (rf.at(s) <= r_sq) keep.push_back(s);
        out.simplices_by_dim.push_back(std::move(keep));
    }
    while (!out.simplices_by_dim.empty() && out.simplices_by_dim.back().empty())
        out.simplices_by_dim.pop_back();
    return out;
}

std::vector<std::pair<Simplex, Rat>> IntervalPartition::critical_simplices() const {
    std::vector<std::pair<Simplex, Rat>> out;
    for (const auto& iv : intervals)
        if (iv.singleton()) out.push_back({iv.lower, iv.value_sq});
    std::sort(out.begin(), out.end());
    return out;
}

IntervalPartition verify_gdm(const RadiusFunction& rf) {
    // Group simplices by exact value.
    std::map<Rat, std::vector<Simplex>> groups;
    for (const auto& [s, v] : rf.value_sq) groups[v].push_back(s);

    IntervalPartition part;
    for (auto& [value, group] : groups) {
        std::sort(group.begin(), group.end(), [](const Simplex& a, const Simplex& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        // Maximal members: no proper superset in the group.
        std::vector<char> assigned(group.size(), 0);
        std::vector<std::size_t> maximal;
        for (std::size_t i = 0; i < group.size(); ++i) {
            bool is_max = true;
            for (std::size_t j = 0; j < group.size() && is_max; ++j)
                if (i != j && group[i].size() < group[j].size() &&
                    group[i].is_face_of(group[j]))
                    is_max = false;
            if (is_max) maximal.push_back(i);
        }
        for (std::size_t mi : maximal) {
            const Simplex& R = group[mi];
            // Members below R, and their common intersection P.
            std::vector<std::size_t> below;
            std::vector<int> common = R.vertices();
            for (std::size_t j = 0; j < group.size(); ++j) {
                if (!group[j].is_face_of(R)) continue;
                below.push_back(j);
                std::vector<int> next;
                for (int v : common)
                    if (group[j].contains(v)) next.push_back(v);
                common = std::move(next);
            }
            if (common.empty())
                throw validation_error("level " + rational_to_string(value) +
                                       ": empty intersection under " + R.to_string());
            Simplex P(common);
            // The set below R must be exactly the interval [P, R].
            std::size_t expect = std::size_t(1) << (R.size() - P.size());
            if (below.size() != expect)
                throw validation_error("level " + rational_to_string(value) + ": interval [" +
                                       P.to_string() + ", " + R.to_string() + "] has " +
                                       std::to_string(below.size()) + " members, expected " +
                                       std::to_string(expect));
            for (std::size_t j : below) {
                if (!P.is_face_of(group[j]))
                    throw validation_error("level " + rational_to_string(value) + ": " +
                                           group[j].to_string() + " is not above " +
                                           P.to_string());
                if (assigned[j])
                    throw validation_error("level " + rational_to_string(value) + ": " +
                                           group[j].to_string() +
                                           " belongs to two maximal intervals");
                assigned[j] = 1;
            }
            part.intervals.push_back({P, R, value});
        }
        for (std::size_t j = 0; j < group.size(); ++j)
            if (!assigned[j])
                throw validation_error("level " + rational_to_string(value) + ": " +
                                       group[j].to_string() + " not covered by any interval");
    }
    return part;
}

double grid_stack_oracle(const ChromaticPointSet& chi, const Simplex& nu, double tol) {
    if (chi.dim_d > 2) throw input_error("grid_stack_oracle supports d <= 2");
    if (chi.size() > 20) throw input_error("grid_stack_oracle point cap (20) exceeded");
    const int d = chi.dim_d;

    // Exact equidistance flat, then a double-precision beam search over it.
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
    if (!flat) throw general_position_error("degenerate equidistance system");

    std::vector<double> z0(d);
    for (int i = 0; i < d; ++i) z0[i] = to_double(flat->particular[i]);
    std::vector<std::vector<double>> dirs;
    for (const auto& v : flat->nullspace) {
        std::vector<double> dv(d);
        double norm = 0;
        for (int i = 0; i < d; ++i) {
            dv[i] = to_double(v[i]);
            norm += dv[i] * dv[i];
        }
        norm = std::sqrt(norm);
        for (auto& x : dv) x /= norm;
        dirs.push_back(dv);
    }
    const std::size_t f = dirs.size();

    std::vector<std::vector<double>> pts(chi.size(), std::vector<double>(d));
    for (std::size_t i = 0; i < chi.size(); ++i)
        for (int j = 0; j < d; ++j) pts[i][j] = to_double(chi.points[i][j]);

    double diam = 1.0;
    for (std::size_t i = 0; i < chi.size(); ++i)
        for (std::size_t j = i + 1; j < chi.size(); ++j) {
            double s = 0;
            for (int c = 0; c < d; ++c)
                s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
            diam = std::max(diam, std::sqrt(s));
        }

    const double slack = 1e-12 * diam * diam;
    auto objective = [&](const std::vector<double>& t, double* out) -> bool {
        std::vector<double> z(z0);
        for (std::size_t l = 0; l < f; ++l)
            for (int c = 0; c < d; ++c) z[c] += t[l] * dirs[l][c];
        // Radii fixed by pass-through; emptiness checked with a small slack.
        std::vector<double> radius_sq(chi.sigma_size, 0.0);
        for (const auto& [col, idx] : groups) {
            double s = 0;
            for (int c = 0; c < d; ++c)
                s += (z[c] - pts[idx[0]][c]) * (z[c] - pts[idx[0]][c]);
            radius_sq[col] = s;
        }
        double obj = 0;
        for (double r : radius_sq) obj = std::max(obj, r);
        for (std::size_t i = 0; i < chi.size(); ++i) {
            double s = 0;
            for (int c = 0; c < d; ++c) s += (z[c] - pts[i][c]) * (z[c] - pts[i][c]);
            if (s < radius_sq[chi.colors[i]] - slack) return false;  // strictly inside
        }
        *out = obj;
        return true;
    };

    if (f == 0) {
        double v = 0;
        if (!objective(std::vector<double>{}, &v))
            throw validation_error("grid oracle: unique center is not empty");
        return std::sqrt(v);
    }

    // Beam refinement: keep the best cells of each level, split each into a
    // subgrid, stop when the cell radius is far below tol.
    struct Cell {
        std::vector<double> center;
        double half = 0;
        double value = 0;
        bool feasible = false;
    };
    double range = 2.0 * diam + 1.0;
    // Recenter the parameter box near the point cloud; the nullspace basis is
    // orthonormal for d <= 2 (at most one nontrivial direction or the
    // standard basis), so projection suffices.
    std::vector<double> centroid(d, 0.0);
    for (const auto& p : pts)
        for (int c = 0; c < d; ++c) centroid[c] += p[c] / pts.size();
    std::vector<double> t_init(f, 0.0);
    for (std::size_t l = 0; l < f; ++l)
        for (int c = 0; c < d; ++c) t_init[l] += (centroid[c] - z0[c]) * dirs[l][c];

    std::vector<Cell> beam{{t_init, range, 0, false}};
    const int grid = 7;
    const std::size_t keep = 18;
    const int max_rounds = 80;
    double best = -1;

    for (int round = 0; round < max_rounds; ++round) {
        std::vector<Cell> next;
        for (const auto& cell : beam) {
            std::vector<int> idx(f, 0);
            while (true) {
                Cell c;
                c.center.resize(f);
                for (std::size_t l = 0; l < f; ++l)
                    c.center[l] =
                        cell.center[l] + cell.half * (2.0 * idx[l] / (grid - 1) - 1.0);
                c.half = cell.half / (grid - 1) * 1.6;
                c.feasible = objective(c.center, &c.value);
                next.push_back(c);
                std::size_t l = 0;
                while (l < f && ++idx[l] == grid) idx[l++] = 0;
                if (l == f) break;
            }
        }
        std::sort(next.begin(), next.end(), [](const Cell& a, const Cell& b) {
            if (a.feasible != b.feasible) return a.feasible;
            return a.value < b.value;
        });
        if (next.size() > keep) next.resize(keep);
        beam = std::move(next);
        for (const auto& c : beam)
            if (c.feasible && (best < 0 || c.value < best)) best = c.value;
        if (!beam.empty() && beam.front().half < tol * tol / (8 * range) && best >= 0) break;
    }
    if (best < 0) throw validation_error("grid oracle: no empty stack found within range");
    return std::sqrt(best);
}

}  // namespace chromatic
