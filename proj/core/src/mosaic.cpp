#include "chromatic/mosaic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "chromatic/predicates.hpp"

namespace chromatic {

Simplex::Simplex(std::vector<int> verts) {
    if (verts.empty() || verts.size() > kMaxVerts) throw input_error("bad simplex size");
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i] == verts[i - 1]) throw input_error("repeated vertex in simplex");
    size_ = static_cast<std::int32_t>(verts.size());
    for (int i = 0; i < size_; ++i) v_[i] = verts[i];
}

bool Simplex::contains(int vertex) const {
    for (int i = 0; i < size_; ++i)
        if (v_[i] == vertex) return true;
    return false;
}

bool Simplex::is_face_of(const Simplex& other) const {
    int j = 0;
    for (int i = 0; i < size_; ++i) {
        while (j < other.size_ && other.v_[j] < v_[i]) ++j;
        if (j == other.size_ || other.v_[j] != v_[i]) return false;
        ++j;
    }
    return true;
}

Simplex Simplex::without(int position) const {
    std::vector<int> verts;
    for (int i = 0; i < size_; ++i)
        if (i != position) verts.push_back(v_[i]);
    return Simplex(verts);
}

std::string Simplex::to_string() const {
    std::string s = "{";
    for (int i = 0; i < size_; ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + "}";
}

std::size_t ChromaticDelaunayMosaic::total_size() const {
    std::size_t t = 0;
    for (const auto& level : simplices_by_dim) t += level.size();
    return t;
}

bool ChromaticDelaunayMosaic::contains(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d > top_dim()) return false;
    const auto& level = simplices_by_dim[d];
    return std::binary_search(level.begin(), level.end(), s);
}

std::vector<Simplex> ChromaticDelaunayMosaic::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(total_size());
    for (const auto& level : simplices_by_dim) out.insert(out.end(), level.begin(), level.end());
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Exact predicates on the paraboloid lift of the chart points.  Point i is
// lifted to (x_i, |p_i|^2 - eps_i) with eps_0 >> eps_1 >> ... infinitesimal:
// an index-based symbolic perturbation of the lift coordinate only.  It
// resolves every cospherical tie deterministically and leaves purely
// x-affine degeneracies (vertical hull facets) alone.
// ---------------------------------------------------------------------------

struct ScaledPoint {
    std::vector<Int> x;  // chart coordinates times den
    Int q;               // paraboloid value times den
    Int den;             // positive common denominator
};

ScaledPoint scale_point(const QVec& chart, const Rat& lift_value) {
    Int den(1);
    for (const auto& c : chart) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lift_value.get_den().get_mpz_t());
    ScaledPoint sp;
    sp.den = den;
    sp.x.reserve(chart.size());
    for (const auto& c : chart) sp.x.push_back(Int(c.get_num() * (den / c.get_den())));
    sp.q = lift_value.get_num() * (den / lift_value.get_den());
    return sp;
}

// Bareiss fraction-free elimination.
Int int_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Int(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < n; ++c) {
                m[r][c] = m[r][c] * m[col][col] - m[r][col] * m[col][c];
                mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

class HullPredicates {
public:
    static constexpr int kReference = -1;

    HullPredicates(int hull_dim) : m_(hull_dim) {}

    void add_point(const QVec& chart, const Rat& lift_value) {
        pts_.push_back(scale_point(chart, lift_value));
    }
    void set_reference(const QVec& chart, const Rat& lift_value) {
        ref_ = scale_point(chart, lift_value);
    }

    int hull_dim() const { return m_; }

    // Sign of the perturbed orientation determinant of the m+1 ids (rows are
    // differences against ids[0]; the last id is typically the query).  Sets
    // *tie when the unperturbed determinant vanished.
    int orient(const std::vector<int>& ids, bool* tie = nullptr) const {
        const int m = m_;
        assert(static_cast<int>(ids.size()) == m + 1);
        std::vector<std::vector<Int>> rows(m, std::vector<Int>(m));
        std::vector<Int> lambda(m);
        const ScaledPoint& base = at(ids[0]);
        for (int j = 1; j <= m; ++j) {
            const ScaledPoint& pj = at(ids[j]);
            auto& row = rows[j - 1];
            for (int c = 0; c < m - 1; ++c) row[c] = pj.x[c] * base.den - base.x[c] * pj.den;
            row[m - 1] = pj.q * base.den - base.q * pj.den;
            lambda[j - 1] = pj.den * base.den;
        }
        Int d = int_det(rows);
        if (d != 0) {
            if (tie) *tie = false;
            return sgn(d);
        }
        if (tie) *tie = true;
        // Perturbation terms in decreasing magnitude: smallest point index
        // first.  The reference point carries no perturbation.
        std::vector<std::pair<int, int>> order;  // (point id, tuple position)
        for (int j = 0; j <= m; ++j)
            if (ids[j] != kReference) order.emplace_back(ids[j], j);
        std::sort(order.begin(), order.end());
        for (auto [pid, pos] : order) {
            (void)pid;
            std::vector<std::vector<Int>> mod = rows;
            if (pos == 0) {
                for (int r = 0; r < m; ++r) mod[r][m - 1] = lambda[r];
            } else {
                for (int r = 0; r < m; ++r) mod[r][m - 1] = 0;
                mod[pos - 1][m - 1] = -lambda[pos - 1];
            }
            Int coef = int_det(std::move(mod));
            if (coef != 0) return sgn(coef);
        }
        return 0;
    }

    // Sign of the x-part minor of the facet's difference rows; zero means the
    // facet is vertical (parallel to the lift axis).  Unaffected by the
    // perturbation.
    int x_minor_sign(const std::vector<int>& verts) const {
        const int m = m_;
        assert(static_cast<int>(verts.size()) == m);
        std::vector<std::vector<Int>> rows(m - 1, std::vector<Int>(m - 1));
        const ScaledPoint& base = pts_[verts[0]];
        for (int j = 1; j < m; ++j) {
            const ScaledPoint& pj = pts_[verts[j]];
            for (int c = 0; c < m - 1; ++c)
                rows[j - 1][c] = pj.x[c] * base.den - base.x[c] * pj.den;
        }
        return sgn(int_det(std::move(rows)));
    }

    // Unperturbed in-sphere style test used by the strict general-position
    // post-check: zero iff the query lies on the lifted hyperplane of verts.
    bool cospherical(const std::vector<int>& verts, int query) const {
        std::vector<int> ids = verts;
        ids.push_back(query);
        const int m = m_;
        std::vector<std::vector<Int>> rows(m, std::vector<Int>(m));
        const ScaledPoint& base = pts_[ids[0]];
        for (int j = 1; j <= m; ++j) {
            const ScaledPoint& pj = pts_[ids[j]];
            for (int c = 0; c < m - 1; ++c)
                rows[j - 1][c] = pj.x[c] * base.den - base.x[c] * pj.den;
            rows[j - 1][m - 1] = pj.q * base.den - base.q * pj.den;
        }
        return int_det(std::move(rows)) == 0;
    }

private:
    static int sgn(const Int& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
    const ScaledPoint& at(int id) const { return id == kReference ? ref_ : pts_[id]; }

    std::vector<ScaledPoint> pts_;
    ScaledPoint ref_;
    int m_;
};

struct Facet {
    std::vector<int> verts;      // sorted, size m
    int sign_ref = 0;            // orientation sign with the reference appended
    std::vector<int> neighbors;  // neighbors[i] across the ridge opposite verts[i]
    std::vector<int> conflicts;  // unprocessed points strictly beyond
    bool dead = false;
};

class IncrementalHull {
public:
    IncrementalHull(HullPredicates& pred, const std::vector<QVec>& lifted_rational,
                    bool strict_gp)
        : pred_(pred), lifted_(lifted_rational), strict_gp_(strict_gp) {}

    void run(const std::vector<int>& order);

    std::vector<std::vector<int>> live_facets() const {
        std::vector<std::vector<int>> out;
        for (const auto& f : facets_)
            if (!f.dead) out.push_back(f.verts);
        return out;
    }

private:
    bool visible(int facet, int point) {
        Facet& f = facets_[facet];
        std::vector<int> ids = f.verts;
        ids.push_back(point);
        bool tie = false;
        int s = pred_.orient(ids, &tie);
        if (tie && point != HullPredicates::kReference) note_violation(ids);
        return s != 0 && s == -f.sign_ref;
    }

    void note_violation(const std::vector<int>& ids) {
        if (!strict_gp_) return;
        std::string msg = "general position violated; cospherical lifted points:";
        for (int id : ids) msg += " " + std::to_string(id);
        throw general_position_error(msg);
    }

    int sign_vs_reference(const std::vector<int>& verts) {
        std::vector<int> ids = verts;
        ids.push_back(HullPredicates::kReference);
        int s = pred_.orient(ids);
        if (s == 0)
            throw general_position_error("interior reference lies on a facet hyperplane");
        return s;
    }

    // True affine independence of the lifted points with the given ids.
    bool independent(const std::vector<int>& ids) const {
        QMat rows(ids.size() - 1);
        for (std::size_t i = 1; i < ids.size(); ++i) rows[i - 1] = sub(lifted_[ids[i]], lifted_[ids[0]]);
        return rank(std::move(rows)) == ids.size() - 1;
    }

    std::vector<int> choose_initial(const std::vector<int>& order);
    void insert_point(int p, int seed_facet);

    HullPredicates& pred_;
    const std::vector<QVec>& lifted_;  // (chart, q) rational rows for rank checks
    bool strict_gp_;
    std::vector<Facet> facets_;
    std::vector<std::vector<int>> point_facets_;  // conflict facets per point (lazy)
    std::vector<int> pending_;
    std::vector<char> stamp_;
    int round_ = 0;

    friend ChromaticDelaunayMosaic chromatic::build_mosaic(const ChromaticPointSet&,
                                                           const BuildOptions&);
};

std::vector<int> IncrementalHull::choose_initial(const std::vector<int>& order) {
    const int m = pred_.hull_dim();
    std::vector<int> base;
    std::vector<int> rest;
    for (int id : order) {
        if (static_cast<int>(base.size()) == m + 1) {
            rest.push_back(id);
            continue;
        }
        base.push_back(id);
        if (base.size() >= 2 && !independent(base)) {
            base.pop_back();
            rest.push_back(id);
        }
    }
    if (static_cast<int>(base.size()) != m + 1)
        throw general_position_error(
            "degenerate input: lifted points span no full-dimensional simplex "
            "(all cospherical or confined to a lower flat)");
    pending_ = rest;
    return base;
}

void IncrementalHull::run(const std::vector<int>& order) {
    const int m = pred_.hull_dim();
    std::vector<int> base = choose_initial(order);

    // Interior reference: centroid of the initial lifted simplex.
    QVec centroid = qvec(lifted_[base[0]].size());
    for (int id : base)
        for (std::size_t c = 0; c < centroid.size(); ++c) centroid[c] += lifted_[id][c];
    for (auto& c : centroid) c /= static_cast<int>(base.size());
    QVec chart(centroid.begin(), centroid.end() - 1);
    pred_.set_reference(chart, centroid.back());

    point_facets_.assign(lifted_.size(), {});

    // Initial simplex facets.
    for (int skip = 0; skip <= m; ++skip) {
        Facet f;
        for (int i = 0; i <= m; ++i)
            if (i != skip) f.verts.push_back(base[i]);
        std::sort(f.verts.begin(), f.verts.end());
        f.sign_ref = sign_vs_reference(f.verts);
        facets_.push_back(std::move(f));
    }
    const int nf = static_cast<int>(facets_.size());
    for (int a = 0; a < nf; ++a) {
        facets_[a].neighbors.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            // Neighbor across the ridge opposite verts[i]: the unique other
            // initial facet avoiding... containing all of ridge.
            for (int b = 0; b < nf; ++b) {
                if (b == a) continue;
                bool has_all = true;
                for (int j = 0; j < m; ++j) {
                    if (j == i) continue;
                    if (!std::count(facets_[b].verts.begin(), facets_[b].verts.end(),
                                    facets_[a].verts[j])) {
                        has_all = false;
                        break;
                    }
                }
                if (has_all) {
                    facets_[a].neighbors[i] = b;
                    break;
                }
            }
        }
    }
    for (int id : pending_) {
        for (int fi = 0; fi < nf; ++fi)
            if (visible(fi, id)) {
                facets_[fi].conflicts.push_back(id);
                point_facets_[id].push_back(fi);
            }
    }

    for (int p : pending_) {
        int seed = -1;
        for (int fi : point_facets_[p])
            if (!facets_[fi].dead) {
                seed = fi;
                break;
            }
        if (seed < 0)
            throw general_position_error("lifted point " + std::to_string(p) +
                                         " sees no hull facet (convex position violated)");
        insert_point(p, seed);
    }
}

void IncrementalHull::insert_point(int p, int seed_facet) {
    const int m = pred_.hull_dim();
    // BFS over the visible region.
    std::vector<int> visible_facets;
    std::vector<std::pair<int, int>> horizon;  // (visible facet, opposite-vertex pos)
    std::vector<int> stack{seed_facet};
    std::unordered_map<int, char> state;  // 1 visible, 2 checked-invisible
    state[seed_facet] = 1;
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        visible_facets.push_back(fi);
        for (int i = 0; i < m; ++i) {
            int nb = facets_[fi].neighbors[i];
            assert(nb >= 0);
            auto it = state.find(nb);
            if (it == state.end()) {
                if (visible(nb, p)) {
                    state[nb] = 1;
                    stack.push_back(nb);
                } else {
                    state[nb] = 2;
                    horizon.emplace_back(fi, i);
                }
            } else if (it->second == 2) {
                horizon.emplace_back(fi, i);
            }
        }
    }

    // New facets over horizon ridges.
    std::map<std::vector<int>, std::pair<int, int>> ridge_map;  // ridge -> (facet, pos)
    std::vector<int> new_ids;
    for (auto [fv, opp] : horizon) {
        const Facet& old = facets_[fv];
        std::vector<int> ridge;
        for (int j = 0; j < m; ++j)
            if (j != opp) ridge.push_back(old.verts[j]);
        int outside = old.neighbors[opp];

        Facet nf;
        nf.verts = ridge;
        nf.verts.push_back(p);
        std::sort(nf.verts.begin(), nf.verts.end());
        nf.sign_ref = sign_vs_reference(nf.verts);
        nf.neighbors.assign(m, -1);
        int id = static_cast<int>(facets_.size());

        // Wire across the horizon ridge.
        int pos_p = static_cast<int>(std::lower_bound(nf.verts.begin(), nf.verts.end(), p) -
                                     nf.verts.begin());
        nf.neighbors[pos_p] = outside;
        Facet& out_f = facets_[outside];
        for (int j = 0; j < m; ++j)
            if (out_f.neighbors[j] == fv) {
                out_f.neighbors[j] = id;
                break;
            }
        facets_.push_back(std::move(nf));
        new_ids.push_back(id);

        // Internal ridges (those containing p).
        for (int j = 0; j < m; ++j) {
            if (facets_[id].verts[j] == p) continue;
            std::vector<int> r;
            for (int t = 0; t < m; ++t)
                if (t != j) r.push_back(facets_[id].verts[t]);
            auto it = ridge_map.find(r);
            if (it == ridge_map.end()) {
                ridge_map.emplace(std::move(r), std::make_pair(id, j));
            } else {
                facets_[id].neighbors[j] = it->second.first;
                facets_[it->second.first].neighbors[it->second.second] = id;
            }
        }
    }

    // Collect conflict candidates from dying facets, then retire them.
    std::vector<int> candidates;
    std::unordered_map<int, char> seen;
    for (int fv : visible_facets) {
        for (int c : facets_[fv].conflicts) {
            if (c == p || seen.count(c)) continue;
            seen[c] = 1;
            candidates.push_back(c);
        }
        facets_[fv].dead = true;
        facets_[fv].conflicts.clear();
    }
    for (int c : candidates) {
        for (int id : new_ids)
            if (visible(id, c)) {
                facets_[id].conflicts.push_back(c);
                point_facets_[c].push_back(id);
            }
    }
}

// Deterministic Fisher-Yates with an explicit generator.
std::vector<int> shuffled_order(std::size_t n, std::uint64_t seed) {
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

ChromaticDelaunayMosaic closure_from_tops(const ChromaticPointSet& chi,
                                          const std::vector<std::vector<int>>& tops) {
    std::vector<std::unordered_set<Simplex, SimplexHash>> levels;
    auto insert = [&](const Simplex& s) {
        int d = s.dim();
        if (d >= static_cast<int>(levels.size())) levels.resize(d + 1);
        levels[d].insert(s);
    };
    for (const auto& top : tops) {
        const int k = static_cast<int>(top.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> verts;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) verts.push_back(top[i]);
            insert(Simplex(verts));
        }
    }
    ChromaticDelaunayMosaic mosaic;
    mosaic.point_set = chi;
    mosaic.simplices_by_dim.resize(levels.size());
    for (std::size_t d = 0; d < levels.size(); ++d) {
        auto& out = mosaic.simplices_by_dim[d];
        out.assign(levels[d].begin(), levels[d].end());
        std::sort(out.begin(), out.end());
    }
    if (!mosaic.simplices_by_dim.empty() &&
        mosaic.simplices_by_dim[0].size() != chi.size())
        throw general_position_error("mosaic does not cover every vertex");
    return mosaic;
}

}  // namespace

ChromaticDelaunayMosaic build_mosaic(const ChromaticPointSet& chi, const BuildOptions& opts) {
    chi.validate();
    const int k = chi.s() + chi.dim_d;
    if (k > 4)
        throw input_error("s+d = " + std::to_string(k) + " exceeds the supported range (<= 4)");
    const std::size_t n = chi.size();
    if (n == 0) throw input_error("empty point set");

    LiftedPointSet lp = lift(chi, opts.scale_M);
    std::vector<QVec> lifted_rows;  // (chart, |p|^2) per point
    lifted_rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        QVec chart = lp.chart(i);
        Rat q = norm_sq(lp.lifted_points[i]);
        chart.push_back(q);
        lifted_rows.push_back(std::move(chart));
    }

    // Few points: the mosaic is the full simplex when the charts are affinely
    // independent (every subset then has an empty circumscribed sphere).
    if (n <= static_cast<std::size_t>(k + 1)) {
        QMat rows;
        for (std::size_t i = 1; i < n; ++i) {
            QVec ci(lifted_rows[i].begin(), lifted_rows[i].end() - 1);
            QVec c0(lifted_rows[0].begin(), lifted_rows[0].end() - 1);
            rows.push_back(sub(ci, c0));
        }
        if (rank(rows) != n - 1)
            throw general_position_error("degenerate input: points affinely dependent");
        std::vector<int> top(n);
        for (std::size_t i = 0; i < n; ++i) top[i] = static_cast<int>(i);
        return closure_from_tops(chi, {top});
    }

    const int m = k + 1;  // hull dimension
    HullPredicates pred(m);
    for (std::size_t i = 0; i < n; ++i) {
        QVec chart(lifted_rows[i].begin(), lifted_rows[i].end() - 1);
        pred.add_point(chart, lifted_rows[i].back());
    }

    IncrementalHull hull(pred, lifted_rows, chi.require_general_position);
    hull.run(shuffled_order(n, opts.shuffle_seed));

    // Lower facets of the paraboloid lift: non-vertical facets whose x-minor
    // sign matches the reference sign (below-point visibility).
    std::vector<std::vector<int>> tops;
    for (const auto& f : hull.live_facets()) {
        int mx = pred.x_minor_sign(f);
        if (mx == 0) continue;  // vertical facet

        std::vector<int> ids = f;
        ids.push_back(HullPredicates::kReference);
        int sref = pred.orient(ids);
        if (mx == sref) tops.push_back(f);
    }
    if (tops.empty()) throw general_position_error("no lower hull facets found");

    if (chi.require_general_position) {
        // Post-check: no further point on the circumsphere of a Delaunay cell.
        for (const auto& top : tops)
            for (std::size_t q = 0; q < n; ++q) {
                if (std::count(top.begin(), top.end(), static_cast<int>(q))) continue;
                if (pred.cospherical(top, static_cast<int>(q))) {
                    std::string msg = "general position violated; cospherical lifted points:";
                    for (int id : top) msg += " " + std::to_string(id);
                    msg += " " + std::to_string(q);
                    throw general_position_error(msg);
                }
            }
    }

    return closure_from_tops(chi, tops);
}

ChromaticDelaunayMosaic restrict_mosaic(const ChromaticDelaunayMosaic& mosaic,
                                        const std::vector<int>& tau) {
    if (tau.empty()) throw input_error("empty color subset");
    std::set<int> keep(tau.begin(), tau.end());
    for (int c : keep)
        if (c < 0 || c >= mosaic.point_set.sigma_size) throw input_error("color outside sigma");
    ChromaticDelaunayMosaic out;
    out.point_set = mosaic.point_set;
    for (const auto& level : mosaic.simplices_by_dim) {
        std::vector<Simplex> filtered;
        for (const auto& s : level) {
            bool ok = true;
            for (int i = 0; i < s.size(); ++i)
                if (!keep.count(mosaic.point_set.colors[s[i]])) {
                    ok = false;
                    break;
                }
            if (ok) filtered.push_back(s);
        }
        out.simplices_by_dim.push_back(std::move(filtered));
    }
    while (!out.simplices_by_dim.empty() && out.simplices_by_dim.back().empty())
        out.simplices_by_dim.pop_back();
    return out;
}

SizeStats size_stats(const ChromaticDelaunayMosaic& mosaic) {
    SizeStats st;
    st.n_points = mosaic.point_set.size();
    for (const auto& level : mosaic.simplices_by_dim) {
        st.count_per_dim.push_back(level.size());
        st.total += level.size();
    }
    st.spread = mosaic.point_set.spread();
    return st;
}

}  // namespace chromatic
