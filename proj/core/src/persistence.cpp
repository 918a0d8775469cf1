#include "chromatic/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace chromatic {

namespace {

bool order_less(const std::pair<Simplex, Rat>& a, const std::pair<Simplex, Rat>& b) {
    if (a.second != b.second) return a.second < b.second;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
}

}  // namespace

FiltrationOrder filtration_order(const std::vector<std::pair<Simplex, Rat>>& filtered) {
    std::vector<std::pair<Simplex, Rat>> items = filtered;
    std::sort(items.begin(), items.end(), order_less);
    FiltrationOrder order;
    order.simplices.reserve(items.size());
    order.values.reserve(items.size());
    for (auto& [s, v] : items) {
        order.position.emplace(s, static_cast<int>(order.simplices.size()));
        order.simplices.push_back(s);
        order.values.push_back(v);
    }
    // Faces must precede cofaces; with the (value, dim, lex) sort this can
    // only fail when the input violates monotonicity.
    for (int i = 0; i < order.size(); ++i) {
        const Simplex& s = order.simplices[i];
        if (s.size() == 1) continue;
        for (int drop = 0; drop < s.size(); ++drop) {
            auto it = order.position.find(s.without(drop));
            if (it == order.position.end())
                throw input_error("filtration misses a face of " + s.to_string());
            if (order.values[it->second] > order.values[i])
                throw input_error("monotonicity violated at " + s.to_string());
        }
    }
    return order;
}

FiltrationOrder filtration_order(const RadiusFunction& rf) {
    std::vector<std::pair<Simplex, Rat>> items(rf.value_sq.begin(), rf.value_sq.end());
    return filtration_order(items);
}

ReductionResult reduce_boundary(const FiltrationOrder& order) {
    const int n = order.size();
    ReductionResult res;
    res.pair_of.assign(n, -1);
    res.is_positive.assign(n, 1);

    std::vector<std::vector<int>> columns(n);  // reduced columns, ascending rows
    std::vector<int> pivot_owner(n, -1);       // row -> column with that low

    std::vector<int> tmp;
    for (int j = 0; j < n; ++j) {
        const Simplex& s = order.simplices[j];
        std::vector<int>& col = columns[j];
        if (s.size() > 1) {
            for (int drop = 0; drop < s.size(); ++drop)
                col.push_back(order.position.at(s.without(drop)));
            std::sort(col.begin(), col.end());
        }
        while (!col.empty()) {
            int low = col.back();
            int owner = pivot_owner[low];
            if (owner < 0) break;
            // col ^= columns[owner]
            const auto& other = columns[owner];
            tmp.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(tmp));
            col.swap(tmp);
        }
        if (!col.empty()) {
            int low = col.back();
            pivot_owner[low] = j;
            res.pair_of[j] = low;
            res.is_positive[j] = 0;
        }
    }
    for (int j = 0; j < n; ++j)
        if (res.is_positive[j] && pivot_owner[j] < 0) res.essential_positions.push_back(j);
    return res;
}

std::vector<DiagramPoint> PersistenceDiagram::in_dim(int p, bool include_zero) const {
    std::vector<DiagramPoint> out;
    for (const auto& pt : points)
        if (pt.p == p && (include_zero || pt.essential || !pt.zero_persistence()))
            out.push_back(pt);
    return out;
}

int PersistenceDiagram::max_dim() const {
    int m = -1;
    for (const auto& pt : points) m = std::max(m, pt.p);
    return m;
}

PersistenceDiagram diagram(const FiltrationOrder& order, const ReductionResult& red,
                           const Rat& C_sq) {
    PersistenceDiagram dgm;
    dgm.threshold_C_sq = C_sq;
    const int n = order.size();
    for (int j = 0; j < n; ++j) {
        if (red.is_positive[j]) continue;
        int i = red.pair_of[j];
        DiagramPoint pt;
        pt.p = order.simplices[i].dim();
        pt.birth_sq = order.values[i];
        pt.death_sq = order.values[j];
        pt.birth_pos = i;
        pt.death_pos = j;
        dgm.points.push_back(std::move(pt));
    }
    for (int i : red.essential_positions) {
        DiagramPoint pt;
        pt.p = order.simplices[i].dim();
        pt.birth_sq = order.values[i];
        pt.death_sq = C_sq;
        pt.essential = true;
        pt.birth_pos = i;
        dgm.points.push_back(std::move(pt));
    }
    for (const auto& pt : dgm.points)
        if (!(pt.birth_sq < C_sq) && !(pt.birth_sq == 0 && C_sq == 0))
            throw input_error("threshold C_sq is not larger than every birth");
    return dgm;
}

std::size_t betti_curve(const PersistenceDiagram& dgm, int p, const Rat& r_sq) {
    std::size_t count = 0;
    for (const auto& pt : dgm.points) {
        if (pt.p != p) continue;
        if (pt.birth_sq > r_sq) continue;
        if (pt.essential || pt.death_sq > r_sq) ++count;
    }
    return count;
}

namespace {

struct BotPoint {
    double b, d;
};

// Perfect matching test on the doubled bipartite graph: left side is the
// points of a plus one diagonal slot per point of b, right side symmetric.
// Diagonal slots connect to each other freely, a point to a point when the
// L-infinity cost is within delta, and a point to its diagonal slot when half
// its persistence is.
bool matchable(const std::vector<BotPoint>& a, const std::vector<BotPoint>& b, double delta) {
    const int n1 = static_cast<int>(a.size()), n2 = static_cast<int>(b.size());
    const int L = n1 + n2, R = n2 + n1;
    auto cost = [](const BotPoint& x, const BotPoint& y) {
        return std::max(std::abs(x.b - y.b), std::abs(x.d - y.d));
    };
    auto diag = [](const BotPoint& x) { return (x.d - x.b) / 2.0; };

    std::vector<std::vector<int>> adj(L);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j)
            if (cost(a[i], b[j]) <= delta) adj[i].push_back(j);
        if (diag(a[i]) <= delta) adj[i].push_back(n2 + i);  // own diagonal slot
    }
    for (int j = 0; j < n2; ++j) {
        int left = n1 + j;  // diagonal slot standing in for b[j]
        if (diag(b[j]) <= delta) adj[left].push_back(j);
        for (int i = 0; i < n1; ++i) adj[left].push_back(n2 + i);  // diag-diag, free
    }

    std::vector<int> match_r(R, -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_r[v] < 0 || augment(match_r[v])) {
                match_r[v] = u;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int u = 0; u < L; ++u) {
        visited.assign(R, 0);
        if (augment(u)) ++matched;
    }
    return matched == L;
}

}  // namespace

double bottleneck(const std::vector<DiagramPoint>& d1, const std::vector<DiagramPoint>& d2) {
    auto convert = [](const std::vector<DiagramPoint>& pts) {
        std::vector<BotPoint> out;
        for (const auto& p : pts) {
            if (!p.essential && p.birth_sq == p.death_sq) continue;
            out.push_back({sqrt_to_double(p.birth_sq), sqrt_to_double(p.death_sq)});
        }
        return out;
    };
    std::vector<BotPoint> a = convert(d1), b = convert(d2);
    if (a.empty() && b.empty()) return 0.0;

    std::vector<double> candidates{0.0};
    for (const auto& x : a) candidates.push_back((x.d - x.b) / 2.0);
    for (const auto& y : b) candidates.push_back((y.d - y.b) / 2.0);
    for (const auto& x : a)
        for (const auto& y : b)
            candidates.push_back(std::max(std::abs(x.b - y.b), std::abs(x.d - y.d)));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (matchable(a, b, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

}  // namespace chromatic
