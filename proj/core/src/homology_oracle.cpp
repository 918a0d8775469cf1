#include <algorithm>

#include "chromatic/persistence.hpp"

namespace chromatic {

namespace {

// Dense GF(2) column over a fixed row universe.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t rows = 0) : w((rows + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] ^= (std::uint64_t(1) << (i & 63)); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int high() const {
        for (std::size_t b = w.size(); b-- > 0;)
            if (w[b]) return static_cast<int>(b * 64 + 63 - __builtin_clzll(w[b]));
        return -1;
    }
    void operator^=(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    void mask_below(std::size_t rows_kept) {
        // Zero all rows with index < rows_kept... kept means masked out here:
        // clears rows [0, rows_kept).
        std::size_t full = rows_kept >> 6;
        for (std::size_t i = 0; i < full && i < w.size(); ++i) w[i] = 0;
        if (full < w.size() && (rows_kept & 63))
            w[full] &= ~((std::uint64_t(1) << (rows_kept & 63)) - 1);
    }
};

// Ranks after each column of a left-to-right elimination.
struct EchelonCounter {
    std::vector<Bits> basis;  // distinct high bits
    std::vector<int> owner_of_high;
    explicit EchelonCounter(std::size_t rows) : owner_of_high(rows, -1) {}

    // Returns true when the column was independent (rank grew).
    bool insert(Bits col) {
        while (col.any()) {
            int h = col.high();
            int o = owner_of_high[h];
            if (o < 0) {
                owner_of_high[h] = static_cast<int>(basis.size());
                basis.push_back(std::move(col));
                return true;
            }
            col ^= basis[o];
        }
        return false;
    }
};

}  // namespace

int PersistentBettiTable::multiplicity(int p, int i, int j) const {
    if (i < 1 || j > n || i >= j) return 0;
    return beta(p, i, j - 1) - beta(p, i, j) - beta(p, i - 1, j - 1) + beta(p, i - 1, j);
}

int PersistentBettiTable::essential_multiplicity(int p, int i) const {
    if (i < 1) return 0;
    return beta(p, i, n) - beta(p, i - 1, n);
}

PersistentBettiTable homology_oracle(const FiltrationOrder& order) {
    const int n = order.size();
    if (n > 300) throw input_error("homology_oracle: simplex cap (300) exceeded");

    int max_p = 0;
    for (const auto& s : order.simplices) max_p = std::max(max_p, s.dim());

    PersistentBettiTable table;
    table.n = n;
    table.max_p = max_p;
    table.tables.assign(max_p + 1, std::vector<std::int32_t>((n + 1) * (n + 1), 0));

    // Boundary columns in the global position indexing.
    std::vector<Bits> boundary(n, Bits(n));
    for (int j = 0; j < n; ++j) {
        const Simplex& s = order.simplices[j];
        if (s.size() == 1) continue;
        for (int drop = 0; drop < s.size(); ++drop)
            boundary[j].set(order.position.at(s.without(drop)));
    }

    for (int p = 0; p <= max_p; ++p) {
        // Number of p-simplices among the first i, and cycle ranks
        // z_p(i) = count_p(i) - rank d_p(first i columns).
        std::vector<int> count_p(n + 1, 0);
        std::vector<int> z(n + 1, 0);
        {
            EchelonCounter ech(n);
            int r = 0;
            for (int i = 1; i <= n; ++i) {
                count_p[i] = count_p[i - 1];
                const Simplex& s = order.simplices[i - 1];
                if (s.dim() == p) {
                    ++count_p[i];
                    if (s.size() > 1 && ech.insert(boundary[i - 1])) ++r;
                }
                z[i] = count_p[i] - r;
            }
        }

        // dim(B_p(j) ^ C_p(i)) = rank d_{p+1}(j) - rank of the same columns
        // with rows at positions <= i zeroed.  One masked elimination sweep
        // per i gives all j at once.
        std::vector<std::vector<int>> masked_rank(n + 1, std::vector<int>(n + 1, 0));
        for (int i = 0; i <= n; ++i) {
            EchelonCounter ech(n);
            int r = 0;
            for (int j = 1; j <= n; ++j) {
                masked_rank[i][j] = masked_rank[i][j - 1];
                const Simplex& s = order.simplices[j - 1];
                if (s.dim() != p + 1) continue;
                Bits col = boundary[j - 1];
                col.mask_below(static_cast<std::size_t>(i));
                if (ech.insert(std::move(col))) ++r;
                masked_rank[i][j] = r;
            }
        }
        const std::vector<int>& full_rank = masked_rank[0];

        auto& tbl = table.tables[p];
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                int inter = full_rank[j] - masked_rank[i][j];
                tbl[i * (n + 1) + j] = z[i] - inter;
            }
    }
    return table;
}

std::vector<DiagramPoint> oracle_diagram(const FiltrationOrder& order,
                                         const PersistentBettiTable& table, const Rat& C_sq) {
    std::vector<DiagramPoint> out;
    const int n = table.n;
    for (int p = 0; p <= table.max_p; ++p) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                int mu = table.multiplicity(p, i, j);
                if (mu == 0) continue;
                if (mu != 1)
                    throw validation_error("oracle multiplicity " + std::to_string(mu) +
                                           " at a single index pair");
                DiagramPoint pt;
                pt.p = p;
                pt.birth_sq = order.values[i - 1];
                pt.death_sq = order.values[j - 1];
                pt.birth_pos = i - 1;
                pt.death_pos = j - 1;
                out.push_back(std::move(pt));
            }
            int ess = table.essential_multiplicity(p, i);
            if (ess == 1) {
                DiagramPoint pt;
                pt.p = p;
                pt.birth_sq = order.values[i - 1];
                pt.death_sq = C_sq;
                pt.essential = true;
                pt.birth_pos = i - 1;
                out.push_back(std::move(pt));
            } else if (ess != 0) {
                throw validation_error("oracle essential multiplicity " + std::to_string(ess));
            }
        }
    }
    return out;
}

}  // namespace chromatic
