#pragma once

#include <cstdint>
#include <optional>

#include "chromatic/radius.hpp"

namespace chromatic {

// Total order on simplices: ascending (value_sq, dimension, lex vertices).
// Faces always precede cofaces.
struct FiltrationOrder {
    std::vector<Simplex> simplices;          // position -> simplex
    std::vector<Rat> values;                 // position -> value_sq
    std::unordered_map<Simplex, int, SimplexHash> position;

    int size() const { return static_cast<int>(simplices.size()); }
};

FiltrationOrder filtration_order(const RadiusFunction& rf);
// Same order for an explicit simplex/value list (used for subcomplexes).
FiltrationOrder filtration_order(const std::vector<std::pair<Simplex, Rat>>& filtered);

// Result of the standard left-to-right Z/2 column reduction.
struct ReductionResult {
    // pair_of[j] = i when the simplex at position j kills the class created
    // at position i; -1 for positive simplices.
    std::vector<int> pair_of;
    std::vector<char> is_positive;
    std::vector<int> essential_positions;  // positive, never killed
};

ReductionResult reduce_boundary(const FiltrationOrder& order);

struct DiagramPoint {
    int p = 0;             // homology dimension
    Rat birth_sq;
    Rat death_sq;          // meaningful unless essential
    bool essential = false;
    int birth_pos = -1;    // filtration positions, -1 when not applicable
    int death_pos = -1;

    bool zero_persistence() const { return !essential && birth_sq == death_sq; }
};

struct PersistenceDiagram {
    std::vector<DiagramPoint> points;
    Rat threshold_C_sq = Rat(0);

    // Points of one homology dimension; zero-persistence pairs are kept
    // internally and skipped here unless requested.
    std::vector<DiagramPoint> in_dim(int p, bool include_zero_persistence = false) const;
    int max_dim() const;
};

// Diagram from a reduction; essentials are closed at C_sq (must exceed every
// birth value).
PersistenceDiagram diagram(const FiltrationOrder& order, const ReductionResult& red,
                           const Rat& C_sq);

// Number of classes alive at r_sq: birth_sq <= r_sq < death_sq (half-open).
std::size_t betti_curve(const PersistenceDiagram& dgm, int p, const Rat& r_sq);

// Exact combinatorial bottleneck distance between two diagrams of one
// homology dimension, in radius (not squared) units.
double bottleneck(const std::vector<DiagramPoint>& d1, const std::vector<DiagramPoint>& d2);

// Persistent Betti numbers beta_p(i, j) over filtration indices, computed by
// explicit rank computations over Z/2 (no pairing logic).  Index i means the
// complex of the first i simplices, 0 <= i <= n.
struct PersistentBettiTable {
    int n = 0;
    int max_p = 0;
    // tables[p][i*(n+1)+j] for i <= j
    std::vector<std::vector<std::int32_t>> tables;

    std::int32_t beta(int p, int i, int j) const { return tables[p][i * (n + 1) + j]; }
    // Multiplicity of the index pair (i, j): class born by simplex i, killed
    // by simplex j (1-based positions), via inclusion-exclusion.
    int multiplicity(int p, int i, int j) const;
    int essential_multiplicity(int p, int i) const;
};

// Cap: total simplex count <= 300.
PersistentBettiTable homology_oracle(const FiltrationOrder& order);

// Index-level diagram recovered from the table; for cross-checking the
// reduction path.
std::vector<DiagramPoint> oracle_diagram(const FiltrationOrder& order,
                                         const PersistentBettiTable& table,
                                         const Rat& C_sq);

}  // namespace chromatic
