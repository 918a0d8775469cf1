#pragma once

#include <cstdint>

#include "chromatic/persistence.hpp"

namespace chromatic {

struct SpanningTree {
    std::vector<std::pair<int, int>> edges;
    std::vector<Rat> length_sq_terms;  // squared length per edge, same order
    double total_length = 0.0;
};

// Kruskal on the given candidate edges with exact length comparisons; ties
// broken by lexicographic edge index.  Throws input_error when the candidate
// graph does not connect the points.
SpanningTree mst(const std::vector<QVec>& points,
                 const std::vector<std::pair<int, int>>& candidate_edges);

// Candidate edges: Delaunay edges for d <= 2, complete graph for d = 3.
SpanningTree euclidean_mst(const std::vector<QVec>& points, int dim);

struct MinglingReport {
    std::vector<double> per_color_length;
    double union_length = 0.0;
    double mst_ratio = 0.0;
    double image_share = 0.0;   // 1 / mst_ratio
    double kernel_share = 0.0;  // 1 - image_share
};

// (sum of per-color MST lengths) / (MST length of all points).
MinglingReport mst_ratio(const ChromaticPointSet& chi);

// Multiset {finite dim-0 deaths squared} == multiset {(edge length / 2)^2},
// exactly.
bool deaths_equal_half_mst(const PersistenceDiagram& dgm, const SpanningTree& tree);

struct BruteForceResult {
    double mu = 0.0;
    std::vector<int> best_coloring;
};

// Exhaustive maximum MST-ratio over all k-colorings with nonempty classes;
// complement-equivalent colorings counted once.  n <= 16 for 2 colors,
// n <= 10 for 3.
BruteForceResult max_ratio_bruteforce(const std::vector<QVec>& points, int n_colors);

struct MonteCarloResult {
    double mean = 0.0;
    double stderr_ = 0.0;
    int trials = 0;
};

// Uniform points in [0,1]^2, i.i.d. uniform 2-coloring per trial.
MonteCarloResult expected_ratio_montecarlo(int n, int trials, std::uint64_t seed);

}  // namespace chromatic
