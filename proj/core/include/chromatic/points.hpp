#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromatic/linalg.hpp"
#include "chromatic/rational.hpp"

namespace chromatic {

// A finite point set in R^d with a color per point.  Colors live in
// {0, ..., sigma_size-1}; s = sigma_size - 1 is the number of extra lift
// dimensions.  Coordinates are exact rationals.
struct ChromaticPointSet {
    int dim_d = 0;
    int sigma_size = 1;
    std::vector<QVec> points;       // each of size dim_d
    std::vector<int> colors;        // same length as points
    bool require_general_position = false;

    int s() const { return sigma_size - 1; }
    std::size_t size() const { return points.size(); }

    // Indices of points with color j.
    std::vector<int> color_class(int j) const;

    // Restriction to a subset of the colors, preserving relative order.
    // original_index maps new indices back to this point set.
    ChromaticPointSet restrict_colors(const std::vector<int>& tau,
                                      std::vector<int>* original_index = nullptr) const;

    // Throws input_error on malformed data (bad colors, duplicate points,
    // inconsistent dimensions).
    void validate() const;

    // diameter / minimum inter-point distance, as a double.
    double spread() const;

    Rat min_interpoint_dist_sq() const;
};

// Points embedded in R^{s+1+d}: color block u_j (u_0 = 0, u_j = M e_j for
// j >= 1) followed by the original coordinates.  All lifted points lie in the
// (s+d)-flat where the 0-th color coordinate vanishes.
struct LiftedPointSet {
    int ambient_dim = 0;  // s+1+d
    int s = 0;
    int d = 0;
    Rat scale_M = Rat(1);
    std::vector<QVec> lifted_points;
    std::vector<int> fiber_index;  // color per point

    // Chart coordinates inside the lift flat: drop the identically-zero 0-th
    // color coordinate.  Dimension s+d.
    QVec chart(std::size_t i) const;
    int chart_dim() const { return s + d; }
};

LiftedPointSet lift(const ChromaticPointSet& chi, const Rat& scale_M);

// Deterministic rational jitter: each coordinate moves by at most
// `magnitude` * (minimum inter-point distance).  Default magnitude 2^-30.
ChromaticPointSet jitter(const ChromaticPointSet& chi, std::uint64_t seed,
                         const Rat& magnitude = Rat(1, 1 << 30));

}  // namespace chromatic
