#pragma once

#include <map>

#include "chromatic/mosaic.hpp"

namespace chromatic {

// Concentric spheres sharing one center, one per color; the chromatic
// analogue of a circumsphere.  Colors not touched by the defining simplex
// carry squared radius 0.
struct Stack {
    QVec center;                       // in R^d
    std::vector<Rat> radius_sq_per_color;
    Rat stack_radius_sq = Rat(0);      // max over colors

    Rat max_radius_sq() const;
};

// The smallest stack passing through nu: minimizes the maximum squared
// radius subject to all points of nu with color j being equidistant from the
// center.  Solved exactly by enumerating active color subsets of the min-max
// and checking KKT feasibility of each candidate.
Stack smallest_stack_through(const ChromaticPointSet& chi, const Simplex& nu);

// True iff no point of color j lies strictly inside sphere j (exact).
bool is_empty_stack(const ChromaticPointSet& chi, const Stack& stack);

}  // namespace chromatic
