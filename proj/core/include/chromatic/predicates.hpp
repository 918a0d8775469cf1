#pragma once

#include <vector>

#include "chromatic/linalg.hpp"

namespace chromatic {

// Sign of the oriented volume of k+1 points spanning a k-dimensional space,
// given with full-dimensional coordinates (k+1 points of dimension k).
int orientation(const std::vector<QVec>& pts);

// Position of the last of k+2 points relative to the circumsphere of the
// first k+1, all lying in a common k-flat of a possibly higher-dimensional
// ambient space: -1 inside, 0 on, +1 outside.  Works intrinsically through
// squared-distance (Gram) determinants, so only rational data is needed and
// no chart of the flat has to be chosen.  Throws general_position_error when
// the first k+1 points are affinely dependent.
int in_sphere_flat(const std::vector<QVec>& pts);

}  // namespace chromatic
