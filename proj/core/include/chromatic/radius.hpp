#pragma once

#include <unordered_map>

#include "chromatic/stack.hpp"

namespace chromatic {

// Squared radius of the smallest empty stack through each simplex; the
// chromatic alpha complexes are its sublevel sets.
struct RadiusFunction {
    const ChromaticDelaunayMosaic* mosaic = nullptr;
    std::unordered_map<Simplex, Rat, SimplexHash> value_sq;

    const Rat& at(const Simplex& s) const;
    Rat max_finite_value() const;
};

// Decreasing-dimension sweep: assign the radius of the smallest stack when
// it is empty, otherwise copy the minimum over the already-processed cofaces.
RadiusFunction radius_function(const ChromaticDelaunayMosaic& mosaic);

// Alias for the single-color case, where stacks degenerate to circumspheres.
// Requires a mono-chromatic mosaic.
RadiusFunction mono_radius_function(const ChromaticDelaunayMosaic& mosaic);

// Face-closed sublevel set value_sq <= r_sq.
ChromaticDelaunayMosaic alpha_complex(const RadiusFunction& rf, const Rat& r_sq);

// One interval [lower, upper] of simplices sharing a value; singletons are
// the critical simplices.
struct Interval {
    Simplex lower;
    Simplex upper;
    Rat value_sq;
    bool singleton() const { return lower == upper; }
};

struct IntervalPartition {
    std::vector<Interval> intervals;
    std::vector<std::pair<Simplex, Rat>> critical_simplices() const;
};

// Partitions every level set into maximal face intervals; throws
// validation_error with a counterexample when some level set is not a
// disjoint union of intervals (possible only for degenerate inputs or bugs).
IntervalPartition verify_gdm(const RadiusFunction& rf);

// Independent approximation of the radius function: nested grid search over
// the exact equidistance flat, minimizing the stack radius subject to
// emptiness.  d <= 2, |A| <= 20.
double grid_stack_oracle(const ChromaticPointSet& chi, const Simplex& nu, double tol);

}  // namespace chromatic
