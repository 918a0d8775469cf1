#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "chromatic/points.hpp"

namespace chromatic {

// Serializable description of a point-set generator (flat key=value form).
struct GeneratorSpec {
    std::string kind;                      // hexagonal | integer | fcc | uniform_square | annuli
    std::map<std::string, std::string> params;

    static GeneratorSpec parse(const std::string& text);
    std::string serialize() const;

    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
};

ChromaticPointSet generate(const GeneratorSpec& spec);

// Hexagonal lattice within the disk of radius R, 3-colored by the index-3
// sublattice classes.  The lattice basis is (1,0) and (1/2, q) with q a
// fixed rational within 1e-12 of sqrt(3)/2.
ChromaticPointSet hexagonal(double R);

// {0..k-1}^2 colored by coordinate-sum parity.
ChromaticPointSet integer_checkerboard(int k);

// FCC lattice points within the ball of radius R; color 0 for the doubled
// sublattice 2FCC, color 1 for the rest.
ChromaticPointSet fcc(double R);

struct AnnuliOptions {
    // Three annuli with inner radius 1 and outer radius 1.5, centers pairwise
    // distance 4 apart.  One inner disk fully populated by the second color,
    // one at half density, one left empty.
    int n_per_annulus = 45;
    int n_background = 140;
    int n_fill = 130;
    double fill_radius = 0.92;
};

ChromaticPointSet annuli_sample(std::uint64_t seed, const AnnuliOptions& opts = {});

ChromaticPointSet uniform_square(int n, std::uint64_t seed);

// Re-colors points i.i.d. uniformly over {0..s}.
ChromaticPointSet iid_coloring(const ChromaticPointSet& chi, int s, std::uint64_t seed);

}  // namespace chromatic
