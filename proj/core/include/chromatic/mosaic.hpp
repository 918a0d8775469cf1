#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chromatic/points.hpp"

namespace chromatic {

// Abstract simplex: strictly increasing point indices, at most 6 of them
// (top dimension s+d <= 4 plus one).
struct Simplex {
    static constexpr int kMaxVerts = 6;

    Simplex() = default;
    explicit Simplex(std::vector<int> verts);
    Simplex(std::initializer_list<int> verts) : Simplex(std::vector<int>(verts)) {}

    int dim() const { return size_ - 1; }
    int size() const { return size_; }
    int operator[](int i) const { return v_[i]; }
    bool contains(int vertex) const;
    bool is_face_of(const Simplex& other) const;
    Simplex without(int position) const;  // drop the i-th vertex

    auto operator<=>(const Simplex&) const = default;

    std::vector<int> vertices() const { return {v_.begin(), v_.begin() + size_}; }
    std::string to_string() const;

    std::array<std::int32_t, kMaxVerts> v_{};
    std::int32_t size_ = 0;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int i = 0; i < s.size(); ++i)
            h = (h ^ static_cast<std::size_t>(s[i]) * 0xff51afd7ed558ccdull) * 0xc4ceb9fe1a85ec53ull;
        return h ^ static_cast<std::size_t>(s.size());
    }
};

struct SizeStats {
    std::vector<std::size_t> count_per_dim;
    std::size_t total = 0;
    std::size_t n_points = 0;
    double spread = 0.0;
};

// Face-closed simplex set from the color-lifted Delaunay construction,
// grouped by dimension and sorted lexicographically within each dimension.
struct ChromaticDelaunayMosaic {
    ChromaticPointSet point_set;
    std::vector<std::vector<Simplex>> simplices_by_dim;

    int top_dim() const { return static_cast<int>(simplices_by_dim.size()) - 1; }
    std::size_t total_size() const;
    bool contains(const Simplex& s) const;
    std::vector<Simplex> all_simplices() const;  // dimension-major order
};

struct BuildOptions {
    Rat scale_M = Rat(1);
    std::uint64_t shuffle_seed = 0x5eed;  // insertion order; result is order-independent
};

// Delaunay mosaic of the lifted points, computed as the lower convex hull of
// the paraboloid lift with exact predicates.  Cospherical ties are resolved
// by an index-based symbolic perturbation of the paraboloid coordinate, so
// degenerate inputs yield a Delaunay triangulation refining the mosaic;
// when chi.require_general_position is set such inputs are rejected instead,
// naming an offending cospherical subset.
ChromaticDelaunayMosaic build_mosaic(const ChromaticPointSet& chi,
                                     const BuildOptions& opts = {});

// Subcomplex of simplices whose vertex colors all lie in tau.
ChromaticDelaunayMosaic restrict_mosaic(const ChromaticDelaunayMosaic& mosaic,
                                        const std::vector<int>& tau);

SizeStats size_stats(const ChromaticDelaunayMosaic& mosaic);

// Exact linear-feasibility test: does some sphere (in the linearized power
// form) centered in the lift flat pass through the lifted nu and keep every
// other lifted point outside-or-on?  Capped at 25 points.
bool is_delaunay_oracle(const ChromaticPointSet& chi, const Simplex& nu,
                        const Rat& scale_M = Rat(1));

}  // namespace chromatic
