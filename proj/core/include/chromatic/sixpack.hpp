#pragma once

#include "chromatic/persistence.hpp"

namespace chromatic {

// Which subcomplex L is included into which complex K.
struct InclusionSpec {
    enum class Mode { SingleColor, TChromatic, Explicit };
    Mode mode = Mode::SingleColor;
    int color = 0;   // SingleColor
    int t_sub = 1;   // TChromatic: L = t_sub-chromatic, K = t_sup-chromatic
    int t_sup = 2;

    static InclusionSpec single_color(int j);
    static InclusionSpec t_chromatic_pair(int t1, int t2);
    std::string describe() const;
};

// Simplices whose vertices use at most t distinct colors.
ChromaticDelaunayMosaic t_chromatic(const ChromaticDelaunayMosaic& mosaic, int t);

enum class PackEntry { Kernel = 0, Relative = 1, Cokernel = 2, Domain = 3, Image = 4, Codomain = 5 };
const char* pack_label(PackEntry e);

struct SixPack {
    PersistenceDiagram kernel, relative, cokernel, domain, image, codomain;
    std::string inclusion;
    Rat C_sq;

    const PersistenceDiagram& operator[](PackEntry e) const;
    int max_dim() const;
};

// The six diagrams for L included in K, both filtered by the restriction of
// rf.  L must be a face-closed subcomplex of K; K a subcomplex of rf's
// mosaic.  C_sq must exceed every birth value.
SixPack sixpack(const ChromaticDelaunayMosaic& K, const ChromaticDelaunayMosaic& L,
                const RadiusFunction& rf, const Rat& C_sq);

SixPack sixpack(const ChromaticDelaunayMosaic& mosaic, const RadiusFunction& rf,
                const InclusionSpec& spec, const Rat& C_sq);

// Default closing threshold: max finite radius value rounded up to the next
// integer (and at least 1).
Rat default_threshold(const RadiusFunction& rf);

// Per-index exactness of the three short sequences, checked against explicit
// Z/2 rank computations.  All residuals must be zero.
struct ExactnessReport {
    bool ok = true;
    long checks = 0;
    long max_residual = 0;
    std::string first_failure;
};
ExactnessReport verify_exactness(const ChromaticDelaunayMosaic& K,
                                 const ChromaticDelaunayMosaic& L,
                                 const RadiusFunction& rf);

// Total persistence  sum (death - birth)  in radius units; essentials closed
// at the diagram's threshold.
double norm1(const PersistenceDiagram& dgm, int p);

// Exact form: multiset of (sign, value_sq) terms representing
// sum sign * sqrt(value_sq); zero-tested by grouping square-ratio classes.
struct SqrtSum {
    std::vector<std::pair<Rat, Rat>> terms;  // (coefficient, radicand)
    void add(const Rat& coeff, const Rat& radicand);
    bool is_zero() const;
    double to_double() const;
};

struct NormReport {
    bool exact_ok = true;
    double max_residual = 0.0;
};
// Checks, per dimension p:  |domain| = |ker| + |im|,  |codomain| = |im| + |cok|,
// |relative_p| = |cok_p| + |ker_{p-1}|, both in floating point and exactly.
NormReport verify_norm_relations(const SixPack& pack);

// Oracle for the full 6-pack: every diagram recomputed from explicit
// persistent rank tables plus inclusion-exclusion (<= 300 simplices).
struct SixPackOracleResult {
    bool match = true;
    std::string mismatch;  // description of the first mismatch
};
SixPackOracleResult sixpack_vs_oracle(const ChromaticDelaunayMosaic& K,
                                      const ChromaticDelaunayMosaic& L,
                                      const RadiusFunction& rf, const Rat& C_sq);

}  // namespace chromatic
