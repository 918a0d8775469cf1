#pragma once

#include <iosfwd>
#include <string>

#include "chromatic/sixpack.hpp"

namespace chromatic {

// Point file: header "d=<dim> s=<colors-1>", then one record per point with
// d rational or decimal coordinates followed by the integer color.
ChromaticPointSet read_points(std::istream& in);
ChromaticPointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const ChromaticPointSet& chi);

// Mosaic file: one simplex per line (vertex indices), dimension-major.
void write_mosaic(std::ostream& out, const ChromaticDelaunayMosaic& mosaic,
                  const SizeStats& stats);
std::vector<Simplex> read_mosaic_simplices(std::istream& in);

// Radius-function file: simplex then value_sq as a rational string.
void write_radius_function(std::ostream& out, const RadiusFunction& rf);

// Diagram file: JSON with exact squared rationals plus display decimals.
struct DiagramFileMeta {
    std::string mode;
    std::string input;
    std::uint64_t seed = 0;
    std::string tool_version = "0.1.0";
};
std::string sixpack_to_json(const SixPack& pack, const DiagramFileMeta& meta);
std::string diagram_to_json(const PersistenceDiagram& dgm, const std::string& label,
                            const DiagramFileMeta& meta);
SixPack sixpack_from_json(const std::string& text);

// SVG rendering: the six diagrams in the two-row arrangement
// (kernel | relative | cokernel) over (domain | image | codomain), points
// above the diagonal with persistence-proportional markers.
std::string sixpack_to_svg(const SixPack& pack);
std::string sixpack_to_barcode_svg(const SixPack& pack);

}  // namespace chromatic
