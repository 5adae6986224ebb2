#pragma once

#include "minkarr/decomposition.hpp"

#include <string>

namespace minkarr::svg {

// Standalone SVG of the decomposition: white outer sectors on the union,
// light-gray shell triangles, gray core polygons, black circle strokes.
// The y axis is flipped so the picture matches mathematical orientation.
std::string render_decomposition(const arrangement::MuArrangement& arr,
                                 const decomposition::RegionDecomposition& dec);

}  // namespace minkarr::svg
