#pragma once

// SVG drawings of two-dimensional source chambers, in the Euclidean picture given by an invariant form.

#include <string>
#include <vector>

#include "mcone/embedding.hpp"

namespace mcone {

// Convex polygon from its vertices (source weight coordinates), with the dominant chamber walls.
std::string polygon_svg(const Embedding& e, const std::vector<QVec>& vertices, const std::string& title);
// The subdivision of the source chamber into cubicles, one ray per wall, labelled by v.
std::string cubicles_svg(const Embedding& e);

}  // namespace mcone
