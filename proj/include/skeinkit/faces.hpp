#pragma once

#include <vector>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// Complementary regions of the projection, traced through darts. A dart is
// one end of an arc at a crossing, identified as 4 * crossing + slot; a face
// is the orbit of "cross to the arc's other end, then turn one slot
// counterclockwise". Crossing-free loops carry no darts and are not listed.
struct FaceCensus {
    std::vector<int> face_of_dart;        // dart id -> face index
    std::vector<std::vector<int>> faces;  // face -> dart ids in boundary order

    int face_count() const { return static_cast<int>(faces.size()); }
};

// Requires a structurally valid diagram (every arc with crossing incidences
// has exactly one head and one tail).
FaceCensus face_census(const Diagram& d);

// Face touching the corner of a crossing between slots `corner` and
// `corner + 1`, counterclockwise.
int corner_face(const FaceCensus& f, int crossing, int corner);

// A crossing is nugatory when two opposite corners border the same region:
// a circle through just that crossing then separates the rest of the diagram,
// and the crossing can be removed by flipping one side.
bool is_nugatory_crossing(const FaceCensus& f, int crossing);

}  // namespace skeinkit
