#pragma once

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// Invariants of the surface built by smoothing every crossing and joining the
// resulting circles with a twisted band per crossing.
struct SeifertData {
    int circles = 0;              // disks of the surface
    int euler_characteristic = 0; // circles - crossings
    int surface_components = 0;   // connected pieces of the disk/band complex
    int genus = 0;                // summed over surface components
    int morton_bound = 0;         // crossings - circles + 1
};

SeifertData seifert_data(const Diagram& d);

}  // namespace skeinkit
