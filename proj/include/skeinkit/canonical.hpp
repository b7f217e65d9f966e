#pragma once

#include <string>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// Label-free fingerprint of a diagram. Two valid diagrams get the same key
// exactly when one can be turned into the other by relabeling arcs, rotating
// or reordering component listings, reordering crossings, or reversing the
// orientation of every component at once. Mirrors and partial reversals keep
// distinct keys.
//
// Built per connected projection piece as the lexicographically least
// breadth-first encoding over all start crossings (and both global
// orientations), then pieces are sorted and the crossing-free loop count is
// appended.
std::string canonical_key(const Diagram& d);

}  // namespace skeinkit
