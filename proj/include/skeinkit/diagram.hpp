#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace skeinkit {

// Arcs are labeled 1..arc_count. A crossing stores the four incident arcs
// counterclockwise starting at the incoming under-strand arc, so slot 0 is
// always the under-strand entering and slot 2 the under-strand leaving.
// sign is +1 exactly when rotating the over-strand direction a quarter turn
// counterclockwise lines it up with the under-strand direction; with that
// convention the over-strand runs slot 3 -> slot 1 on positive crossings and
// slot 1 -> slot 3 on negative ones.
struct Crossing {
    std::array<int, 4> slots{};
    int sign = 0;

    bool operator==(const Crossing& o) const = default;
};

// Oriented link diagram. components partitions the arc labels into cyclic
// sequences; traversal order within a component follows the orientation.
// A component whose arcs appear in no crossing is a crossing-free loop.
struct Diagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;
    std::vector<std::vector<int>> components;

    bool operator==(const Diagram& o) const = default;

    // Zero-crossing one-component unknot.
    static Diagram unknot();
    // Crossing-free unlink with k components.
    static Diagram unlink(int k);
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Structural checks: slot/arc bookkeeping, component consistency with the
// orientation induced by the signs, and the planarity face count. Returns a
// report instead of throwing so callers can surface every defect at once.
ValidationReport validate(const Diagram& d);

// Throws std::invalid_argument when validate(d) fails.
void require_valid(const Diagram& d, const char* who);

// Component partition induced by a crossing list: strand cycles plus a free
// loop for every arc label that touches no crossing. Each cycle is listed
// from its lowest arc; cycles are ordered by that arc.
std::vector<std::vector<int>> walk_components(const std::vector<Crossing>& crossings,
                                              int arc_count);

// Slot roles derived from the sign convention.
inline int under_in_slot(const Crossing&) { return 0; }
inline int under_out_slot(const Crossing&) { return 2; }
inline int over_in_slot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }
inline int over_out_slot(const Crossing& c) { return c.sign > 0 ? 1 : 3; }
inline bool is_under_slot(int slot) { return slot == 0 || slot == 2; }
inline bool slot_is_incoming(const Crossing& c, int slot) {
    return slot == 0 || slot == over_in_slot(c);
}

// Slot the strand leaves through after entering at in_slot.
inline int strand_out_slot(const Crossing& c, int in_slot) {
    return in_slot == under_in_slot(c) ? under_out_slot(c) : over_out_slot(c);
}
// Exit slot under the oriented smoothing, which joins each incoming strand to
// the other strand's exit.
inline int smoothed_out_slot(const Crossing& c, int in_slot) {
    return in_slot == under_in_slot(c) ? over_out_slot(c) : under_out_slot(c);
}

// Where an arc meets its crossings. Arcs of crossing-free loops have neither.
struct ArcEnds {
    // (crossing index, slot) where the arc enters a crossing (its head) and
    // where it leaves one (its tail).
    std::optional<std::pair<int, int>> head;
    std::optional<std::pair<int, int>> tail;
};

// head/tail lookup for each arc, index 1..arc_count. Requires a structurally
// valid diagram (each arc in at most one incoming and one outgoing slot).
std::vector<ArcEnds> arc_ends(const Diagram& d);

int writhe(const Diagram& d);

// Over/under swapped at every crossing; components unchanged.
Diagram mirror(const Diagram& d);

// Reverse the orientation of every component.
Diagram reverse_all(const Diagram& d);

// Swap over and under strands at one crossing.
Diagram switch_crossing(const Diagram& d, int index);

// Orientation-respecting smoothing: the crossing is deleted and each incoming
// strand reconnects to the outgoing strand of the other. Arc labels are
// renumbered; components may merge or split.
Diagram smooth_crossing(const Diagram& d, int index);

// Delete a set of crossings. For each deleted crossing `smooth[i]` picks the
// reconnection: false splices each strand straight through (the two passes
// survive as plain strands), true applies the oriented smoothing. Shared
// engine behind smooth_crossing and the simplifier.
Diagram rebuild_without(const Diagram& d, const std::vector<int>& removed,
                        const std::vector<bool>& smooth);

// Apply an arc relabeling; perm[a] is the new label of arc a (1-based).
Diagram relabel_arcs(const Diagram& d, const std::vector<int>& perm);

// Place two diagrams side by side as a split union.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Greedily removes curls (Reidemeister I) and pull-apart clasp pairs
// (Reidemeister II) until neither move applies. Never increases the crossing
// count and preserves the represented link.
Diagram simplify(const Diagram& d);

// True when every arc connects an over-pass to an under-pass, i.e. passes
// alternate along every strand. Crossing-free loops are vacuously alternating.
bool is_alternating(const Diagram& d);

// True when the projection (crossings joined by arcs, plus crossing-free
// loops) forms a single connected piece.
bool is_connected_projection(const Diagram& d);

// Number of connected pieces of the projection.
int projection_component_count(const Diagram& d);

}  // namespace skeinkit
