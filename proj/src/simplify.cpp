#include <optional>

#include "skeinkit/diagram.hpp"
#include "skeinkit/faces.hpp"

namespace skeinkit {

namespace {

// A curl shows up as the same arc sitting in two cyclically adjacent slots.
std::optional<int> find_curl(const Diagram& d) {
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const auto& s = d.crossings[i].slots;
        for (int k = 0; k < 4; ++k)
            if (s[k] == s[(k + 1) % 4]) return i;
    }
    return std::nullopt;
}

// A removable clasp is a bigon face between two distinct crossings where one
// of the two bounding arcs runs over at both of its ends (the opposite side
// then runs under at both, so the strands pull apart).
std::optional<std::pair<int, int>> find_clasp(const Diagram& d) {
    auto ends = arc_ends(d);
    auto over_at_both_ends = [&](int arc) {
        auto [hx, hs] = *ends[arc].head;
        auto [tx, ts] = *ends[arc].tail;
        return hs == over_in_slot(d.crossings[hx]) && ts == over_out_slot(d.crossings[tx]);
    };

    FaceCensus fc = face_census(d);
    for (const auto& face : fc.faces) {
        if (face.size() != 2) continue;
        int x = face[0] / 4, y = face[1] / 4;
        if (x == y) continue;
        int a = d.crossings[x].slots[face[0] % 4];
        int b = d.crossings[y].slots[face[1] % 4];
        if (over_at_both_ends(a) || over_at_both_ends(b)) return std::pair{x, y};
    }
    return std::nullopt;
}

}  // namespace

Diagram simplify(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        if (auto curl = find_curl(cur)) {
            cur = rebuild_without(cur, {*curl}, {false});
            continue;
        }
        if (auto clasp = find_clasp(cur)) {
            cur = rebuild_without(cur, {clasp->first, clasp->second}, {false, false});
            continue;
        }
        return cur;
    }
}

}  // namespace skeinkit
