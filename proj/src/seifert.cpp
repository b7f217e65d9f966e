#include "skeinkit/seifert.hpp"

#include <numeric>
#include <vector>

namespace skeinkit {

SeifertData seifert_data(const Diagram& d) {
    auto ends = arc_ends(d);

    // Circles are the orbits of the oriented smoothing applied everywhere.
    std::vector<int> circle(d.arc_count + 1, -1);
    int circles = 0;
    for (int a = 1; a <= d.arc_count; ++a) {
        if (circle[a] != -1) continue;
        if (!ends[a].head) {
            circle[a] = circles++;
            continue;
        }
        int cur = a;
        do {
            circle[cur] = circles;
            auto [x, s] = *ends[cur].head;
            const Crossing& c = d.crossings[x];
            cur = c.slots[smoothed_out_slot(c, s)];
        } while (cur != a);
        ++circles;
    }

    // Each crossing is a band between the circle through its under-entry and
    // the circle through its under-exit (possibly the same one).
    std::vector<int> parent(circles);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Crossing& c : d.crossings) {
        int a = find(circle[c.slots[0]]);
        int b = find(circle[c.slots[2]]);
        if (a != b) parent[a] = b;
    }
    int surface_components = 0;
    for (int v = 0; v < circles; ++v)
        if (find(v) == v) ++surface_components;

    SeifertData out;
    out.circles = circles;
    int crossings = static_cast<int>(d.crossings.size());
    out.euler_characteristic = circles - crossings;
    out.surface_components = surface_components;
    int boundary = static_cast<int>(d.components.size());
    out.genus = (2 * surface_components - boundary - out.euler_characteristic) / 2;
    out.morton_bound = crossings - circles + 1;
    return out;
}

}  // namespace skeinkit
