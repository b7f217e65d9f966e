#include "skeinkit/faces.hpp"

#include <stdexcept>

namespace skeinkit {

FaceCensus face_census(const Diagram& d) {
    auto ends = arc_ends(d);
    const int dart_count = 4 * static_cast<int>(d.crossings.size());

    auto mate = [&](int dart) {
        int x = dart / 4, s = dart % 4;
        int a = d.crossings[x].slots[s];
        if (!ends[a].head || !ends[a].tail)
            throw std::invalid_argument("face_census: arc with a dangling end");
        int hd = 4 * ends[a].head->first + ends[a].head->second;
        int td = 4 * ends[a].tail->first + ends[a].tail->second;
        return dart == hd ? td : hd;
    };

    FaceCensus fc;
    fc.face_of_dart.assign(dart_count, -1);
    for (int start = 0; start < dart_count; ++start) {
        if (fc.face_of_dart[start] != -1) continue;
        int id = fc.face_count();
        std::vector<int> orbit;
        int cur = start;
        do {
            fc.face_of_dart[cur] = id;
            orbit.push_back(cur);
            int m = mate(cur);
            cur = (m / 4) * 4 + (m % 4 + 1) % 4;
        } while (cur != start);
        fc.faces.push_back(std::move(orbit));
    }
    return fc;
}

int corner_face(const FaceCensus& f, int crossing, int corner) {
    int dart = 4 * crossing + (corner + 1) % 4;
    if (dart < 0 || dart >= static_cast<int>(f.face_of_dart.size()))
        throw std::out_of_range("corner_face: no such corner");
    return f.face_of_dart[dart];
}

bool is_nugatory_crossing(const FaceCensus& f, int crossing) {
    return corner_face(f, crossing, 0) == corner_face(f, crossing, 2) ||
           corner_face(f, crossing, 1) == corner_face(f, crossing, 3);
}

}  // namespace skeinkit
