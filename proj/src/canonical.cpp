#include "skeinkit/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace skeinkit {

namespace {

// mate[4x + s] is the dart at the other end of the arc in slot s of crossing x.
std::vector<int> dart_mates(const Diagram& d) {
    auto ends = arc_ends(d);
    std::vector<int> mate(4 * d.crossings.size());
    for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x)
        for (int s = 0; s < 4; ++s) {
            int a = d.crossings[x].slots[s];
            int hd = 4 * ends[a].head->first + ends[a].head->second;
            int td = 4 * ends[a].tail->first + ends[a].tail->second;
            mate[4 * x + s] = (4 * x + s == hd) ? td : hd;
        }
    return mate;
}

// Breadth-first encoding of one projection piece from a fixed start crossing.
// Crossings are numbered in discovery order; each slot reports the number and
// slot of its mate, so the string pins down the piece up to arc labels.
std::string piece_code_from(const Diagram& d, const std::vector<int>& mate, int start) {
    std::vector<int> pos(d.crossings.size(), -1);
    std::vector<int> order;
    pos[start] = 0;
    order.push_back(start);
    for (std::size_t q = 0; q < order.size(); ++q) {
        int x = order[q];
        for (int s = 0; s < 4; ++s) {
            int y = mate[4 * x + s] / 4;
            if (pos[y] == -1) {
                pos[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    std::ostringstream os;
    for (int x : order) {
        os << (d.crossings[x].sign > 0 ? '+' : '-');
        for (int s = 0; s < 4; ++s) {
            int m = mate[4 * x + s];
            os << pos[m / 4] << '.' << m % 4 << (s == 3 ? ';' : ',');
        }
    }
    return os.str();
}

std::string diagram_code(const Diagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    auto mate = dart_mates(d);

    std::vector<int> piece(n, -1);
    int piece_count = 0;
    for (int i = 0; i < n; ++i) {
        if (piece[i] != -1) continue;
        std::vector<int> stack{i};
        piece[i] = piece_count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int y = mate[4 * x + s] / 4;
                if (piece[y] == -1) {
                    piece[y] = piece_count;
                    stack.push_back(y);
                }
            }
        }
        ++piece_count;
    }

    std::vector<std::string> best(piece_count);
    for (int x = 0; x < n; ++x) {
        std::string code = piece_code_from(d, mate, x);
        std::string& slot = best[piece[x]];
        if (slot.empty() || code < slot) slot = std::move(code);
    }
    std::sort(best.begin(), best.end());

    int free_loops = 0;
    auto ends = arc_ends(d);
    for (const auto& comp : d.components)
        if (comp.size() == 1 && !ends[comp[0]].head) ++free_loops;

    std::ostringstream os;
    for (const auto& code : best) os << code;
    os << "|free:" << free_loops;
    return os.str();
}

}  // namespace

std::string canonical_key(const Diagram& d) {
    std::string forward = diagram_code(d);
    std::string backward = diagram_code(reverse_all(d));
    return std::min(forward, backward);
}

}  // namespace skeinkit
