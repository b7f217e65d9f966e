#include "skeinkit/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skeinkit/faces.hpp"

namespace skeinkit {

namespace {

// Labels each crossing with the connected piece of the projection it lies in.
// Pieces are numbered in order of their lowest crossing index.
std::vector<int> crossing_piece_ids(const Diagram& d, int& piece_count) {
    std::vector<std::vector<int>> touching(d.arc_count + 1);
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
        for (int s = 0; s < 4; ++s) touching[d.crossings[i].slots[s]].push_back(i);

    std::vector<int> piece(d.crossings.size(), -1);
    piece_count = 0;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        if (piece[i] != -1) continue;
        std::vector<int> stack{i};
        piece[i] = piece_count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s)
                for (int y : touching[d.crossings[x].slots[s]])
                    if (piece[y] == -1) {
                        piece[y] = piece_count;
                        stack.push_back(y);
                    }
        }
        ++piece_count;
    }
    return piece;
}

}  // namespace

Diagram Diagram::unknot() { return unlink(1); }

Diagram Diagram::unlink(int k) {
    if (k < 1) throw std::invalid_argument("Diagram::unlink: need at least one component");
    Diagram d;
    d.arc_count = k;
    for (int a = 1; a <= k; ++a) d.components.push_back({a});
    return d;
}

ValidationReport validate(const Diagram& d) {
    ValidationReport r;
    auto add = [&r](const std::ostringstream& os) { r.problems.push_back(os.str()); };

    if (d.arc_count < 0) {
        std::ostringstream os;
        os << "arc count is " << d.arc_count;
        add(os);
        return r;
    }

    const int n = static_cast<int>(d.crossings.size());
    bool slots_ok = true;
    for (int i = 0; i < n; ++i) {
        const Crossing& c = d.crossings[i];
        if (c.sign != 1 && c.sign != -1) {
            std::ostringstream os;
            os << "crossing " << i << ": sign must be +1 or -1, got " << c.sign;
            add(os);
            slots_ok = false;
        }
        for (int s = 0; s < 4; ++s)
            if (c.slots[s] < 1 || c.slots[s] > d.arc_count) {
                std::ostringstream os;
                os << "crossing " << i << " slot " << s << ": arc " << c.slots[s]
                   << " outside 1.." << d.arc_count;
                add(os);
                slots_ok = false;
            }
    }
    if (!slots_ok) return r;

    std::vector<int> in_count(d.arc_count + 1, 0), out_count(d.arc_count + 1, 0);
    for (const Crossing& c : d.crossings) {
        ++in_count[c.slots[under_in_slot(c)]];
        ++in_count[c.slots[over_in_slot(c)]];
        ++out_count[c.slots[under_out_slot(c)]];
        ++out_count[c.slots[over_out_slot(c)]];
    }
    bool ends_ok = true;
    for (int a = 1; a <= d.arc_count; ++a) {
        bool strand = in_count[a] == 1 && out_count[a] == 1;
        bool free_loop = in_count[a] == 0 && out_count[a] == 0;
        if (!strand && !free_loop) {
            std::ostringstream os;
            os << "arc " << a << " enters " << in_count[a] << " and leaves " << out_count[a]
               << " crossing slots; expected once each, or never for a free loop";
            add(os);
            ends_ok = false;
        }
    }

    std::vector<int> listed(d.arc_count + 1, 0);
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        if (d.components[k].empty()) {
            std::ostringstream os;
            os << "component " << k << " is empty";
            add(os);
        }
        for (int a : d.components[k]) {
            if (a < 1 || a > d.arc_count) {
                std::ostringstream os;
                os << "component " << k << " lists arc " << a << " outside 1.." << d.arc_count;
                add(os);
            } else {
                ++listed[a];
            }
        }
    }
    for (int a = 1; a <= d.arc_count; ++a)
        if (listed[a] != 1) {
            std::ostringstream os;
            os << "arc " << a << " appears " << listed[a] << " times across components";
            add(os);
        }
    if (!r.ok() || !ends_ok) return r;

    auto ends = arc_ends(d);
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        const auto& comp = d.components[k];
        if (!ends[comp[0]].head) {
            if (comp.size() != 1) {
                std::ostringstream os;
                os << "component " << k << " mixes a crossing-free arc with others";
                add(os);
            }
            continue;
        }
        for (std::size_t i = 0; i < comp.size(); ++i) {
            int a = comp[i];
            int b = comp[(i + 1) % comp.size()];
            if (!ends[a].head) {
                std::ostringstream os;
                os << "component " << k << ": arc " << a
                   << " touches no crossing but is listed with " << comp.size() << " arcs";
                add(os);
                break;
            }
            auto [x, sin] = *ends[a].head;
            const Crossing& c = d.crossings[x];
            int next = c.slots[strand_out_slot(c, sin)];
            if (next != b) {
                std::ostringstream os;
                os << "component " << k << ": arc " << a << " continues as arc " << next
                   << " through crossing " << x << ", but the listing says " << b;
                add(os);
                break;
            }
        }
    }
    if (!r.ok()) return r;

    // A closed 4-valent plane graph piece with c vertices has 2c edges, so its
    // face count must come out to c + 2. Anything else is not drawable in the
    // plane with this combinatorics.
    int piece_count = 0;
    auto piece = crossing_piece_ids(d, piece_count);
    if (piece_count > 0) {
        FaceCensus fc = face_census(d);
        std::vector<int> faces_in(piece_count, 0), crossings_in(piece_count, 0);
        for (int i = 0; i < n; ++i) ++crossings_in[piece[i]];
        for (const auto& face : fc.faces) ++faces_in[piece[face.front() / 4]];
        for (int p = 0; p < piece_count; ++p)
            if (faces_in[p] != crossings_in[p] + 2) {
                std::ostringstream os;
                os << "projection piece " << p << " has " << crossings_in[p]
                   << " crossings but " << faces_in[p] << " faces; a planar piece needs "
                   << crossings_in[p] + 2;
                add(os);
            }
    }
    return r;
}

void require_valid(const Diagram& d, const char* who) {
    ValidationReport r = validate(d);
    if (r.ok()) return;
    std::ostringstream os;
    os << who << ": invalid diagram: " << r.problems.front();
    if (r.problems.size() > 1) os << " (and " << r.problems.size() - 1 << " more)";
    throw std::invalid_argument(os.str());
}

std::vector<ArcEnds> arc_ends(const Diagram& d) {
    std::vector<ArcEnds> ends(d.arc_count + 1);
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const Crossing& c = d.crossings[i];
        ends[c.slots[under_in_slot(c)]].head = {i, under_in_slot(c)};
        ends[c.slots[over_in_slot(c)]].head = {i, over_in_slot(c)};
        ends[c.slots[under_out_slot(c)]].tail = {i, under_out_slot(c)};
        ends[c.slots[over_out_slot(c)]].tail = {i, over_out_slot(c)};
    }
    return ends;
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const Crossing& c : d.crossings) w += c.sign;
    return w;
}

namespace {

Crossing switched_crossing(const Crossing& c) {
    // The four arcs keep their counterclockwise order; only which strand is on
    // top changes, so the stored rotation shifts to put the new under-entry
    // back in slot 0.
    Crossing r;
    if (c.sign > 0) {
        r.slots = {c.slots[3], c.slots[0], c.slots[1], c.slots[2]};
        r.sign = -1;
    } else {
        r.slots = {c.slots[1], c.slots[2], c.slots[3], c.slots[0]};
        r.sign = 1;
    }
    return r;
}

}  // namespace

Diagram mirror(const Diagram& d) {
    Diagram m = d;
    for (Crossing& c : m.crossings) c = switched_crossing(c);
    return m;
}

Diagram reverse_all(const Diagram& d) {
    Diagram r = d;
    for (Crossing& c : r.crossings) {
        // Incoming and outgoing swap; the counterclockwise order and the sign
        // survive because both strands flip together.
        c.slots = {c.slots[2], c.slots[3], c.slots[0], c.slots[1]};
    }
    for (auto& comp : r.components) {
        std::reverse(comp.begin(), comp.end());
        std::rotate(comp.begin(), comp.end() - 1, comp.end());
    }
    return r;
}

Diagram switch_crossing(const Diagram& d, int index) {
    if (index < 0 || index >= static_cast<int>(d.crossings.size()))
        throw std::out_of_range("switch_crossing: crossing index out of range");
    Diagram r = d;
    r.crossings[index] = switched_crossing(r.crossings[index]);
    return r;
}

Diagram smooth_crossing(const Diagram& d, int index) {
    return rebuild_without(d, {index}, {true});
}

Diagram rebuild_without(const Diagram& d, const std::vector<int>& removed,
                        const std::vector<bool>& smooth) {
    if (removed.size() != smooth.size())
        throw std::invalid_argument("rebuild_without: removed/smooth length mismatch");
    const int n = static_cast<int>(d.crossings.size());

    enum Mode { kKeep = 0, kSplice = 1, kSmooth = 2 };
    std::vector<int> mode(n, kKeep);
    for (std::size_t k = 0; k < removed.size(); ++k) {
        int i = removed[k];
        if (i < 0 || i >= n) throw std::out_of_range("rebuild_without: crossing index out of range");
        if (mode[i] != kKeep) throw std::invalid_argument("rebuild_without: crossing listed twice");
        mode[i] = smooth[k] ? kSmooth : kSplice;
    }

    auto ends = arc_ends(d);

    // Arc that continues the strand after it enters crossing x at slot sin,
    // with removed crossings acting as pass-throughs (spliced) or as the
    // oriented reconnection (smoothed).
    auto out_arc = [&](int x, int sin) {
        const Crossing& c = d.crossings[x];
        int sout = mode[x] == kSmooth ? smoothed_out_slot(c, sin) : strand_out_slot(c, sin);
        return c.slots[sout];
    };

    // Runs of old arcs joined through removed crossings collapse into single
    // new arcs. A run either reaches a kept crossing on both sides or closes
    // up entirely inside removed crossings and becomes a free loop.
    std::vector<int> new_label(d.arc_count + 1, 0);
    std::vector<char> visited(d.arc_count + 1, 0);
    int next_label = 0;
    std::vector<std::pair<int, int>> chain_head;  // per chain label: kept (crossing, slot)
    int loop_count = 0;

    for (int a = 1; a <= d.arc_count; ++a) {
        if (visited[a] || !ends[a].head) continue;
        if (mode[ends[a].tail->first] != kKeep) continue;  // not the start of a run
        int label = ++next_label;
        int cur = a;
        for (;;) {
            visited[cur] = 1;
            new_label[cur] = label;
            auto [hx, hs] = *ends[cur].head;
            if (mode[hx] == kKeep) {
                chain_head.push_back({hx, hs});
                break;
            }
            cur = out_arc(hx, hs);
        }
    }
    for (int a = 1; a <= d.arc_count; ++a) {
        if (visited[a] || !ends[a].head) continue;
        int label = ++next_label;
        int cur = a;
        do {
            visited[cur] = 1;
            new_label[cur] = label;
            auto [hx, hs] = *ends[cur].head;
            cur = out_arc(hx, hs);
        } while (cur != a);
        ++loop_count;
        chain_head.push_back({-1, -1});
    }
    int old_free_loops = 0;
    for (int a = 1; a <= d.arc_count; ++a)
        if (!ends[a].head) {
            new_label[a] = ++next_label;
            ++old_free_loops;
        }

    Diagram out;
    out.arc_count = next_label;
    for (int i = 0; i < n; ++i) {
        if (mode[i] != kKeep) continue;
        Crossing c = d.crossings[i];
        for (int s = 0; s < 4; ++s) c.slots[s] = new_label[c.slots[s]];
        out.crossings.push_back(c);
    }

    out.components = walk_components(out.crossings, out.arc_count);
    return out;
}

std::vector<std::vector<int>> walk_components(const std::vector<Crossing>& crossings,
                                              int arc_count) {
    std::vector<std::pair<int, int>> head(arc_count + 1, {-1, -1});
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
        const Crossing& c = crossings[i];
        head[c.slots[under_in_slot(c)]] = {i, under_in_slot(c)};
        head[c.slots[over_in_slot(c)]] = {i, over_in_slot(c)};
    }
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(arc_count + 1, 0);
    for (int a = 1; a <= arc_count; ++a) {
        if (seen[a]) continue;
        if (head[a].first < 0) {
            seen[a] = 1;
            comps.push_back({a});
            continue;
        }
        std::vector<int> comp;
        int cur = a;
        do {
            seen[cur] = 1;
            comp.push_back(cur);
            auto [hx, hs] = head[cur];
            const Crossing& c = crossings[hx];
            cur = c.slots[strand_out_slot(c, hs)];
        } while (cur != a);
        comps.push_back(std::move(comp));
    }
    return comps;
}

Diagram relabel_arcs(const Diagram& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.arc_count + 1)
        throw std::invalid_argument("relabel_arcs: permutation must have arc_count + 1 entries");
    std::vector<char> hit(d.arc_count + 1, 0);
    for (int a = 1; a <= d.arc_count; ++a) {
        int p = perm[a];
        if (p < 1 || p > d.arc_count || hit[p])
            throw std::invalid_argument("relabel_arcs: not a permutation of 1..arc_count");
        hit[p] = 1;
    }
    Diagram r = d;
    for (Crossing& c : r.crossings)
        for (int s = 0; s < 4; ++s) c.slots[s] = perm[c.slots[s]];
    for (auto& comp : r.components)
        for (int& a : comp) a = perm[a];
    return r;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    Diagram u = a;
    int offset = a.arc_count;
    u.arc_count += b.arc_count;
    for (Crossing c : b.crossings) {
        for (int s = 0; s < 4; ++s) c.slots[s] += offset;
        u.crossings.push_back(c);
    }
    for (auto comp : b.components) {
        for (int& x : comp) x += offset;
        u.components.push_back(std::move(comp));
    }
    return u;
}

bool is_alternating(const Diagram& d) {
    auto ends = arc_ends(d);
    for (int a = 1; a <= d.arc_count; ++a) {
        if (!ends[a].head) continue;
        bool under_ahead = ends[a].head->second == 0;
        bool under_behind = ends[a].tail->second == 2;
        if (under_ahead == under_behind) return false;
    }
    return true;
}

int projection_component_count(const Diagram& d) {
    int pieces = 0;
    crossing_piece_ids(d, pieces);
    auto ends = arc_ends(d);
    for (const auto& comp : d.components)
        if (comp.size() == 1 && !ends[comp[0]].head) ++pieces;
    return pieces;
}

bool is_connected_projection(const Diagram& d) { return projection_component_count(d) == 1; }

}  // namespace skeinkit
