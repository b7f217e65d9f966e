#include "skeinkit/constructors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace skeinkit {

namespace {

// Tangle-box plumbing shared by the braid-like constructors. Boxes are
// unoriented crossings with corners numbered counterclockwise SW=0, SE=1,
// NE=2, NW=3; the strand through a box connects opposite corners, and
// over_diag picks which diagonal is on top (0: SW-NE, 1: SE-NW). Wires join
// corners; orientations are discovered afterwards by walking strand cycles,
// seeding each cycle along its lowest wire. Slots and signs then follow from
// which corner each strand enters.
constexpr int kSW = 0;
constexpr int kSE = 1;
constexpr int kNE = 2;
constexpr int kNW = 3;

struct Proto {
    struct End {
        int box;
        int corner;
    };

    int boxes = 0;
    std::vector<int> over_diag;
    std::vector<std::array<End, 2>> wires;

    int add_box(int over) {
        over_diag.push_back(over);
        return boxes++;
    }

    void connect(End a, End b) { wires.push_back({a, b}); }

    Diagram build() const {
        const int wire_count = static_cast<int>(wires.size());
        std::vector<std::array<std::pair<int, int>, 4>> at(
            boxes, {std::pair{-1, -1}, std::pair{-1, -1}, std::pair{-1, -1}, std::pair{-1, -1}});
        for (int w = 0; w < wire_count; ++w)
            for (int e = 0; e < 2; ++e) {
                auto [b, c] = wires[w][e];
                if (at[b][c].first != -1) throw std::logic_error("plumbing: corner wired twice");
                at[b][c] = {w, e};
            }
        for (int b = 0; b < boxes; ++b)
            for (int c = 0; c < 4; ++c)
                if (at[b][c].first == -1) throw std::logic_error("plumbing: unwired corner");

        Diagram d;
        d.arc_count = wire_count;

        // Walk strand cycles. Traversing wire w "from end e" means the strand
        // leaves ends[e]'s box and enters the other end's box.
        std::vector<int> entry(2 * boxes, -1);
        std::vector<char> done(wire_count, 0);
        for (int w0 = 0; w0 < wire_count; ++w0) {
            if (done[w0]) continue;
            std::vector<int> comp;
            int w = w0, from = 0;
            do {
                done[w] = 1;
                comp.push_back(w + 1);
                auto [b, c] = wires[w][1 - from];
                if (entry[2 * b + (c & 1)] != -1)
                    throw std::logic_error("plumbing: diagonal entered twice");
                entry[2 * b + (c & 1)] = c;
                auto [nw, ne] = at[b][c ^ 2];
                w = nw;
                from = ne;
            } while (w != w0 || from != 0);
            d.components.push_back(std::move(comp));
        }

        for (int b = 0; b < boxes; ++b) {
            int co = entry[2 * b + over_diag[b]];
            int cu = entry[2 * b + (1 - over_diag[b])];
            if (co < 0 || cu < 0) throw std::logic_error("plumbing: missing strand pass");
            Crossing c;
            c.sign = ((cu - co) & 3) == 1 ? 1 : -1;
            for (int k = 0; k < 4; ++k) c.slots[k] = at[b][(cu + k) & 3].first + 1;
            d.crossings.push_back(c);
        }

        require_valid(d, "constructor plumbing");
        return d;
    }
};

}  // namespace

Diagram torus2(int n) {
    if (n < 2) throw std::invalid_argument("torus2: braid needs at least 2 crossings");
    Proto p;
    for (int i = 0; i < n; ++i) p.add_box(0);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        p.connect({i, kNW}, {j, kSW});
        p.connect({i, kNE}, {j, kSE});
    }
    return p.build();
}

Diagram pretzel(const std::vector<int>& twists) {
    if (twists.empty()) throw std::invalid_argument("pretzel: need at least one band");
    for (int k : twists)
        if (k == 0) throw std::invalid_argument("pretzel: twist counts must be nonzero");

    Proto p;
    std::vector<std::vector<int>> band(twists.size());
    for (std::size_t i = 0; i < twists.size(); ++i) {
        int over = twists[i] > 0 ? 1 : 0;
        for (int j = 0; j < std::abs(twists[i]); ++j) band[i].push_back(p.add_box(over));
    }
    for (const auto& b : band)
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            p.connect({b[j], kNW}, {b[j + 1], kSW});
            p.connect({b[j], kNE}, {b[j + 1], kSE});
        }
    const std::size_t n = band.size();
    for (std::size_t i = 0; i < n; ++i)
        p.connect({band[i].back(), kNE}, {band[(i + 1) % n].back(), kNW});
    for (std::size_t i = 0; i < n; ++i)
        p.connect({band[i].front(), kSE}, {band[(i + 1) % n].front(), kSW});

    Diagram d = p.build();

    // Component-count parity of a pretzel is forced by the twist parities;
    // disagreement would mean the necklace was wired wrong.
    int evens = 0;
    for (int k : twists)
        if (k % 2 == 0) ++evens;
    bool knot = (n % 2 == 1) ? evens <= 1 : evens == 1;
    if (knot != (d.components.size() == 1)) throw std::logic_error("pretzel: parity mismatch");
    return d;
}

Diagram four_plat(const std::vector<int>& word) {
    if (word.empty() || word.size() % 2 == 0)
        throw std::invalid_argument("four_plat: need an odd number of twist counts");
    for (int a : word)
        if (a < 1) throw std::invalid_argument("four_plat: twist counts must be >= 1");

    Proto p;
    std::array<std::optional<Proto::End>, 5> pend, bottom;
    auto attach = [&](int pos, Proto::End e) {
        if (pend[pos])
            p.connect(*pend[pos], e);
        else
            bottom[pos] = e;
    };
    for (std::size_t i = 0; i < word.size(); ++i) {
        // Odd-index letters braid the middle pair, even-index letters the left
        // pair; their top diagonals are opposite so the projection alternates.
        int left = (i % 2 == 0) ? 2 : 1;
        int over = (i % 2 == 0) ? 0 : 1;
        for (int t = 0; t < word[i]; ++t) {
            int b = p.add_box(over);
            attach(left, {b, kSW});
            attach(left + 1, {b, kSE});
            pend[left] = {{b, kNW}};
            pend[left + 1] = {{b, kNE}};
        }
    }
    auto cap_pair = [&](int a, int b) {
        if (bottom[a] && bottom[b]) {
            p.connect(*bottom[a], *bottom[b]);
            p.connect(*pend[a], *pend[b]);
        } else if (bottom[a]) {
            p.connect(*bottom[a], *pend[a]);
        } else if (bottom[b]) {
            p.connect(*bottom[b], *pend[b]);
        } else {
            throw std::logic_error("four_plat: empty strand pair");
        }
    };
    cap_pair(1, 2);
    cap_pair(3, 4);
    return p.build();
}

namespace {

void check_crossing_index(const Diagram& d, int index, const char* who) {
    if (index < 0 || index >= static_cast<int>(d.crossings.size())) {
        std::ostringstream os;
        os << who << ": crossing index " << index << " outside 0.." << d.crossings.size() - 1;
        throw std::out_of_range(os.str());
    }
}

}  // namespace

Diagram twist_replace(const Diagram& d, int crossing) {
    require_valid(d, "twist_replace");
    check_crossing_index(d, crossing, "twist_replace");

    // The three half-twists stack in the tangle direction: the two strands
    // weave through the stack, so each one alternates over/under and the
    // boundary arcs keep their original slots. The bottom crossing reuses the
    // incoming arcs, the top one the outgoing arcs, and both strands pass the
    // middle crossing between its new neighbors.
    // The stack side is a geometric choice the slot convention cannot see, so
    // the negative table is the mirror conjugate of the positive one; that
    // makes the surgery commute with mirroring.
    Diagram r = d;
    const Crossing c = d.crossings[crossing];
    const int A = c.slots[0], B = c.slots[1], C = c.slots[2], D = c.slots[3];
    int p = ++r.arc_count, q = ++r.arc_count;  // under-strand internals, in flow order
    int s = ++r.arc_count, t = ++r.arc_count;  // over-strand internals, in flow order
    if (c.sign > 0) {
        r.crossings[crossing] = {{A, B, p, s}, 1};
        r.crossings.push_back({{t, q, s, p}, 1});
        r.crossings.push_back({{q, t, C, D}, 1});
    } else {
        r.crossings[crossing] = {{q, B, C, s}, -1};
        r.crossings.push_back({{s, p, t, q}, -1});
        r.crossings.push_back({{A, t, p, D}, -1});
    }
    r.components = walk_components(r.crossings, r.arc_count);
    require_valid(r, "twist_replace");
    return r;
}

Diagram half_to_full(const Diagram& d, int crossing) {
    require_valid(d, "half_to_full");
    check_crossing_index(d, crossing, "half_to_full");

    Diagram r = d;
    const Crossing c = d.crossings[crossing];
    const int A = c.slots[0], B = c.slots[1], C = c.slots[2], D = c.slots[3];
    int p = ++r.arc_count, s = ++r.arc_count;
    if (c.sign > 0) {
        r.crossings[crossing] = {{A, s, p, D}, 1};
        r.crossings.push_back({{s, B, C, p}, 1});
    } else {
        r.crossings[crossing] = {{A, B, p, s}, -1};
        r.crossings.push_back({{s, p, C, D}, -1});
    }
    r.components = walk_components(r.crossings, r.arc_count);
    require_valid(r, "half_to_full");
    return r;
}

namespace {

// ---- doubling ----------------------------------------------------------
//
// Every arc y of the companion becomes an antiparallel pair: copy 0 keeps y's
// direction, copy 1 is the push-off on its right running backwards. Every
// crossing becomes a block of four crossings in which both copies of the old
// over-strand stay on top. With the under lanes drawn northbound (copy 0 on
// the left) and the over lanes crossing them, the block wiring below is the
// only one compatible with the slot and sign conventions; each block holds
// two positive and two negative crossings, so a flat double has writhe 0.

struct PairEnd {
    int x, slot;
};

PairEnd find_head(const std::vector<Crossing>& xs, int arc) {
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        for (int s = 0; s < 4; ++s)
            if (xs[i].slots[s] == arc && slot_is_incoming(xs[i], s)) return {i, s};
    throw std::logic_error("doubling: arc head not found");
}

PairEnd find_tail(const std::vector<Crossing>& xs, int arc) {
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        for (int s = 0; s < 4; ++s)
            if (xs[i].slots[s] == arc && !slot_is_incoming(xs[i], s)) return {i, s};
    throw std::logic_error("doubling: arc tail not found");
}

// Stacks |twists| full twists onto the antiparallel pair (P up, Q down next
// to it). P keeps its label below the stack, Q above it. Returns the pair's
// new top pieces {P', Q'} for follow-up surgery.
std::pair<int, int> insert_twist_stack(std::vector<Crossing>& xs, int& arc_count, int P, int Q,
                                       int twists) {
    const int k = std::abs(twists);
    if (k == 0) return {P, Q};

    std::vector<int> pseg(k + 1), qseg(k + 1);
    pseg[0] = P;
    for (int t = 1; t <= k; ++t) pseg[t] = ++arc_count;
    qseg[k] = Q;
    for (int t = 0; t < k; ++t) qseg[t] = ++arc_count;

    auto [phx, phs] = find_head(xs, P);
    xs[phx].slots[phs] = pseg[k];
    auto [qhx, qhs] = find_head(xs, Q);
    xs[qhx].slots[qhs] = qseg[0];

    for (int t = 1; t <= k; ++t) {
        int pm = ++arc_count, qm = ++arc_count;
        int pi = pseg[t - 1], po = pseg[t], qi = qseg[t], qo = qseg[t - 1];
        if (twists > 0) {
            xs.push_back({{pi, qo, pm, qm}, 1});
            xs.push_back({{qi, po, qm, pm}, 1});
        } else {
            xs.push_back({{qm, pi, qo, pm}, -1});
            xs.push_back({{pm, qi, po, qm}, -1});
        }
    }
    return {pseg[k], qseg[k]};
}

// Cuts the pair open just below P's head and just below Q's tail, then hooks
// the two resulting U-turns through each other: two crossings of the clasp
// sign, and the doubled strand becomes a single component.
void insert_clasp(std::vector<Crossing>& xs, int& arc_count, int P, int Q, int sign) {
    int e1 = ++arc_count, f0 = ++arc_count;
    int g = ++arc_count, h = ++arc_count;
    auto [phx, phs] = find_head(xs, P);
    xs[phx].slots[phs] = e1;
    auto [qtx, qts] = find_tail(xs, Q);
    xs[qtx].slots[qts] = f0;
    if (sign > 0) {
        xs.push_back({{g, h, Q, f0}, 1});
        xs.push_back({{h, g, e1, P}, 1});
    } else {
        xs.push_back({{f0, g, h, Q}, -1});
        xs.push_back({{P, h, g, e1}, -1});
    }
}

// Twist-ring double of the crossing-free unknot: the pair alone, optionally
// clasped. Covers the degenerate companion so the doubles stay total.
Diagram double_of_unknot(int twists, int clasp) {
    const int k = std::abs(twists);
    Diagram d;
    if (k == 0 && clasp == 0) return Diagram::unlink(2);

    std::vector<int> pseg(k + 1), qseg(k + 1);
    if (clasp == 0) {
        // Closed ring: top piece wraps around to become the bottom piece.
        for (int t = 1; t <= k; ++t) pseg[t] = ++d.arc_count;
        for (int t = 0; t < k; ++t) qseg[t] = ++d.arc_count;
        pseg[0] = pseg[k];
        qseg[k] = qseg[0];
    } else {
        for (int t = 0; t <= k; ++t) pseg[t] = ++d.arc_count;
        for (int t = 0; t <= k; ++t) qseg[t] = ++d.arc_count;
    }
    for (int t = 1; t <= k; ++t) {
        int pm = ++d.arc_count, qm = ++d.arc_count;
        int pi = pseg[t - 1], po = pseg[t], qi = qseg[t], qo = qseg[t - 1];
        if (twists > 0) {
            d.crossings.push_back({{pi, qo, pm, qm}, 1});
            d.crossings.push_back({{qi, po, qm, pm}, 1});
        } else {
            d.crossings.push_back({{qm, pi, qo, pm}, -1});
            d.crossings.push_back({{pm, qi, po, qm}, -1});
        }
    }
    if (clasp != 0) {
        // With no companion arcs the clasp exits wrap straight around.
        int e0 = pseg[k], e1 = pseg[0], f0 = qseg[0], f1 = qseg[k];
        int g = ++d.arc_count, h = ++d.arc_count;
        if (clasp > 0) {
            d.crossings.push_back({{g, h, f1, f0}, 1});
            d.crossings.push_back({{h, g, e1, e0}, 1});
        } else {
            d.crossings.push_back({{f0, g, h, f1}, -1});
            d.crossings.push_back({{e0, h, g, e1}, -1});
        }
    }
    d.components = walk_components(d.crossings, d.arc_count);
    require_valid(d, "doubling");
    return d;
}

Diagram build_double(const Diagram& d, const DoubleOptions& opt, int clasp) {
    require_valid(d, "doubling");
    if (d.components.size() != 1)
        throw std::invalid_argument("doubling: companion must have exactly one component");
    const int c = static_cast<int>(d.crossings.size());
    if (c == 0) {
        if (opt.hidden_twists && opt.twists != 0)
            throw std::invalid_argument("doubling: hidden twists need a crossing to hide in");
        return double_of_unknot(opt.twists, clasp);
    }

    int site = opt.site_arc == 0 ? 1 : opt.site_arc;
    if (site < 1 || site > d.arc_count)
        throw std::invalid_argument("doubling: site arc outside the diagram");

    Diagram out;
    std::vector<int> copy0(d.arc_count + 1), copy1(d.arc_count + 1);
    for (int a = 1; a <= d.arc_count; ++a) copy0[a] = ++out.arc_count;
    for (int a = 1; a <= d.arc_count; ++a) copy1[a] = ++out.arc_count;
    std::vector<int> lane_m(c), lane_p(c), lane_n(c), lane_q(c);
    for (int x = 0; x < c; ++x) {
        lane_m[x] = ++out.arc_count;  // copy-0 under lane, northbound
        lane_p[x] = ++out.arc_count;  // copy-0 over lane
        lane_n[x] = ++out.arc_count;  // copy-1 under lane, southbound
        lane_q[x] = ++out.arc_count;  // copy-1 over lane
    }

    for (int x = 0; x < c; ++x) {
        const Crossing& cr = d.crossings[x];
        const int A = cr.slots[0], C = cr.slots[2];
        const int OIN = cr.slots[over_in_slot(cr)], OOUT = cr.slots[over_out_slot(cr)];
        const int m = lane_m[x], p = lane_p[x], n = lane_n[x], q = lane_q[x];
        if (cr.sign > 0) {
            out.crossings.push_back({{copy0[A], q, m, copy1[OIN]}, -1});
            out.crossings.push_back({{m, p, copy0[C], copy0[OIN]}, 1});
            out.crossings.push_back({{copy1[C], p, n, copy0[OOUT]}, -1});
            out.crossings.push_back({{n, q, copy1[A], copy1[OOUT]}, 1});
        } else {
            out.crossings.push_back({{copy0[A], p, m, copy0[OOUT]}, -1});
            out.crossings.push_back({{m, q, copy0[C], copy1[OOUT]}, 1});
            out.crossings.push_back({{copy1[C], q, n, copy1[OIN]}, -1});
            out.crossings.push_back({{n, p, copy1[A], copy0[OIN]}, 1});
        }
    }

    int top_p = copy0[site], top_q = copy1[site];
    if (opt.hidden_twists) {
        insert_twist_stack(out.crossings, out.arc_count, lane_m[0], lane_n[0], opt.twists);
    } else {
        std::tie(top_p, top_q) =
            insert_twist_stack(out.crossings, out.arc_count, top_p, top_q, opt.twists);
    }
    if (clasp != 0) insert_clasp(out.crossings, out.arc_count, top_p, top_q, clasp);

    out.components = walk_components(out.crossings, out.arc_count);
    require_valid(out, "doubling");
    return out;
}

}  // namespace

Diagram flat_double(const Diagram& d, const DoubleOptions& opt) {
    Diagram r = build_double(d, opt, 0);
    if (r.components.size() != 2) throw std::logic_error("flat_double: expected two components");
    return r;
}

Diagram whitehead_double(const Diagram& d, int clasp_sign, const DoubleOptions& opt) {
    if (clasp_sign != 1 && clasp_sign != -1)
        throw std::invalid_argument("whitehead_double: clasp sign must be +1 or -1");
    Diagram r = build_double(d, opt, clasp_sign);
    if (r.components.size() != 1)
        throw std::logic_error("whitehead_double: expected one component");
    return r;
}

namespace {

void check_plat_word(const std::vector<int>& word, const char* who) {
    if (word.empty() || word.size() % 2 == 0) {
        std::ostringstream os;
        os << who << ": need an odd number of twist counts";
        throw std::invalid_argument(os.str());
    }
    for (int a : word)
        if (a < 1) {
            std::ostringstream os;
            os << who << ": twist counts must be >= 1";
            throw std::invalid_argument(os.str());
        }
}

}  // namespace

std::vector<DeflationMove> deflation_path(const std::vector<int>& word) {
    check_plat_word(word, "deflation_path");
    if (word.size() < 3)
        throw std::invalid_argument("deflation_path: need at least three columns");

    std::vector<DeflationMove> moves;
    std::vector<int> w = word;
    for (std::size_t i = 0; i < w.size(); ++i)
        while (w[i] > 1) {
            --w[i];
            moves.push_back({DeflationMove::Kind::LowerColumn, static_cast<int>(i), w});
        }
    while (w.size() > 3) {
        w.erase(w.begin(), w.begin() + 2);
        moves.push_back({DeflationMove::Kind::DropLeadingPair, 0, w});
    }
    return moves;
}

Diagram replay_deflation(const std::vector<int>& word) {
    auto moves = deflation_path(word);

    std::vector<int> w = {1, 1, 1};
    Diagram d = four_plat(w);
    // four_plat emits each column's crossings contiguously, bottom first, so
    // the top crossing of column i sits at (a_1 + ... + a_i) - 1. A
    // twist_replace there appends its two new crossings at the end of the
    // list, which keeps them the column's top for the next inflation.
    std::vector<int> top(w.size());
    auto reset_tops = [&] {
        top.assign(w.size(), 0);
        int next = 0;
        for (std::size_t i = 0; i < w.size(); ++i) top[i] = (next += w[i]) - 1;
    };
    reset_tops();

    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (it->kind == DeflationMove::Kind::DropLeadingPair) {
            w.insert(w.begin(), {1, 1});
            d = four_plat(w);
            reset_tops();
            continue;
        }
        int col = it->column;
        auto next = std::next(it);
        if (next != moves.rend() && next->kind == DeflationMove::Kind::LowerColumn &&
            next->column == col) {
            int grown = static_cast<int>(d.crossings.size());
            d = twist_replace(d, top[col]);
            top[col] = grown + 1;
            w[col] += 2;
            it = next;
        } else {
            // A column of even height cannot be reached by whole full twists;
            // the odd half-twist is realized by rebuilding the plat.
            ++w[col];
            d = four_plat(w);
            reset_tops();
        }
    }
    if (w != word) throw std::logic_error("replay_deflation: word bookkeeping drifted");
    return d;
}

namespace {

std::vector<int> parse_int_list(const std::string& s, const std::string& ctx) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("spec: bad integer '" + tok + "' in " + ctx);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int parse_spec_int(const std::string& tok, const std::string& ctx) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("spec: bad integer '" + tok + "' in " + ctx);
    }
}

Diagram apply_spec_op(const Diagram& d, const std::string& op) {
    auto colon = op.find(':');
    std::string head = op.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : op.substr(colon + 1);

    if (head == "twist") return twist_replace(d, parse_spec_int(args, "twist"));
    if (head == "full") return half_to_full(d, parse_spec_int(args, "full"));
    if (head != "double") throw std::invalid_argument("spec: unknown operation '" + head + "'");

    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= args.size()) {
        std::size_t comma = args.find(',', pos);
        parts.push_back(args.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.empty() || (parts[0] != "flat" && parts[0] != "wh"))
        throw std::invalid_argument("spec: double needs kind 'flat' or 'wh'");

    DoubleOptions opt;
    int clasp = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& kv = parts[i];
        if (kv == "hidden") {
            opt.hidden_twists = true;
        } else if (kv.rfind("n=", 0) == 0) {
            opt.twists = parse_spec_int(kv.substr(2), "double");
        } else if (kv.rfind("site=", 0) == 0) {
            opt.site_arc = parse_spec_int(kv.substr(5), "double");
        } else if (kv.rfind("clasp=", 0) == 0) {
            std::string v = kv.substr(6);
            if (v == "+")
                clasp = 1;
            else if (v == "-")
                clasp = -1;
            else
                throw std::invalid_argument("spec: clasp must be + or -");
        } else {
            throw std::invalid_argument("spec: unknown double option '" + kv + "'");
        }
    }
    if (parts[0] == "flat") {
        if (clasp != 0) throw std::invalid_argument("spec: clasp only applies to double:wh");
        return flat_double(d, opt);
    }
    if (clasp == 0) throw std::invalid_argument("spec: double:wh needs clasp=+ or clasp=-");
    return whitehead_double(d, clasp, opt);
}

}  // namespace

Diagram build_from_spec(const std::string& spec) {
    std::vector<std::string> stages;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t slash = spec.find('/', pos);
        stages.push_back(spec.substr(pos, slash == std::string::npos ? slash : slash - pos));
        if (slash == std::string::npos) break;
        pos = slash + 1;
    }
    if (stages.empty() || stages[0].empty())
        throw std::invalid_argument("spec: empty constructor");

    const std::string& base = stages[0];
    auto colon = base.find(':');
    std::string head = base.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : base.substr(colon + 1);

    Diagram d;
    if (head == "unknot") {
        d = Diagram::unknot();
    } else if (head == "unlink") {
        d = Diagram::unlink(parse_spec_int(args, "unlink"));
    } else if (head == "torus2") {
        d = torus2(parse_spec_int(args, "torus2"));
    } else if (head == "pretzel") {
        d = pretzel(parse_int_list(args, "pretzel"));
    } else if (head == "fourplat" || head == "four_plat") {
        d = four_plat(parse_int_list(args, "fourplat"));
    } else {
        throw std::invalid_argument("spec: unknown constructor '" + head + "'");
    }

    for (std::size_t i = 1; i < stages.size(); ++i) d = apply_spec_op(d, stages[i]);
    return d;
}

}  // namespace skeinkit
