#pragma once

#include <map>
#include <string>
#include <vector>

namespace skeinkit {

// One claim about the z-degree M of a link: Exact(n) asserts M = n,
// UpperBound(n) asserts M <= n. Exact(n) refines UpperBound(m) exactly when
// n <= m; bounds of the same kind compare by value.
struct DegreeBound {
    enum class Kind { Exact, UpperBound };

    Kind kind = Kind::UpperBound;
    int value = 0;

    bool operator==(const DegreeBound&) const = default;

    static DegreeBound exact(int v) { return {Kind::Exact, v}; }
    static DegreeBound upper(int v) { return {Kind::UpperBound, v}; }
};

// True when claim a is at least as informative as claim b: everything
// satisfying a satisfies b.
bool refines(const DegreeBound& a, const DegreeBound& b);

// "Exact(5)" or "UpperBound(3)".
std::string to_text(const DegreeBound& b);

// Resolve a parent at one crossing: M(parent) <= max{M(switched),
// M(smoothed)+1}, with equality when the two candidates differ. The result is
// Exact only when the larger candidate strictly beats the other AND comes
// from an Exact input; ties carry no equality information and stay
// UpperBound. The rule reads the same for either parent sign; the sign is
// kept as an argument (+1 or -1) to state which skein variant was applied.
DegreeBound combine(int parent_sign, const DegreeBound& switched,
                    const DegreeBound& smoothed);

// Same calculus for the smoothed node: M(K0) <= max{M(K+), M(K-)} - 1.
DegreeBound combine_smoothed(const DegreeBound& plus, const DegreeBound& minus);

// A resolution tree for the bound calculus. Internal nodes carry exactly one
// switched and one smoothed child; every leaf carries a starting bound.
struct SkeinEdge {
    enum class Role { Switched, Smoothed };

    std::string parent;
    std::string child;
    Role role = Role::Switched;
    int parent_sign = 1;
};

struct SkeinTree {
    std::vector<std::string> nodes;
    std::vector<SkeinEdge> edges;
    std::map<std::string, DegreeBound> leaf_bounds;
};

// Structural check: known node names everywhere, one switched and one
// smoothed child per internal node, bounds exactly on the leaves, no cycles.
// Throws std::invalid_argument on any defect.
void require_valid(const SkeinTree& t);

// Bottom-up combine over the tree; returns the bound at every node. The
// result per node depends only on its children, so any evaluation order
// agrees. Throws std::invalid_argument on structural defects or cycles.
std::map<std::string, DegreeBound> propagate(const SkeinTree& t);

// JSON round-trip:
// {"nodes": ["root", ...],
//  "edges": [{"parent": "root", "child": "K_f", "role": "switched",
//             "sign": "+"}, ...],
//  "leaf_bounds": {"K_1": {"kind": "UpperBound", "value": 1}, ...}}
SkeinTree skein_tree_from_json(const std::string& text);
std::string skein_tree_to_json(const SkeinTree& t);

// Graphviz source for the tree, bounds shown inside the node labels and
// roles on the edges.
std::string to_dot(const SkeinTree& t, const std::map<std::string, DegreeBound>& bounds);

// The doubled-diagram resolution ladder over a companion diagram with c
// crossings: nine internal nodes root, K_a..K_h over leaves K_1..K_8 and the
// two isotopy leaves A and B, with starting bounds affine in c. The tight
// fixture carries K_8 = Exact(2c-3), which drives the equality steps at K_h
// and the root; degraded swaps in Exact(2c-5), turning both steps into ties.
// Requires c >= 3.
SkeinTree ladder_fixture(int c, bool degraded = false);

// Ladder variant for the case where the arc isotopy behind an estimate leaf
// releases an unknotted split component. The component adds 2 to the doubled
// z-degree, but releasing it erases at least two extra diagram crossings, a
// net drop, so each isotopy-estimate leaf (A, K_3, K_6, K_7, B) falls to
// UpperBound(2c-7). That undercuts every estimate in the tight chain, so
// propagation can only sharpen interior bounds and the root stays
// Exact(2c-1).
SkeinTree split_component_fixture(int c);

struct LedgerLine {
    std::string node;
    DegreeBound expected;
    DegreeBound got;
    bool ok = true;
};

struct LedgerReport {
    std::vector<LedgerLine> lines;  // chain order: K_a..K_h, then root
    bool ok = true;
    std::string transcript;  // one "<node> <bound>" line per chain entry
};

// Propagates the tight ladder fixture at crossing count c and compares the
// interior chain against the expected offsets {K_a: 2c-5, K_b: 2c-4,
// K_c: 2c-3, K_d: 2c-4, K_e: 2c-4, K_f: 2c-3, K_g: 2c-4, K_h: Exact(2c-2),
// root: Exact(2c-1)}. Mismatches land in the per-line diff, not exceptions.
LedgerReport ledger_check(int c);

// JSON renderings of propagation results and ledger transcripts.
std::string bounds_to_json(const std::map<std::string, DegreeBound>& bounds);
std::string ledger_report_to_json(const LedgerReport& report);

}  // namespace skeinkit
