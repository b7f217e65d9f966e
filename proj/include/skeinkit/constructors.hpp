#pragma once

#include <string>
#include <vector>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// Closed 2-braid with n crossings, all positive: the (2,n) torus knot or link.
// torus2(3) is the right-handed trefoil, torus2(2) the positive Hopf link.
// Throws std::invalid_argument for n < 2.
Diagram torus2(int n);

// Pretzel diagram P(k1,...,kn): vertical bands of |ki| crossings joined in a
// necklace, one band minimum, every ki nonzero. Positive ki match torus2
// handedness, so pretzel(1,1,1) and torus2(3) are the same diagram up to
// relabeling. Orientation is seeded deterministically per component.
Diagram pretzel(const std::vector<int>& twists);

// Plat closure of the 4-strand word s2^a1 s1^-a2 s2^a3 ...: the alternating
// 2-bridge projection. Needs an odd number of entries, all >= 1.
// four_plat(1,1,1) is the left-handed trefoil.
Diagram four_plat(const std::vector<int>& word);

// Replaces one crossing with three half-twists of the same handedness,
// stacked in the tangle direction (+2 crossings): a pretzel band or plat
// column with k crossings becomes one with k+2. Strand routing and
// orientation through the site are unchanged, so component count, alternation,
// and nugatory-freeness of reduced alternating inputs are preserved.
Diagram twist_replace(const Diagram& d, int crossing);

// Replaces one crossing with a full twist, i.e. two half-twists of the same
// handedness (+1 crossing). The strand ends reconnect the other way, so the
// component structure changes; on a closed 2-braid this splits a knot into a
// 2-component link.
Diagram half_to_full(const Diagram& d, int crossing);

struct DoubleOptions {
    // Signed count of full twists inserted into the doubled strand pair.
    int twists = 0;
    // Original arc whose parallel pair hosts the twist/clasp site; 0 picks the
    // lowest-numbered arc.
    int site_arc = 0;
    // Park the twists inside one of the doubled-crossing squares instead of at
    // the site pair. Keeps the Seifert circle census independent of the twist
    // count. Needs at least one crossing in the input.
    bool hidden_twists = false;
};

// Blackboard-framed parallel double with opt.twists full twists: each arc
// becomes an antiparallel pair (the push-off runs backwards), each crossing a
// four-crossing block that keeps the original over-strand on top. Input must
// be a one-component diagram; the result has two components and
// 4c + 2|twists| crossings.
Diagram flat_double(const Diagram& d, const DoubleOptions& opt = {});

// Whitehead double: the flat double cut open at the site pair and re-closed
// through a two-crossing clasp of the given sign (+1 or -1). One component,
// 4c + 2 + 2|twists| crossings. The clasp is always the last two crossings in
// index order.
Diagram whitehead_double(const Diagram& d, int clasp_sign, const DoubleOptions& opt = {});

// One word-level reduction step of a 4-plat towards (1,1,1).
struct DeflationMove {
    enum class Kind {
        LowerColumn,      // replace a full twist with a half twist in one column
        DropLeadingPair,  // remove the leading s2^1 s1^-1 pair of an all-ones word
    };
    Kind kind;
    int column = 0;  // LowerColumn only
    std::vector<int> word_after;
};

// Move sequence taking the word to (1,1,1): first every column is lowered to
// a single half-twist (front-most column first), then leading pairs drop two
// at a time. Throws for malformed words; returns an empty list when the word
// is already (1,1,1).
std::vector<DeflationMove> deflation_path(const std::vector<int>& word);

// Runs deflation_path(word) backwards from the trefoil plat. Two consecutive
// reversed LowerColumn moves on the same column are undone together by one
// twist_replace at the column's top crossing; an unpaired leftover (a column
// of even height) and a DropLeadingPair are undone by rebuilding the wider
// plat, since neither is a single orientation-preserving crossing surgery.
// The result is isomorphic to four_plat(word).
Diagram replay_deflation(const std::vector<int>& word);

// Builds a diagram from a spec string:
//
//   unknot  unlink:K  torus2:N  pretzel:K1,K2,...  fourplat:A1,A2,...
//
// optionally followed by operation suffixes separated by '/':
//
//   double:flat[,n=N][,site=A][,hidden]
//   double:wh,clasp=+|-[,n=N][,site=A][,hidden]
//   twist:I   (twist_replace at crossing I)
//   full:I    (half_to_full at crossing I)
//
// Throws std::invalid_argument with a description of the offending token.
Diagram build_from_spec(const std::string& spec);

}  // namespace skeinkit
