#pragma once

#include <cstdint>
#include <stdexcept>

#include "skeinkit/diagram.hpp"
#include "skeinkit/laurent.hpp"

namespace skeinkit {

// Knobs for the skein-expansion engine. budget caps the number of expansion
// steps (recursive evaluations); the engine fails loudly when it runs out
// rather than returning a partial answer.
struct EngineOptions {
    std::uint64_t budget = 8'000'000;
    bool memoize = true;
    std::size_t memo_cap = 4'000'000;
};

struct EngineStats {
    std::uint64_t expansions = 0;  // evaluation steps taken
    std::uint64_t memo_hits = 0;   // steps answered from the cache
    std::size_t memo_entries = 0;  // cache size when the run ended
};

// The expansion budget ran out. Carries the statistics accumulated up to that
// point so callers can report how much work was spent before giving up.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(EngineStats partial, std::uint64_t budget);

    EngineStats stats;
    std::uint64_t budget = 0;
};

// HOMFLY polynomial of the oriented link presented by d, in Morton's (v,z)
// convention:
//
//     v^-1 P(L+) - v P(L-) = z P(L0),    P(unknot) = 1.
//
// The engine simplifies the diagram (curl and clasp removal), answers
// crossing-free and descending diagrams with delta^(k-1) where k is the
// component count and delta = (v^-1 - v) z^-1, and otherwise resolves the
// first crossing whose first traversal visit passes under, recursing on the
// switched and smoothed diagrams. Results are memoized on canonical form when
// opt.memoize is set. Throws BudgetExceeded after opt.budget steps; fills
// *stats when given (also on the exception path, via the exception object).
LaurentPoly2 homfly(const Diagram& d, const EngineOptions& opt = {},
                    EngineStats* stats = nullptr);

// Same skein recursion with no simplification, no memoization, and no
// canonical forms: every branch is expanded in full. Exponential, so only
// suitable for small diagrams; kept as an independent cross-check on the
// engine proper.
LaurentPoly2 homfly_reference(const Diagram& d, std::uint64_t budget = 1u << 22);

// Largest z-exponent of p. Throws std::domain_error on the zero polynomial,
// which has no degree (and never arises as a link invariant).
int z_degree(const LaurentPoly2& p);

// Morton's upper bound c - s + 1 on the z-degree of the HOMFLY polynomial,
// where c is the crossing count and s the Seifert circle count of d.
int morton_bound(const Diagram& d);

// Everything the suite wants to know about one diagram in one pass.
struct InvariantReport {
    int crossing_count = 0;
    int components = 0;
    int writhe = 0;
    int seifert_circles = 0;
    int canonical_genus = 0;  // genus of the Seifert surface built from d
    LaurentPoly2 homfly;
    int z_degree = 0;
    int morton_bound = 0;
    bool morton_tight = false;  // z_degree == morton_bound
    EngineStats stats;
};

// Computes the report for d. Morton's inequality is rechecked on the computed
// polynomial; a violation means the engine itself is broken, so it surfaces
// as std::logic_error rather than a report field.
InvariantReport invariant_report(const Diagram& d, const EngineOptions& opt = {});

}  // namespace skeinkit
