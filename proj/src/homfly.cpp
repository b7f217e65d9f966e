#include "skeinkit/homfly.hpp"

#include <string>
#include <unordered_map>
#include <utility>

#include "skeinkit/canonical.hpp"
#include "skeinkit/seifert.hpp"

namespace skeinkit {

namespace {

// First crossing that breaks descending order, or -1 when the diagram is
// descending. Traversal: components in listed order, each walked from its
// lowest arc along the orientation; a crossing is bad when its first visit
// enters on the under-strand. Switching the first bad crossing makes that
// visit an over-pass and touches no earlier-visited crossing, so the first
// bad position moves strictly later; that, with the crossing count, is the
// termination measure for the skein recursion.
int first_non_descending(const Diagram& d) {
    auto ends = arc_ends(d);
    std::vector<char> visited(d.crossings.size(), 0);
    for (const auto& comp : d.components) {
        for (int arc : comp) {
            const auto& head = ends[arc].head;
            if (!head) continue;  // crossing-free loop
            auto [crossing, slot] = *head;
            if (visited[crossing]) continue;
            visited[crossing] = 1;
            if (slot == under_in_slot(d.crossings[crossing])) return crossing;
        }
    }
    return -1;
}

// A descending diagram is an unlink of its components: each component can be
// lifted above the later ones and unknotted in turn.
LaurentPoly2 descending_value(const Diagram& d) {
    return LaurentPoly2::unlink_value(static_cast<int>(d.components.size()));
}

struct Engine {
    EngineOptions opt;
    EngineStats stats;
    std::unordered_map<std::string, LaurentPoly2> memo;

    LaurentPoly2 eval(Diagram d) {
        if (++stats.expansions > opt.budget) {
            stats.memo_entries = memo.size();
            throw BudgetExceeded(stats, opt.budget);
        }
        d = simplify(d);
        if (d.crossings.empty()) return descending_value(d);

        std::string key;
        if (opt.memoize) {
            key = canonical_key(d);
            auto it = memo.find(key);
            if (it != memo.end()) {
                ++stats.memo_hits;
                return it->second;
            }
        }

        int bad = first_non_descending(d);
        LaurentPoly2 value;
        if (bad < 0) {
            value = descending_value(d);
        } else {
            LaurentPoly2 switched = eval(switch_crossing(d, bad));
            LaurentPoly2 smoothed = eval(smooth_crossing(d, bad));
            if (d.crossings[bad].sign > 0) {
                // P+ = v^2 P- + v z P0
                switched.scale(2, 0, 1);
                smoothed.scale(1, 1, 1);
            } else {
                // P- = v^-2 P+ - v^-1 z P0
                switched.scale(-2, 0, 1);
                smoothed.scale(-1, 1, -1);
            }
            value = std::move(switched);
            value += smoothed;
        }

        if (opt.memoize && memo.size() < opt.memo_cap)
            memo.emplace(std::move(key), value);
        return value;
    }
};

LaurentPoly2 reference_eval(const Diagram& d, std::uint64_t budget, EngineStats& stats) {
    if (++stats.expansions > budget) throw BudgetExceeded(stats, budget);
    if (d.crossings.empty()) return descending_value(d);
    int bad = first_non_descending(d);
    if (bad < 0) return descending_value(d);

    LaurentPoly2 switched = reference_eval(switch_crossing(d, bad), budget, stats);
    LaurentPoly2 smoothed = reference_eval(smooth_crossing(d, bad), budget, stats);
    if (d.crossings[bad].sign > 0) {
        switched.scale(2, 0, 1);
        smoothed.scale(1, 1, 1);
    } else {
        switched.scale(-2, 0, 1);
        smoothed.scale(-1, 1, -1);
    }
    switched += smoothed;
    return switched;
}

}  // namespace

BudgetExceeded::BudgetExceeded(EngineStats partial, std::uint64_t budget_)
    : std::runtime_error("homfly: expansion budget of " + std::to_string(budget_) +
                         " steps exhausted"),
      stats(partial),
      budget(budget_) {}

LaurentPoly2 homfly(const Diagram& d, const EngineOptions& opt, EngineStats* stats) {
    require_valid(d, "homfly");
    Engine engine{opt, {}, {}};
    try {
        LaurentPoly2 result = engine.eval(d);
        engine.stats.memo_entries = engine.memo.size();
        if (stats) *stats = engine.stats;
        return result;
    } catch (const BudgetExceeded&) {
        if (stats) {
            *stats = engine.stats;
            stats->memo_entries = engine.memo.size();
        }
        throw;
    }
}

LaurentPoly2 homfly_reference(const Diagram& d, std::uint64_t budget) {
    require_valid(d, "homfly_reference");
    EngineStats stats;
    return reference_eval(d, budget, stats);
}

int z_degree(const LaurentPoly2& p) { return p.z_degree(); }

int morton_bound(const Diagram& d) { return seifert_data(d).morton_bound; }

InvariantReport invariant_report(const Diagram& d, const EngineOptions& opt) {
    require_valid(d, "invariant_report");
    InvariantReport r;
    r.crossing_count = static_cast<int>(d.crossings.size());
    r.components = static_cast<int>(d.components.size());
    r.writhe = writhe(d);
    SeifertData s = seifert_data(d);
    r.seifert_circles = s.circles;
    r.canonical_genus = s.genus;
    r.morton_bound = s.morton_bound;
    r.homfly = homfly(d, opt, &r.stats);
    r.z_degree = r.homfly.z_degree();
    if (r.z_degree > r.morton_bound)
        throw std::logic_error("invariant_report: z-degree exceeds the Morton bound");
    r.morton_tight = r.z_degree == r.morton_bound;
    return r;
}

}  // namespace skeinkit
