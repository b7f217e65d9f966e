#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "skeinkit/bounds.hpp"
#include "skeinkit/diagram.hpp"
#include "skeinkit/homfly.hpp"
#include "skeinkit/sampler.hpp"

using namespace skeinkit;

TEST_CASE("refines orders claims by information content") {
    CHECK(refines(DegreeBound::exact(3), DegreeBound::upper(3)));
    CHECK(refines(DegreeBound::exact(3), DegreeBound::upper(5)));
    CHECK(refines(DegreeBound::upper(2), DegreeBound::upper(4)));
    CHECK(refines(DegreeBound::exact(3), DegreeBound::exact(3)));

    CHECK_FALSE(refines(DegreeBound::upper(3), DegreeBound::exact(3)));
    CHECK_FALSE(refines(DegreeBound::exact(4), DegreeBound::upper(3)));
    CHECK_FALSE(refines(DegreeBound::upper(4), DegreeBound::upper(2)));
    CHECK_FALSE(refines(DegreeBound::exact(2), DegreeBound::exact(3)));
}

TEST_CASE("combine keeps equality only on a strict exact win") {
    CHECK(combine(1, DegreeBound::upper(6), DegreeBound::exact(7)) == DegreeBound::exact(8));
    CHECK(combine(1, DegreeBound::exact(3), DegreeBound::exact(2)) == DegreeBound::upper(3));
    CHECK(combine(1, DegreeBound::upper(5), DegreeBound::upper(1)) == DegreeBound::upper(5));
    CHECK(combine(1, DegreeBound::exact(0), DegreeBound::exact(0)) == DegreeBound::exact(1));
    CHECK(combine(1, DegreeBound::upper(9), DegreeBound::exact(3)) == DegreeBound::upper(9));

    // The rule is the same for either parent sign.
    CHECK(combine(-1, DegreeBound::upper(6), DegreeBound::exact(7)) == DegreeBound::exact(8));
    CHECK_THROWS_AS(combine(0, DegreeBound::upper(1), DegreeBound::upper(1)),
                    std::invalid_argument);

    CHECK(combine_smoothed(DegreeBound::exact(4), DegreeBound::upper(2)) ==
          DegreeBound::exact(3));
    CHECK(combine_smoothed(DegreeBound::exact(4), DegreeBound::upper(4)) ==
          DegreeBound::upper(3));
}

TEST_CASE("combine is monotone in both inputs") {
    const DegreeBound values[] = {DegreeBound::exact(2), DegreeBound::exact(4),
                                  DegreeBound::upper(3), DegreeBound::upper(4)};
    auto weaken = [](const DegreeBound& b) {
        return b.kind == DegreeBound::Kind::Exact ? DegreeBound::upper(b.value)
                                                  : DegreeBound::upper(b.value + 2);
    };
    for (const DegreeBound& s : values)
        for (const DegreeBound& m : values) {
            DegreeBound base = combine(1, s, m);
            CHECK(refines(base, combine(1, weaken(s), m)));
            CHECK(refines(base, combine(1, s, weaken(m))));
        }
}

TEST_CASE("combine agrees with computed degrees on random resolutions") {
    DiagramSampler sampler(555);
    for (int done = 0; done < 40;) {
        Diagram d = sampler.sample(7);
        if (d.crossings.empty()) continue;
        int i = sampler.below(static_cast<int>(d.crossings.size()));

        DegreeBound switched = DegreeBound::exact(z_degree(homfly(switch_crossing(d, i))));
        DegreeBound smoothed = DegreeBound::exact(z_degree(homfly(smooth_crossing(d, i))));
        DegreeBound parent = combine(d.crossings[i].sign, switched, smoothed);

        int actual = z_degree(homfly(d));
        if (parent.kind == DegreeBound::Kind::Exact)
            CHECK(actual == parent.value);
        else
            CHECK(actual <= parent.value);
        ++done;
    }
}

TEST_CASE("text and json renderings of bounds") {
    CHECK(to_text(DegreeBound::exact(5)) == "Exact(5)");
    CHECK(to_text(DegreeBound::upper(-3)) == "UpperBound(-3)");

    std::map<std::string, DegreeBound> bounds = {{"a", DegreeBound::exact(1)},
                                                 {"b", DegreeBound::upper(2)}};
    std::string json = bounds_to_json(bounds);
    CHECK(json.find("\"a\"") != std::string::npos);
    CHECK(json.find("\"Exact\"") != std::string::npos);
    CHECK(json.find("\"UpperBound\"") != std::string::npos);
}

TEST_CASE("propagation matches hand evaluation on a small tree") {
    SkeinTree t;
    t.nodes = {"root", "L", "R"};
    t.edges = {{"root", "L", SkeinEdge::Role::Switched, 1},
               {"root", "R", SkeinEdge::Role::Smoothed, 1}};
    t.leaf_bounds = {{"L", DegreeBound::exact(4)}, {"R", DegreeBound::upper(2)}};
    auto bounds = propagate(t);
    CHECK(bounds.at("L") == DegreeBound::exact(4));
    CHECK(bounds.at("root") == DegreeBound::exact(4));

    // A single leaf is its own answer.
    SkeinTree single;
    single.nodes = {"K"};
    single.leaf_bounds["K"] = DegreeBound::exact(5);
    CHECK(propagate(single).at("K") == DegreeBound::exact(5));
}

TEST_CASE("propagation rejects malformed trees") {
    SkeinTree t;
    t.nodes = {"root", "L", "R"};
    t.edges = {{"root", "L", SkeinEdge::Role::Switched, 1},
               {"root", "R", SkeinEdge::Role::Smoothed, 1}};
    t.leaf_bounds = {{"L", DegreeBound::exact(4)}, {"R", DegreeBound::upper(2)}};
    require_valid(t);

    SkeinTree two_switched = t;
    two_switched.edges[1].role = SkeinEdge::Role::Switched;
    CHECK_THROWS_AS(require_valid(two_switched), std::invalid_argument);

    SkeinTree unknown_child = t;
    unknown_child.edges[1].child = "mystery";
    CHECK_THROWS_AS(propagate(unknown_child), std::invalid_argument);

    SkeinTree duplicate = t;
    duplicate.nodes.push_back("L");
    CHECK_THROWS_AS(propagate(duplicate), std::invalid_argument);

    SkeinTree internal_bound = t;
    internal_bound.leaf_bounds["root"] = DegreeBound::upper(9);
    CHECK_THROWS_AS(propagate(internal_bound), std::invalid_argument);

    SkeinTree missing_leaf = t;
    missing_leaf.leaf_bounds.erase("R");
    CHECK_THROWS_AS(propagate(missing_leaf), std::invalid_argument);

    SkeinTree bad_sign = t;
    bad_sign.edges[0].parent_sign = 2;
    CHECK_THROWS_AS(propagate(bad_sign), std::invalid_argument);

    // Two internal nodes feeding each other never resolve.
    SkeinTree cyclic;
    cyclic.nodes = {"x", "y", "l1", "l2"};
    cyclic.edges = {{"x", "y", SkeinEdge::Role::Switched, 1},
                    {"x", "l1", SkeinEdge::Role::Smoothed, 1},
                    {"y", "x", SkeinEdge::Role::Switched, 1},
                    {"y", "l2", SkeinEdge::Role::Smoothed, 1}};
    cyclic.leaf_bounds = {{"l1", DegreeBound::upper(0)}, {"l2", DegreeBound::upper(0)}};
    CHECK_THROWS_AS(propagate(cyclic), std::invalid_argument);
}

TEST_CASE("propagation is independent of listing order") {
    SkeinTree t = ladder_fixture(6);
    auto reference = propagate(t);

    SkeinTree shuffled = t;
    std::reverse(shuffled.nodes.begin(), shuffled.nodes.end());
    std::reverse(shuffled.edges.begin(), shuffled.edges.end());
    CHECK(propagate(shuffled) == reference);
}

TEST_CASE("weakening any leaf never sharpens a propagated bound") {
    SkeinTree t = ladder_fixture(6);
    auto reference = propagate(t);
    for (const auto& [leaf, bound] : t.leaf_bounds) {
        SkeinTree weaker = t;
        weaker.leaf_bounds[leaf] = bound.kind == DegreeBound::Kind::Exact
                                       ? DegreeBound::upper(bound.value)
                                       : DegreeBound::upper(bound.value + 3);
        auto result = propagate(weaker);
        for (const auto& [node, value] : reference) CHECK(refines(value, result.at(node)));
    }
}

TEST_CASE("ladder fixture reproduces the chain offsets") {
    for (int c : {3, 4, 10}) {
        LedgerReport r = ledger_check(c);
        CHECK(r.ok);
        for (const LedgerLine& line : r.lines) CHECK(line.ok);
        CHECK(r.lines.back().node == "root");
        CHECK(r.lines.back().got == DegreeBound::exact(2 * c - 1));
    }

    LedgerReport r3 = ledger_check(3);
    CHECK(r3.transcript.find("K_a UpperBound(1)\n") != std::string::npos);
    CHECK(r3.transcript.find("K_h Exact(4)\n") != std::string::npos);
    CHECK(r3.transcript.find("root Exact(5)\n") != std::string::npos);

    std::string json = ledger_report_to_json(r3);
    CHECK(json.find("\"ok\": true") != std::string::npos);
    CHECK(json.find("\"root\"") != std::string::npos);

    CHECK_THROWS_AS(ladder_fixture(2), std::invalid_argument);
}

TEST_CASE("chain offsets are affine in the crossing count with slope two") {
    for (int c : {3, 5, 9}) {
        LedgerReport at_c = ledger_check(c);
        LedgerReport next = ledger_check(c + 1);
        REQUIRE(at_c.lines.size() == next.lines.size());
        for (std::size_t i = 0; i < at_c.lines.size(); ++i) {
            CHECK(next.lines[i].node == at_c.lines[i].node);
            CHECK(next.lines[i].got.kind == at_c.lines[i].got.kind);
            CHECK(next.lines[i].got.value - at_c.lines[i].got.value == 2);
        }
    }
}

TEST_CASE("degrading the top leaf turns the equality chain into ties") {
    for (int c : {3, 7}) {
        auto bounds = propagate(ladder_fixture(c, true));
        CHECK(bounds.at("K_h") == DegreeBound::upper(2 * c - 4));
        CHECK(bounds.at("root") == DegreeBound::upper(2 * c - 3));

        // The degraded top leaf asserts a different degree, not a weaker one,
        // so the roots are incomparable: two lower in value and merely upper.
        auto tight = propagate(ladder_fixture(c));
        CHECK(tight.at("root") == DegreeBound::exact(bounds.at("root").value + 2));
    }
}

TEST_CASE("split component leaves undercut the chain without moving the root") {
    for (int c : {3, 4, 10}) {
        SkeinTree fixture = split_component_fixture(c);
        for (const char* leaf : {"A", "K_3", "K_6", "K_7", "B"})
            CHECK(fixture.leaf_bounds.at(leaf) == DegreeBound::upper(2 * c - 7));
        CHECK(fixture.leaf_bounds.at("K_8") == DegreeBound::exact(2 * c - 3));

        // Every corrected leaf sits at or below every tight estimate, so each
        // propagated bound refines its tight counterpart.
        auto corrected = propagate(fixture);
        auto tight = propagate(ladder_fixture(c));
        for (const auto& [node, bound] : tight) CHECK(refines(corrected.at(node), bound));

        // Only K_g actually sharpens; the equality steps are untouched.
        CHECK(corrected.at("K_g") == DegreeBound::upper(2 * c - 6));
        CHECK(corrected.at("K_h") == tight.at("K_h"));
        CHECK(corrected.at("root") == DegreeBound::exact(2 * c - 1));
    }
}

TEST_CASE("skein trees round-trip through json") {
    SkeinTree t = ladder_fixture(5);
    std::string json = skein_tree_to_json(t);
    SkeinTree back = skein_tree_from_json(json);
    CHECK(skein_tree_to_json(back) == json);
    CHECK(propagate(back) == propagate(t));

    // Negative parent signs survive the trip.
    SkeinTree neg;
    neg.nodes = {"root", "L", "R"};
    neg.edges = {{"root", "L", SkeinEdge::Role::Switched, -1},
                 {"root", "R", SkeinEdge::Role::Smoothed, -1}};
    neg.leaf_bounds = {{"L", DegreeBound::exact(4)}, {"R", DegreeBound::upper(2)}};
    SkeinTree neg_back = skein_tree_from_json(skein_tree_to_json(neg));
    CHECK(neg_back.edges[0].parent_sign == -1);
    CHECK(propagate(neg_back) == propagate(neg));

    CHECK_THROWS_AS(skein_tree_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(skein_tree_from_json("{\"nodes\": []}"), std::invalid_argument);
    CHECK_THROWS_AS(
        skein_tree_from_json(
            R"({"nodes": ["a"], "edges": [], "leaf_bounds": {"a": {"kind": "Sharp", "value": 1}}})"),
        std::invalid_argument);
}

TEST_CASE("dot output carries bounds and roles") {
    SkeinTree t = ladder_fixture(3);
    std::string dot = to_dot(t, propagate(t));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("root\\nExact(5)") != std::string::npos);
    CHECK(dot.find("switched") != std::string::npos);
    CHECK(dot.find("smoothed") != std::string::npos);
}
