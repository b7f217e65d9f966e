#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "skeinkit/canonical.hpp"
#include "skeinkit/constructors.hpp"
#include "skeinkit/diagram.hpp"
#include "skeinkit/faces.hpp"
#include "skeinkit/pd_io.hpp"
#include "skeinkit/sampler.hpp"
#include "skeinkit/seifert.hpp"

using namespace skeinkit;

TEST_CASE("crossing-free unlinks") {
    Diagram u = Diagram::unknot();
    CHECK(u.crossings.empty());
    CHECK(u.components.size() == 1);
    CHECK(validate(u).ok());

    Diagram u3 = Diagram::unlink(3);
    CHECK(u3.components.size() == 3);
    CHECK(u3.arc_count == 3);
    CHECK(validate(u3).ok());
    CHECK_THROWS_AS(Diagram::unlink(0), std::invalid_argument);
}

TEST_CASE("validation rejects broken slot bookkeeping") {
    Diagram d = torus2(3);
    CHECK(validate(d).ok());

    Diagram broken = d;
    broken.crossings[0].slots[0] = broken.crossings[0].slots[2];
    CHECK_FALSE(validate(broken).ok());
    CHECK_THROWS_AS(require_valid(broken, "test"), std::invalid_argument);

    Diagram unsigned_crossing = d;
    unsigned_crossing.crossings[1].sign = 0;
    CHECK_FALSE(validate(unsigned_crossing).ok());
}

TEST_CASE("writhe and crossing surgeries") {
    Diagram t3 = torus2(3);
    CHECK(writhe(t3) == 3);
    CHECK(writhe(mirror(t3)) == -3);
    CHECK(writhe(reverse_all(t3)) == 3);

    Diagram switched = switch_crossing(t3, 1);
    CHECK(writhe(switched) == 1);
    CHECK(switched.components == t3.components);
    CHECK(validate(switched).ok());
    CHECK(switch_crossing(switched, 1) == t3);

    // Oriented smoothing of one trefoil crossing leaves the Hopf link.
    Diagram smoothed = smooth_crossing(t3, 0);
    CHECK(smoothed.crossings.size() == 2);
    CHECK(validate(smoothed).ok());
    CHECK(canonical_key(smoothed) == canonical_key(torus2(2)));

    CHECK_THROWS_AS(switch_crossing(t3, 3), std::out_of_range);
    CHECK_THROWS_AS(smooth_crossing(t3, -1), std::out_of_range);
}

TEST_CASE("arc ends index heads and tails") {
    Diagram t3 = torus2(3);
    auto ends = arc_ends(t3);
    REQUIRE(static_cast<int>(ends.size()) == t3.arc_count + 1);
    for (int a = 1; a <= t3.arc_count; ++a) {
        REQUIRE(ends[a].tail.has_value());
        REQUIRE(ends[a].head.has_value());
        auto [tc, ts] = *ends[a].tail;
        auto [hc, hs] = *ends[a].head;
        CHECK(t3.crossings[tc].slots[ts] == a);
        CHECK(t3.crossings[hc].slots[hs] == a);
        CHECK_FALSE(slot_is_incoming(t3.crossings[tc], ts));
        CHECK(slot_is_incoming(t3.crossings[hc], hs));
    }
}

TEST_CASE("disjoint union stacks components and arcs") {
    Diagram d = disjoint_union(torus2(3), torus2(2));
    CHECK(d.crossings.size() == 5);
    CHECK(d.arc_count == 10);
    CHECK(d.components.size() == 3);
    CHECK(validate(d).ok());
    CHECK(writhe(d) == 5);
    CHECK(projection_component_count(d) == 2);
    CHECK_FALSE(is_connected_projection(d));
}

TEST_CASE("simplify removes kinks and split trivial loops") {
    // Smoothing one Hopf crossing leaves a one-crossing kink of the unknot.
    Diagram kink = smooth_crossing(torus2(2), 0);
    CHECK(kink.crossings.size() == 1);
    Diagram s = simplify(kink);
    CHECK(s.crossings.empty());
    CHECK(s.components.size() == 1);

    // Reduced alternating diagrams are fixpoints.
    CHECK(simplify(torus2(3)) == torus2(3));
    CHECK(simplify(pretzel({3, 1, 1})) == pretzel({3, 1, 1}));
}

TEST_CASE("alternation and connectivity predicates") {
    CHECK(is_alternating(torus2(4)));
    CHECK(is_alternating(pretzel({3, 1, 1})));
    CHECK_FALSE(is_alternating(pretzel({3, -1, 2})));
    CHECK(is_connected_projection(torus2(3)));
    CHECK(projection_component_count(Diagram::unlink(2)) == 2);
}

TEST_CASE("face census satisfies the sphere Euler count") {
    for (int n : {2, 3, 5}) {
        Diagram d = torus2(n);
        CHECK(face_census(d).face_count() == n + 2);
    }
    // A one-crossing kink is nugatory; reduced alternating crossings are not.
    Diagram kink = smooth_crossing(torus2(2), 0);
    CHECK(is_nugatory_crossing(face_census(kink), 0));
    FaceCensus t3_faces = face_census(torus2(3));
    for (int i = 0; i < 3; ++i) CHECK_FALSE(is_nugatory_crossing(t3_faces, i));
}

TEST_CASE("seifert circle data") {
    SeifertData t3 = seifert_data(torus2(3));
    CHECK(t3.circles == 2);
    CHECK(t3.euler_characteristic == -1);
    CHECK(t3.surface_components == 1);
    CHECK(t3.genus == 1);
    CHECK(t3.morton_bound == 2);

    SeifertData f8 = seifert_data(four_plat({2, 1, 1}));
    CHECK(f8.circles == 3);
    CHECK(f8.genus == 1);
    CHECK(f8.morton_bound == 2);

    SeifertData u = seifert_data(Diagram::unknot());
    CHECK(u.circles == 1);
    CHECK(u.genus == 0);
    CHECK(u.morton_bound == 0);

    // Split diagrams sum genus over surface pieces.
    SeifertData split = seifert_data(disjoint_union(torus2(3), torus2(3)));
    CHECK(split.surface_components == 2);
    CHECK(split.genus == 2);
}

TEST_CASE("canonical key quotients labeling and global reversal") {
    Diagram t3 = torus2(3);
    std::string key = canonical_key(t3);

    // Rotate every arc label by one.
    std::vector<int> perm(t3.arc_count + 1);
    for (int a = 1; a <= t3.arc_count; ++a) perm[a] = a % t3.arc_count + 1;
    CHECK(canonical_key(relabel_arcs(t3, perm)) == key);

    // Reorder the crossing list and rotate the component cycle.
    Diagram shuffled = t3;
    std::swap(shuffled.crossings[0], shuffled.crossings[2]);
    std::rotate(shuffled.components[0].begin(), shuffled.components[0].begin() + 2,
                shuffled.components[0].end());
    CHECK(validate(shuffled).ok());
    CHECK(canonical_key(shuffled) == key);

    CHECK(canonical_key(reverse_all(t3)) == key);
    CHECK(canonical_key(mirror(t3)) != key);
    CHECK(canonical_key(torus2(5)) != canonical_key(pretzel({3, 1, 1})));
    CHECK(canonical_key(Diagram::unknot()) != canonical_key(Diagram::unlink(2)));
}

TEST_CASE("diagram text round-trips field for field") {
    const Diagram cases[] = {
        Diagram::unknot(),
        Diagram::unlink(3),
        torus2(2),
        pretzel({3, -1, 2}),
        four_plat({2, 1, 1}),
        disjoint_union(torus2(3), Diagram::unknot()),
        whitehead_double(torus2(3), -1),
    };
    for (const Diagram& d : cases) CHECK(parse_pd_text(to_pd_text(d)) == d);
}

TEST_CASE("diagram text accepts comments and blank lines") {
    std::string text = "# hopf link\n\n" + to_pd_text(torus2(2)) + "\n# closing note\n";
    CHECK(parse_pd_text(text) == torus2(2));
}

TEST_CASE("parse errors carry 1-based line numbers") {
    try {
        parse_pd_text("C: (1 2)\nX[1,2,3] +\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2:") == 0);
    }

    CHECK_THROWS_AS(parse_pd_text("X[1,3,2,4] +\n"), ParseError);      // crossing before C:
    CHECK_THROWS_AS(parse_pd_text("C: (1 3)(2 4)\n"), ParseError);     // arcs without crossings
    CHECK_THROWS_AS(parse_pd_text("C: (1 3)(2 4)\nX[1,3,2,4] +\nX[3,1,4,2] *\n"), ParseError);
}

TEST_CASE("sampler is deterministic and respects the crossing cap") {
    DiagramSampler a(7), b(7), c(8);
    bool diverged = false;
    for (int i = 0; i < 50; ++i) {
        Diagram da = a.sample(8);
        Diagram db = b.sample(8);
        CHECK(da == db);
        CHECK(validate(da).ok());
        CHECK(da.crossings.size() <= 8);
        if (!(c.sample(8) == da)) diverged = true;
    }
    CHECK(diverged);
}

TEST_CASE("sampler draws uniform residues") {
    DiagramSampler s(1);
    std::set<int> seen;
    for (int i = 0; i < 100; ++i) {
        int x = s.below(5);
        CHECK(x >= 0);
        CHECK(x < 5);
        seen.insert(x);
    }
    CHECK(seen.size() == 5);
    CHECK_THROWS_AS(s.below(0), std::invalid_argument);
}
