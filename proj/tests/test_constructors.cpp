#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "skeinkit/canonical.hpp"
#include "skeinkit/constructors.hpp"
#include "skeinkit/diagram.hpp"
#include "skeinkit/faces.hpp"

using namespace skeinkit;

TEST_CASE("closed 2-braids") {
    for (int n = 2; n <= 6; ++n) {
        Diagram d = torus2(n);
        CHECK(d.crossings.size() == static_cast<std::size_t>(n));
        CHECK(writhe(d) == n);
        CHECK(d.components.size() == (n % 2 ? 1u : 2u));
        CHECK(validate(d).ok());
        CHECK(is_alternating(d));
        CHECK(is_connected_projection(d));
    }
    CHECK_THROWS_AS(torus2(1), std::invalid_argument);
}

TEST_CASE("pretzel necklaces") {
    Diagram p = pretzel({3, -1, 2});
    CHECK(p.crossings.size() == 6);
    CHECK(p.components.size() == 1);
    CHECK(validate(p).ok());
    // Band strands are antiparallel where the necklace routing demands, so
    // the writhe is not the twist sum; the seeded orientation gives 0 here.
    CHECK(writhe(p) == 0);
    CHECK(writhe(pretzel({3, 1, 1})) == 5);

    // One-band pretzels are closed twist regions.
    CHECK(validate(pretzel({4})).ok());

    // pretzel(1,1,1) is the same diagram as the closed 2-braid trefoil.
    CHECK(canonical_key(pretzel({1, 1, 1})) == canonical_key(torus2(3)));

    CHECK_THROWS_AS(pretzel({}), std::invalid_argument);
    CHECK_THROWS_AS(pretzel({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("4-plat closures") {
    Diagram p = four_plat({2, 1, 1});
    CHECK(p.crossings.size() == 4);
    CHECK(p.components.size() == 1);
    CHECK(validate(p).ok());
    CHECK(is_alternating(p));

    CHECK_THROWS_AS(four_plat({1, 1}), std::invalid_argument);    // even length
    CHECK_THROWS_AS(four_plat({2, 0, 1}), std::invalid_argument); // entry below 1
}

TEST_CASE("twist_replace grows a band by two crossings in place") {
    // Any trefoil crossing sits in a one-crossing band; tripling it gives the
    // (3,1,1) pretzel diagram.
    for (int i = 0; i < 3; ++i) {
        Diagram r = twist_replace(torus2(3), i);
        CHECK(r.crossings.size() == 5);
        CHECK(validate(r).ok());
        CHECK(canonical_key(r) == canonical_key(pretzel({3, 1, 1})));
    }

    // Plat columns grow the same way: (1,1,1) column 0 becomes (3,1,1).
    CHECK(canonical_key(twist_replace(four_plat({1, 1, 1}), 0)) ==
          canonical_key(four_plat({3, 1, 1})));

    // Alternation, connectivity, and nugatory-freeness survive on 2-braids.
    for (int n = 2; n <= 5; ++n) {
        for (int i = 0; i < n; ++i) {
            Diagram r = twist_replace(torus2(n), i);
            CHECK(r.components.size() == torus2(n).components.size());
            CHECK(is_alternating(r));
            CHECK(is_connected_projection(r));
            FaceCensus faces = face_census(r);
            for (std::size_t k = 0; k < r.crossings.size(); ++k)
                CHECK_FALSE(is_nugatory_crossing(faces, static_cast<int>(k)));
        }
    }

    CHECK_THROWS_AS(twist_replace(torus2(3), 3), std::out_of_range);
}

TEST_CASE("half_to_full reroutes the strands") {
    // A full twist in place of one 2-braid crossing closes to the next braid:
    // the trefoil becomes the 4-crossing 2-component torus link.
    Diagram r = half_to_full(torus2(3), 1);
    CHECK(r.crossings.size() == 4);
    CHECK(r.components.size() == 2);
    CHECK(validate(r).ok());
    CHECK(canonical_key(r) == canonical_key(torus2(4)));

    CHECK_THROWS_AS(half_to_full(torus2(3), -1), std::out_of_range);
}

TEST_CASE("flat doubles") {
    Diagram t3 = torus2(3);
    for (int n : {-2, 0, 3}) {
        DoubleOptions opt;
        opt.twists = n;
        Diagram d = flat_double(t3, opt);
        CHECK(d.crossings.size() == static_cast<std::size_t>(12 + 2 * (n < 0 ? -n : n)));
        CHECK(d.components.size() == 2);
        CHECK(validate(d).ok());
        // Antiparallel doubled blocks cancel in the writhe; only the twists
        // contribute, two same-sign crossings per full twist.
        CHECK(writhe(d) == 2 * n);
    }

    // The companion must be a knot.
    CHECK_THROWS_AS(flat_double(torus2(2)), std::invalid_argument);
}

TEST_CASE("whitehead doubles") {
    Diagram t3 = torus2(3);
    for (int clasp : {1, -1}) {
        for (int n : {-1, 0, 2}) {
            DoubleOptions opt;
            opt.twists = n;
            Diagram d = whitehead_double(t3, clasp, opt);
            CHECK(d.crossings.size() == static_cast<std::size_t>(14 + 2 * (n < 0 ? -n : n)));
            CHECK(d.components.size() == 1);
            CHECK(validate(d).ok());
            CHECK(writhe(d) == 2 * n + 2 * clasp);

            // The clasp is the final two crossings, both of the clasp sign.
            CHECK(d.crossings[d.crossings.size() - 2].sign == clasp);
            CHECK(d.crossings[d.crossings.size() - 1].sign == clasp);
        }
    }
    CHECK_THROWS_AS(whitehead_double(t3, 0), std::invalid_argument);
    CHECK_THROWS_AS(whitehead_double(torus2(2), 1), std::invalid_argument);
}

TEST_CASE("double site and hidden-twist options") {
    Diagram t3 = torus2(3);

    // Every companion arc is a legal site.
    for (int site = 1; site <= t3.arc_count; ++site) {
        DoubleOptions opt;
        opt.site_arc = site;
        CHECK(validate(whitehead_double(t3, 1, opt)).ok());
    }
    DoubleOptions bad;
    bad.site_arc = t3.arc_count + 1;
    CHECK_THROWS_AS(whitehead_double(t3, 1, bad), std::invalid_argument);

    // Hidden twists keep the crossing count formula and stay valid.
    DoubleOptions hidden;
    hidden.twists = 2;
    hidden.hidden_twists = true;
    Diagram d = whitehead_double(t3, 1, hidden);
    CHECK(d.crossings.size() == 18);
    CHECK(validate(d).ok());

    // Hidden twists need a doubled-crossing square to live in.
    CHECK_THROWS_AS(flat_double(Diagram::unknot(), hidden), std::invalid_argument);
}

TEST_CASE("deflation paths") {
    CHECK(deflation_path({1, 1, 1}).empty());

    // Columns are lowered front first, one half-twist at a time.
    auto p311 = deflation_path({3, 1, 1});
    REQUIRE(p311.size() == 2);
    CHECK(p311[0].kind == DeflationMove::Kind::LowerColumn);
    CHECK(p311[0].column == 0);
    CHECK(p311[0].word_after == std::vector<int>{2, 1, 1});
    CHECK(p311[1].word_after == std::vector<int>{1, 1, 1});

    // All-ones words shrink by dropping the leading pair.
    auto p5 = deflation_path({1, 1, 1, 1, 1});
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].kind == DeflationMove::Kind::DropLeadingPair);
    CHECK(p5[0].word_after == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(deflation_path({1, 1}), std::invalid_argument);
}

TEST_CASE("deflation replay rebuilds the plat") {
    const std::vector<std::vector<int>> words = {
        {1, 1, 1}, {3, 1, 1}, {2, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}};
    for (const auto& w : words)
        CHECK(canonical_key(replay_deflation(w)) == canonical_key(four_plat(w)));
}

TEST_CASE("spec strings") {
    CHECK(build_from_spec("unknot") == Diagram::unknot());
    CHECK(build_from_spec("unlink:3") == Diagram::unlink(3));
    CHECK(build_from_spec("torus2:4") == torus2(4));
    CHECK(build_from_spec("pretzel:3,-1,2") == pretzel({3, -1, 2}));
    CHECK(build_from_spec("fourplat:2,1,1") == four_plat({2, 1, 1}));
    CHECK(build_from_spec("torus2:3/twist:0") == twist_replace(torus2(3), 0));
    CHECK(build_from_spec("torus2:3/full:1") == half_to_full(torus2(3), 1));

    DoubleOptions opt;
    opt.twists = -2;
    opt.site_arc = 2;
    CHECK(build_from_spec("torus2:3/double:flat,n=-2,site=2") == flat_double(torus2(3), opt));
    opt.site_arc = 0;
    opt.twists = 1;
    opt.hidden_twists = true;
    CHECK(build_from_spec("torus2:3/double:wh,clasp=-,n=1,hidden") ==
          whitehead_double(torus2(3), -1, opt));

    CHECK_THROWS_AS(build_from_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(build_from_spec("bogus:3"), std::invalid_argument);
    CHECK_THROWS_AS(build_from_spec("torus2"), std::invalid_argument);
    CHECK_THROWS_AS(build_from_spec("torus2:x"), std::invalid_argument);
    CHECK_THROWS_AS(build_from_spec("torus2:3/double:wh"), std::invalid_argument);
    CHECK_THROWS_AS(build_from_spec("torus2:3/double:flat,clasp=+"), std::invalid_argument);
    CHECK_THROWS_AS(build_from_spec("torus2:3/nonsense:1"), std::invalid_argument);
}
