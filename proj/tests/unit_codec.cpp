#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "knotcalc/codec.hpp"
#include "knotcalc/seifert.hpp"
#include "support/suite.hpp"

using namespace knotcalc;

namespace {
const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kTrefoilGauss = "O1+ U2+ O3+ U1+ O2+ U3+";
}  // namespace

TEST_CASE("parse_pd accepts the trefoil and derives all-positive signs") {
    const auto d = parse_pd(kTrefoilPd);
    REQUIRE(d.crossing_count() == 3);
    for (Sign s : crossing_signs(d)) CHECK(s == Sign::plus);
    CHECK(writhe(d) == 3);
}

TEST_CASE("parse_pd of empty text is the 0-crossing unknot") {
    const auto d = parse_pd("");
    CHECK(d.crossing_count() == 0);
    CHECK(pd_to_gauss(d).visits.empty());
}

TEST_CASE("parse_pd rejects reused labels") {
    try {
        parse_pd("X[1,4,2,5] X[1,4,2,5]");
        FAIL("expected ArcLabelMisuse");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::arc_label_misuse);
    }
}

TEST_CASE("parse_pd rejects links") {
    // Hopf link, each component labeled on its own
    try {
        parse_pd("X[1,3,2,4] X[2,4,1,3]");
        FAIL("expected MultiComponent");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::multi_component);
    }
}

TEST_CASE("parse_pd needs annotations on one-crossing diagrams") {
    try {
        parse_pd("X[1,2,2,1]");
        FAIL("expected AmbiguousSign");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::ambiguous_sign);
    }
    const auto kink = parse_pd("X+[1,2,2,1]");
    CHECK(writhe(kink) == 1);
}

TEST_CASE("parse_pd rejects malformed tokens") {
    CHECK_THROWS_AS(parse_pd("X[1,4,2"), KnotError);
    CHECK_THROWS_AS(parse_pd("Y[1,4,2,5]"), KnotError);
    CHECK_THROWS_AS(parse_pd("X[1,4,x,5]"), KnotError);
}

TEST_CASE("parse_gauss round trips the trefoil") {
    const auto code = parse_gauss(kTrefoilGauss);
    REQUIRE(code.crossing_count() == 3);
    CHECK(render_gauss(code) == kTrefoilGauss);
    CHECK(writhe(code) == 3);
}

TEST_CASE("parse_gauss accepts a kink and rejects mismatches") {
    CHECK(parse_gauss("O1+ U1+").crossing_count() == 1);
    try {
        parse_gauss("O1+ U1-");
        FAIL("expected SignMismatch");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::sign_mismatch);
    }
    try {
        parse_gauss("O1+ O1+");
        FAIL("expected PassMismatch");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::pass_mismatch);
    }
    CHECK_THROWS_AS(parse_gauss("Q1+"), KnotError);
}

TEST_CASE("pd_to_gauss matches the trefoil chord diagram") {
    const auto converted = pd_to_gauss(parse_pd(kTrefoilPd));
    CHECK(same_up_to_rotation(converted, parse_gauss(kTrefoilGauss)));
}

TEST_CASE("pd_to_gauss of an annotated kink") {
    const auto converted = pd_to_gauss(parse_pd("X+[1,2,2,1]"));
    CHECK(same_up_to_rotation(converted, parse_gauss("O1+ U1+")));
}

TEST_CASE("parse_braid reads indices and exponents") {
    const auto word = parse_braid("1 -2 1 -2");
    CHECK(word.strands == 3);
    REQUIRE(word.letters.size() == 4);
    CHECK(word.letters[1] == BraidLetter{2, -1});
    CHECK(word.exponent_sum() == 0);
    CHECK(render_braid(word) == "1 -2 1 -2");
}

TEST_CASE("parse_braid rejects zero and out-of-range indices") {
    try {
        parse_braid("0");
        FAIL("expected ZeroToken");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::zero_token);
    }
    try {
        parse_braid("3", 2);
        FAIL("expected IndexOutOfRange");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::index_out_of_range);
    }
}

TEST_CASE("braid_closure of the positive trefoil word") {
    const auto d = braid_closure(parse_braid("1 1 1"));
    CHECK(d.crossing_count() == 3);
    CHECK(writhe(d) == 3);
    CHECK(seifert_circles(pd_to_gauss(d)).size() == 2);
    // the standard closure reproduces the canonical trefoil PD tuples
    std::multiset<std::array<int, 4>> tuples, expected;
    for (const auto& x : d.crossings) tuples.insert(x.arcs);
    for (const auto& x : parse_pd(kTrefoilPd).crossings) expected.insert(x.arcs);
    CHECK(tuples == expected);
    CHECK(same_up_to_rotation(pd_to_gauss(d), parse_gauss(kTrefoilGauss)));
}

TEST_CASE("braid_closure of the figure-eight word") {
    const auto d = braid_closure(parse_braid("1 -2 1 -2"));
    CHECK(d.crossing_count() == 4);
    CHECK(writhe(d) == 0);
    CHECK(seifert_circles(pd_to_gauss(d)).size() == 3);
}

TEST_CASE("braid_closure rejects link closures") {
    try {
        braid_closure(parse_braid("1 1 2 1 -2"));
        FAIL("expected ClosureIsLink");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::closure_is_link);
    }
    CHECK_THROWS_AS(braid_closure(parse_braid("")), KnotError);
}

TEST_CASE("mirror negates writhe in both representations") {
    const auto d = parse_pd(kTrefoilPd);
    CHECK(writhe(mirror(d)) == -3);
    const auto code = parse_gauss(kTrefoilGauss);
    CHECK(writhe(mirror(code)) == -3);
    CHECK(mirror(mirror(code)) == code);
}

TEST_CASE("mirror of a kink keeps its annotation consistent") {
    const auto m = mirror(parse_pd("X+[1,2,2,1]"));
    CHECK(writhe(m) == -1);
}

TEST_CASE("remove_crossing deletes both visits") {
    const auto code = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    const auto smaller = remove_crossing(code, 2);
    CHECK(smaller.crossing_count() == 2);
    try {
        remove_crossing(code, 9);
        FAIL("expected UnknownCrossing");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::unknown_crossing);
    }
}

TEST_CASE("random braid closures: structural properties of the codec") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const auto word = testing::random_knot_word(rng, false);
        const auto d = braid_closure(word);

        // crossing count and writhe come straight from the word
        CHECK(d.crossing_count() == static_cast<int>(word.letters.size()));
        CHECK(writhe(d) == word.exponent_sum());

        // sign-rule consistency: signs derivable without annotations
        if (d.crossing_count() >= 2) CHECK_NOTHROW(crossing_signs(d));

        // Gauss round trip through the canonical renderer is exact
        const auto code = pd_to_gauss(d);
        CHECK(parse_gauss(render_gauss(code)) == code);

        // mirror flips every sign and negates writhe
        const auto m = mirror(d);
        CHECK(writhe(m) == -writhe(d));
        const auto signs = crossing_signs(d);
        const auto mirrored_signs = crossing_signs(m);
        for (size_t k = 0; k < signs.size(); ++k) CHECK(mirrored_signs[k] == opposite(signs[k]));

        // pd mirror and gauss mirror produce diagrams with the same counts
        CHECK(seifert_circles(pd_to_gauss(m)).size() == seifert_circles(mirror(code)).size());
    }
}
