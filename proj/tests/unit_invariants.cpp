#include <doctest.h>

#include <random>

#include "knotcalc/invariants.hpp"
#include "knotcalc/pretzel.hpp"
#include "support/suite.hpp"

using namespace knotcalc;

namespace {

SignedGaussCode closure_code(const char* braid_word) {
    return pd_to_gauss(braid_closure(parse_braid(braid_word)));
}

const char* kTrefoilGauss = "O1+ U2+ O3+ U1+ O2+ U3+";

}  // namespace

TEST_CASE("kl_bound on the worked examples") {
    CHECK(kl_bound(make_pretzel(3, -5, -7)) == 0);
    CHECK(kl_bound(closure_code("1 1 1")) == 2);
    CHECK(kl_bound(SignedGaussCode{}) == 0);
}

TEST_CASE("rasmussen_homogeneous on homogeneous diagrams") {
    CHECK(rasmussen_homogeneous(closure_code("1 1 1")) == 2);
    CHECK(rasmussen_homogeneous(closure_code("1 -2 1 -2")) == 0);
    CHECK(rasmussen_homogeneous(SignedGaussCode{}) == 0);
}

TEST_CASE("rasmussen_homogeneous rejects the pretzel fixture with a witness") {
    const auto code = make_pretzel(3, -5, -7);
    try {
        rasmussen_homogeneous(code);
        FAIL("expected NotHomogeneous");
    } catch (const NotHomogeneousError& e) {
        CHECK_FALSE(e.witness().empty());
        CHECK(testing::is_simple_mixed_cycle(seifert_graph(code), e.witness()));
    }
}

TEST_CASE("genus_homogeneous on the worked examples") {
    CHECK(genus_homogeneous(closure_code("1 1 1")) == 1);
    CHECK(genus_homogeneous(closure_code("1 -2 1 -2")) == 1);
    CHECK(genus_homogeneous(SignedGaussCode{}) == 0);
    CHECK_THROWS_AS(genus_homogeneous(make_pretzel(3, -5, -7)), NotHomogeneousError);
}

TEST_CASE("is_nugatory: kinks yes, trefoil crossings no") {
    CHECK(is_nugatory(parse_gauss("O1+ U1+"), 1));
    const auto trefoil = parse_gauss(kTrefoilGauss);
    for (int id = 1; id <= 3; ++id) CHECK_FALSE(is_nugatory(trefoil, id));
    try {
        is_nugatory(trefoil, 4);
        FAIL("expected UnknownCrossing");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::unknown_crossing);
    }
}

TEST_CASE("is_nugatory on a trefoil with an appended negative kink") {
    const auto kinked = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+ O4- U4-");
    CHECK(is_nugatory(kinked, 4));
    for (int id = 1; id <= 3; ++id) CHECK_FALSE(is_nugatory(kinked, id));
}

TEST_CASE("untwist_all removes kinks and leaves reduced diagrams alone") {
    const auto kinked = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+ O4- U4-");
    const auto reduced = untwist_all(kinked);
    CHECK(same_up_to_rotation(reduced, parse_gauss(kTrefoilGauss)));

    CHECK(untwist_all(parse_gauss("O1+ U1+")).visits.empty());
    const auto trefoil = parse_gauss(kTrefoilGauss);
    CHECK(untwist_all(trefoil) == trefoil);
    // idempotent
    CHECK(untwist_all(reduced) == reduced);
}

TEST_CASE("classify_positivity on the worked examples") {
    CHECK(classify_positivity(closure_code("1 1 1")) == Positivity::positive_diagram);
    CHECK(classify_positivity(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+ O4- U4-")) ==
          Positivity::positive_after_untwist);
    CHECK(classify_positivity(closure_code("1 -2 1 -2")) == Positivity::not_shown_positive);
}

TEST_CASE("analyze on the pretzel fixture") {
    const auto report = analyze(make_pretzel(3, -5, -7));
    CHECK(report.counts.w == 9);
    CHECK(report.counts.o == 14);
    CHECK(report.counts.o_plus == 3);
    CHECK(report.counts.o_minus == 11);
    CHECK(report.counts.delta == 1);
    CHECK(report.kl_lower_bound == 0);
    CHECK_FALSE(report.homogeneous);
    CHECK_FALSE(report.s_exact.has_value());
    CHECK_FALSE(report.genus.has_value());
    CHECK_FALSE(report.s_equals_2g.has_value());
    CHECK(report.sb_lower_bound == -4);
    CHECK(report.q_fo == -5);
}

TEST_CASE("analyze on the positive trefoil closure") {
    const auto report = analyze(closure_code("1 1 1"));
    CHECK(report.homogeneous);
    CHECK(report.kl_lower_bound == 2);
    CHECK(report.s_exact == 2);
    CHECK(report.genus == 1);
    CHECK(report.s_equals_2g == true);
    CHECK(report.positivity == Positivity::positive_diagram);
    CHECK(report.fourball_genus_lb == 1);
}

TEST_CASE("analyze on the figure-eight closure") {
    const auto report = analyze(closure_code("1 -2 1 -2"));
    CHECK(report.s_exact == 0);
    CHECK(report.genus == 1);
    CHECK(report.s_equals_2g == false);
    CHECK(report.positivity == Positivity::not_shown_positive);
    CHECK(report.fourball_genus_lb == 0);
}

TEST_CASE("tau rendering") {
    CHECK(render_tau(2) == "1");
    CHECK(render_tau(0) == "0");
    CHECK(render_tau(-4) == "-2");
    CHECK(render_tau(3) == "3/2");
    CHECK(render_tau(-3) == "-3/2");
}

TEST_CASE("positive torus braid family: s matches the torus-knot value") {
    for (int k = 1; k <= 5; ++k) {
        std::string word;
        for (int i = 0; i < 2 * k + 1; ++i) word += i ? " 1" : "1";
        const auto report = analyze(closure_code(word.c_str()));
        CHECK(report.homogeneous);
        CHECK(report.s_exact == 2 * k);
        CHECK(report.genus == k);
        CHECK(report.positivity == Positivity::positive_diagram);
    }
}

TEST_CASE("one-strand stabilization of a positive homogeneous word keeps s") {
    std::mt19937 rng(31337);
    int tested = 0;
    while (tested < 40) {
        auto word = testing::random_knot_word(rng, true);
        for (auto& letter : word.letters) letter.exponent = +1;
        try {
            braid_closure(word);
        } catch (const KnotError&) {
            continue;  // forcing exponents positive may break the knot condition
        }
        BraidWord stabilized = word;
        stabilized.strands = word.strands + 1;
        stabilized.letters.push_back({word.strands, +1});

        const int s_before = rasmussen_homogeneous(pd_to_gauss(braid_closure(word)));
        const int s_after = rasmussen_homogeneous(pd_to_gauss(braid_closure(stabilized)));
        CHECK(s_before == s_after);
        ++tested;
    }
}

TEST_CASE("kink insertion never changes the exact invariant") {
    std::mt19937 rng(8888);
    const auto base = closure_code("1 -2 1 -2");
    const int s = rasmussen_homogeneous(base);
    for (int trial = 0; trial < 50; ++trial) {
        const int position =
            std::uniform_int_distribution<int>(0, static_cast<int>(base.visits.size()))(rng);
        const Sign sign = std::bernoulli_distribution(0.5)(rng) ? Sign::plus : Sign::minus;
        const auto kinked = testing::insert_kink(base, position, sign);
        const auto report = analyze(kinked);
        REQUIRE(report.homogeneous);
        CHECK(report.s_exact == s);
    }
}

TEST_CASE("random suite: bound chain and mirror antisymmetry") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const auto word = testing::random_knot_word(rng, false);
        const auto code = pd_to_gauss(braid_closure(word));
        const auto report = analyze(code);
        const auto mirrored = analyze(mirror(code));

        CHECK(report.sb_lower_bound <= report.kl_lower_bound);
        if (report.homogeneous) {
            CHECK(report.kl_lower_bound == *report.s_exact);
            CHECK(mirrored.homogeneous);
            CHECK(*report.s_exact + *mirrored.s_exact == 0);
        } else {
            CHECK(report.kl_lower_bound + mirrored.kl_lower_bound == -2 * report.counts.delta);
        }

        // untwisting leaves no nugatory crossings behind
        const auto reduced = untwist_all(code);
        for (const auto& visit : reduced.visits) CHECK_FALSE(is_nugatory(reduced, visit.crossing));
    }
}
