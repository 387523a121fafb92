#include <doctest.h>

#include <random>
#include <set>

#include "knotcalc/pretzel.hpp"
#include "knotcalc/seifert.hpp"
#include "support/suite.hpp"

using namespace knotcalc;

namespace {

SignedGaussCode closure_code(const char* braid_word) {
    return pd_to_gauss(braid_closure(parse_braid(braid_word)));
}

}  // namespace

TEST_CASE("seifert_circles of the trefoil PD split the odd and even arcs") {
    const auto code = pd_to_gauss(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
    const auto circles = seifert_circles(code);
    REQUIRE(circles.size() == 2);
    CHECK(circles[0] == std::vector<int>{1, 3, 5});
    CHECK(circles[1] == std::vector<int>{2, 4, 6});
}

TEST_CASE("seifert_circles edge cases") {
    CHECK(seifert_circles(SignedGaussCode{}).size() == 1);
    CHECK(seifert_circles(parse_gauss("O1+ U1+")).size() == 2);
    CHECK(seifert_circles(closure_code("1 -2 1 -2")).size() == 3);
}

TEST_CASE("seifert_graph of the trefoil: two circles, three parallel + edges") {
    const auto g = seifert_graph(closure_code("1 1 1"));
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 3);
    for (const auto& edge : g.edges()) {
        CHECK(edge.sign == Sign::plus);
        CHECK(std::set<int>{edge.u, edge.v} == std::set<int>{1, 2});
    }
}

TEST_CASE("seifert_graph of the figure-eight closure is a signed path shape") {
    const auto g = seifert_graph(closure_code("1 -2 1 -2"));
    CHECK(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 4);
    int plus = 0, minus = 0;
    for (const auto& edge : g.edges()) (edge.sign == Sign::plus ? plus : minus)++;
    CHECK(plus == 2);
    CHECK(minus == 2);
}

TEST_CASE("seifert_graph of the unknot") {
    const auto g = seifert_graph(SignedGaussCode{});
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("seifert_graph detects unrealizable codes via loops") {
    // both chords interleave and parallel: the smoothed state has one circle
    SignedGaussCode bad;
    bad.visits = {{1, Pass::over, Sign::plus},
                  {2, Pass::over, Sign::plus},
                  {1, Pass::under, Sign::plus},
                  {2, Pass::under, Sign::plus}};
    try {
        seifert_graph(bad);
        FAIL("expected LoopDetected");
    } catch (const KnotError& e) {
        CHECK(e.kind() == ErrorKind::loop_detected);
    }
}

TEST_CASE("count_o_signed on the worked examples") {
    const auto trefoil = closure_code("1 1 1");
    CHECK(count_o_signed(trefoil, Sign::plus) == 1);
    CHECK(count_o_signed(trefoil, Sign::minus) == 2);

    const auto fig8 = closure_code("1 -2 1 -2");
    CHECK(count_o_signed(fig8, Sign::plus) == 2);
    CHECK(count_o_signed(fig8, Sign::minus) == 2);

    const auto pretzel = make_pretzel(3, -5, -7);
    CHECK(count_o_signed(pretzel, Sign::plus) == 3);
    CHECK(count_o_signed(pretzel, Sign::minus) == 11);
}

TEST_CASE("decompose on the pretzel fixture") {
    const auto dec = decompose(make_pretzel(3, -5, -7));
    CHECK(dec.counts.o == 14);
    CHECK(dec.counts.o_plus == 3);
    CHECK(dec.counts.o_minus == 11);
    CHECK(dec.counts.delta == 1);
    CHECK(dec.counts.w == 9);
    CHECK(dec.counts.c == 15);
}

TEST_CASE("decompose on the figure-eight closure and the unknot") {
    const auto fig8 = decompose(closure_code("1 -2 1 -2"));
    CHECK(fig8.counts == DiagramCounts{0, 4, 3, 2, 2, 0, 2, 2});

    const auto unknot = decompose(SignedGaussCode{});
    CHECK(unknot.counts == DiagramCounts{0, 0, 1, 1, 1, 0, 0, 0});
}

TEST_CASE("decompose incidence joins two distinct circles per crossing") {
    const auto dec = decompose(closure_code("1 1 1 2 2 -2"));
    CHECK(dec.incidence.size() == 6);
    for (const auto& entry : dec.incidence) CHECK(entry.circles.first != entry.circles.second);
}

TEST_CASE("random closures: counts, graph shape, and mirror symmetry") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        const auto word = testing::random_knot_word(rng, false);
        const auto code = pd_to_gauss(braid_closure(word));
        const auto dec = decompose(code);

        // circles of a closure = strands
        CHECK(dec.counts.o == word.strands);
        // graph shape: one vertex per circle, one edge per crossing
        const auto g = seifert_graph(code);
        CHECK(g.vertex_count() == dec.counts.o);
        CHECK(g.edge_count() == dec.counts.c);
        // delta equals the first Betti number of the derived graph
        CHECK(dec.counts.delta == betti1(delta_graph(g)));
        CHECK(dec.counts.delta >= 0);
        CHECK(dec.counts.o_plus >= 1);
        CHECK(dec.counts.o_minus >= 1);

        const auto mirrored = decompose(mirror(code));
        CHECK(mirrored.counts.o == dec.counts.o);
        CHECK(mirrored.counts.o_plus == dec.counts.o_minus);
        CHECK(mirrored.counts.o_minus == dec.counts.o_plus);
        CHECK(mirrored.counts.delta == dec.counts.delta);
        CHECK(mirrored.counts.w == -dec.counts.w);
    }
}
