#pragma once

// Seifert's algorithm on the canonical diagram form: Seifert circles, the
// signed Seifert graph, and the circle counts O, O+, O-, Delta. The signed
// counts are each computed two independent ways (shadow connectivity and
// graph components) and cross-checked.

#include <utility>
#include <vector>

#include "knotcalc/codec.hpp"
#include "knotcalc/graph.hpp"

namespace knotcalc {

struct DiagramCounts {
    int w = 0;        // writhe
    int c = 0;        // crossings
    int o = 0;        // Seifert circles
    int o_plus = 0;   // components after smoothing all negative crossings
    int o_minus = 0;  // components after smoothing all positive crossings
    int delta = 0;    // o + 1 - o_plus - o_minus
    int n_plus = 0;
    int n_minus = 0;

    bool operator==(const DiagramCounts&) const = default;
};

struct CrossingIncidence {
    int crossing = 0;                // crossing id
    std::pair<int, int> circles{};   // the two distinct circles it joins
    Sign sign = Sign::plus;
};

struct SeifertDecomposition {
    std::vector<std::vector<int>> circles;    // arc labels (1..2n) per circle
    std::vector<CrossingIncidence> incidence; // one entry per crossing
    DiagramCounts counts;
};

// Partition of the arc labels 1..2n into Seifert circles, parts ordered by
// smallest arc. The 0-crossing unknot yields one (arcless) circle.
std::vector<std::vector<int>> seifert_circles(const SignedGaussCode& code);

// One vertex per Seifert circle (ids 1..O by smallest arc), one signed edge
// per crossing (edge id = crossing id). The two circles at a crossing are
// distinct for any code realizable in the plane; LoopDetected otherwise.
SignedMultigraph seifert_graph(const SignedGaussCode& code);

// O+ for Sign::plus, O- for Sign::minus. Computes shadow connectivity after
// smoothing every crossing of the opposite sign, checks it against the
// component count of the sign-restricted Seifert graph, and returns it.
int count_o_signed(const SignedGaussCode& code, Sign sign);

SeifertDecomposition decompose(const SignedGaussCode& code);

}  // namespace knotcalc
