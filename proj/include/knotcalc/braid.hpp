#pragma once

// Braid-word analyses: homogeneity in the Stallings sense, positive-braid
// recognition, band-generator expansion, and the bridge between braid-level
// and diagram-level homogeneity.

#include <string_view>
#include <utility>
#include <vector>

#include "knotcalc/codec.hpp"

namespace knotcalc {

struct Band {
    int i = 0;
    int j = 0;  // 1 <= i < j <= strands
    bool operator==(const Band&) const = default;
};

struct BandWord {
    int strands = 2;
    std::vector<Band> bands;
};

// `n: (i,j) (i,j) ...`
BandWord parse_band_word(std::string_view text);

// True iff every generator occurs at least once and, per generator, all
// occurrences share one exponent sign.
bool is_homogeneous_braid(const BraidWord& word);

// True iff every exponent is +1 (vacuously for the empty word).
bool is_positive_braid(const BraidWord& word);

// The band generator on strands i..j, written as a conjugate of one positive
// letter: (s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^-1. Length
// 2(j-i-1) + 1, exponent sum +1.
BraidWord expand_band(int strands, int i, int j);

// Concatenation of the expanded bands; exponent sum equals the band count.
BraidWord expand_band_word(const BandWord& word);

// (braid-level homogeneity, diagram-level homogeneity of the closure); the
// two always agree and a mismatch is reported as an internal error.
// GeneratorMissing when some generator never occurs, ClosureIsLink when the
// closure is not a knot.
std::pair<bool, bool> check_homogeneity_agreement(const BraidWord& word);

}  // namespace knotcalc
