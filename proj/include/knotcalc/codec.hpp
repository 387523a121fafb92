#pragma once

// Diagram input formats (PD code, signed Gauss code, braid word), their
// parsers and canonical renderers, and conversions into the signed Gauss
// code that every other module consumes.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knotcalc {

enum class Sign : int { plus = +1, minus = -1 };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr int sign_value(Sign s) { return static_cast<int>(s); }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class Pass { over, under };

constexpr Pass flip(Pass p) { return p == Pass::over ? Pass::under : Pass::over; }

struct GaussVisit {
    int crossing = 0;  // crossing id, positive
    Pass pass = Pass::over;
    Sign sign = Sign::plus;

    bool operator==(const GaussVisit&) const = default;
};

// Cyclic word of crossing visits. The canonical internal diagram form: arcs
// are implicit, arc k (1-based) being the strand segment that enters visit
// k-1 (0-based position). An empty code is the 0-crossing unknot.
struct SignedGaussCode {
    std::vector<GaussVisit> visits;

    int crossing_count() const { return static_cast<int>(visits.size()) / 2; }
    bool operator==(const SignedGaussCode&) const = default;
};

struct PdCrossing {
    std::array<int, 4> arcs{};  // (a,b,c,d) counterclockwise from incoming under-strand a
    std::optional<Sign> annotation;  // explicit X+/X- sign, required when n <= 1
};

struct PlanarDiagram {
    std::vector<PdCrossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

struct BraidLetter {
    int index = 0;     // generator index, 1..strands-1
    int exponent = 0;  // +1 or -1
    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strands = 2;  // always >= 2
    std::vector<BraidLetter> letters;

    int exponent_sum() const;
    bool operator==(const BraidWord&) const = default;
};

// --- parsing -------------------------------------------------------------

// `X[a,b,c,d]` tokens, optionally `X+[...]`/`X-[...]`, separated by
// whitespace and/or commas. Empty text is the 0-crossing unknot.
PlanarDiagram parse_pd(std::string_view text);

// `O1+ U2- ...` tokens.
SignedGaussCode parse_gauss(std::string_view text);

// Nonzero integer tokens; k is the k-th generator, -k its inverse. Strand
// count defaults to max(2, 1 + max |index|) unless overridden.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

// --- rendering (canonical: single spaces, ids renumbered by first visit) --

std::string render_pd(const PlanarDiagram& d);
std::string render_gauss(const SignedGaussCode& code);
std::string render_braid(const BraidWord& word);

// --- conversions and basic diagram operations ----------------------------

// Per-crossing signs in input order. Derived from the arc numbering: with
// arcs 1..2n sequential along the orientation, X(a,b,c,d) is positive when
// d = b+1 (mod 2n) and negative when b = d+1; one-crossing diagrams are
// ambiguous and need the explicit annotation.
std::vector<Sign> crossing_signs(const PlanarDiagram& d);

int writhe(const PlanarDiagram& d);
int writhe(const SignedGaussCode& code);

// Mirror image: every crossing sign flips, writhe negates.
PlanarDiagram mirror(const PlanarDiagram& d);
SignedGaussCode mirror(const SignedGaussCode& code);

// Walks arcs 1..2n in order, emitting one visit per crossing passage.
// Output ids are canonical (1..n in order of first visit).
SignedGaussCode pd_to_gauss(const PlanarDiagram& d);

// Standard closure diagram of a braid word whose permutation is an n-cycle.
// Crossing count = word length, writhe = exponent sum, Seifert circle count
// of the result = strand count.
PlanarDiagram braid_closure(const BraidWord& word);

// --- helpers used across modules and tests --------------------------------

// Renumbers crossing ids to 1..n in order of first visit.
SignedGaussCode canonicalize_ids(const SignedGaussCode& code);

// Equality as cyclic words, up to rotation and id relabeling.
bool same_up_to_rotation(const SignedGaussCode& a, const SignedGaussCode& b);

// Deletes both visits of one crossing. UnknownCrossing if absent.
SignedGaussCode remove_crossing(const SignedGaussCode& code, int crossing_id);

// Validates the Gauss-code invariants (ids twice, once over once under,
// consistent signs); throws on violation.
void validate_gauss(const SignedGaussCode& code);

}  // namespace knotcalc
