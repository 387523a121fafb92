#pragma once

// Bounds and exact invariants from the Seifert data: the writhe/circle-count
// lower bound for the Rasmussen invariant, the exact value (and tau and the
// Seifert genus) on homogeneous diagrams, nugatory crossing detection and
// untwisting, and the positivity classification.

#include <optional>
#include <string>

#include "knotcalc/codec.hpp"
#include "knotcalc/seifert.hpp"

namespace knotcalc {

enum class Positivity { positive_diagram, positive_after_untwist, not_shown_positive };

const char* to_string(Positivity p);

struct InvariantReport {
    DiagramCounts counts;
    bool homogeneous = false;
    int kl_lower_bound = 0;  // w - O + 2*O+ - 1 <= s
    int sb_lower_bound = 0;  // w - O + 1 <= s (slice-Bennequin)
    int q_fo = 0;            // w - O, the filtration level of the oriented-resolution cycle
    std::optional<int> s_exact;   // present iff homogeneous; equals the lower bound then
    std::optional<int> genus;     // Seifert genus (1 + c - O)/2, present iff homogeneous
    int fourball_genus_lb = 0;    // from |s| <= 2*g4
    Positivity positivity = Positivity::not_shown_positive;
    std::optional<bool> s_equals_2g;  // present iff homogeneous
};

// w - O + 2*O+ - 1, a lower bound for the Rasmussen invariant of any diagram.
int kl_bound(const SignedGaussCode& code);

// Exact Rasmussen invariant of a homogeneous diagram; NotHomogeneous (with a
// mixed-cycle witness) otherwise. Tau is half this value.
int rasmussen_homogeneous(const SignedGaussCode& code);

// (1 + c - O)/2 for a homogeneous diagram, where Seifert's algorithm
// realizes the genus.
int genus_homogeneous(const SignedGaussCode& code);

// A crossing is nugatory iff its oriented smoothing splits the shadow into
// exactly two components, equivalently iff its chord interleaves no other
// chord. Both criteria are computed and checked against each other.
bool is_nugatory(const SignedGaussCode& code, int crossing_id);

// Repeatedly deletes nugatory crossings (lowest id first) until none remain.
SignedGaussCode untwist_all(const SignedGaussCode& code);

// positive_diagram when there are no negative crossings; positive_after_untwist
// when iterated untwisting of nugatory negative crossings reaches a diagram
// with none; not_shown_positive otherwise (no claim of non-positivity).
Positivity classify_positivity(const SignedGaussCode& code);

InvariantReport analyze(const SignedGaussCode& code);

// --- report serialization ---------------------------------------------------

// Tau as a rational: "p/2" when the numerator is odd, an integer otherwise.
std::string render_tau(int s_exact);

// Flat key-value document, one `key value` line per field, fixed key set and
// order; absent optional fields render as `none`.
std::string to_structured(const InvariantReport& report);

// Human-readable rendering.
std::string to_text(const InvariantReport& report);

}  // namespace knotcalc
