#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace knotcalc {

enum class ErrorKind {
    // input / validation
    malformed_token,
    arc_label_misuse,
    multi_component,
    ambiguous_sign,
    pass_mismatch,
    sign_mismatch,
    zero_token,
    index_out_of_range,
    closure_is_link,
    generator_missing,
    not_a_knot,
    not_a_cycle,
    unknown_crossing,
    not_homogeneous,
    invalid_job,
    // internal consistency failures (bugs, not user errors)
    loop_detected,
    parity_violation,
    cross_check_mismatch,
    equivalence_violation,
};

const char* to_string(ErrorKind kind);

class KnotError : public std::runtime_error {
public:
    KnotError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when an exact invariant is requested for a diagram whose Seifert
// graph has a block with both edge signs; carries a mixed cycle as evidence.
class NotHomogeneousError : public KnotError {
public:
    NotHomogeneousError(const std::string& message, std::vector<int> mixed_cycle_edges)
        : KnotError(ErrorKind::not_homogeneous, message), witness_(std::move(mixed_cycle_edges)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;  // edge ids of a mixed cycle in the Seifert graph
};

}  // namespace knotcalc
