#pragma once

// Command-line front end: input loading across the five formats, the
// analyze/pretzel/braid-check/reduce/batch subcommands, and exit-code
// mapping. The entry point is run_cli so the whole surface is testable
// without spawning a process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotcalc/codec.hpp"

namespace knotcalc {

struct BatchItem {
    std::string label;
    std::string format;  // pd | gauss | braid | band | pretzel
    std::string payload;
};

struct BatchJob {
    std::vector<BatchItem> inputs;
    std::string format = "text";  // text | structured
    bool fail_fast = false;
};

// One input per line: `label <TAB> format <TAB> payload`. Blank lines and
// lines starting with '#' are skipped. Labels must be unique.
BatchJob parse_batch_file(std::istream& in);

// Resolves any of the five input formats to the canonical diagram.
SignedGaussCode load_input(const std::string& format, const std::string& payload,
                           std::optional<int> strands = std::nullopt);

// exit codes: 0 success, 1 batch had failures, 2 malformed input,
// 3 the input is a link rather than a knot, 4 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcalc
