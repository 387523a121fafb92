#include "knotcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "knotcalc/braid.hpp"
#include "knotcalc/graph.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/pretzel.hpp"
#include "knotcalc/seifert.hpp"

namespace knotcalc {

namespace {

int exit_code_for(const KnotError& error) {
    switch (error.kind()) {
        case ErrorKind::multi_component:
        case ErrorKind::closure_is_link:
        case ErrorKind::not_a_knot:
            return 3;
        case ErrorKind::loop_detected:
        case ErrorKind::parity_violation:
        case ErrorKind::cross_check_mismatch:
        case ErrorKind::equivalence_violation:
            return 4;
        default:
            return 2;
    }
}

struct InputSelection {
    std::string pd, gauss, braid, band, pretzel;
    std::optional<int> strands;
    CLI::Option* pd_opt = nullptr;
    CLI::Option* gauss_opt = nullptr;
    CLI::Option* braid_opt = nullptr;
    CLI::Option* band_opt = nullptr;
    CLI::Option* pretzel_opt = nullptr;

    void add_options(CLI::App* cmd) {
        pd_opt = cmd->add_option("--pd", pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
        gauss_opt =
            cmd->add_option("--gauss", gauss, "signed Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");
        braid_opt = cmd->add_option("--braid", braid, "braid word, e.g. \"1 -2 1 -2\"");
        band_opt = cmd->add_option("--band", band, "band word, e.g. \"3: (1,3) (1,2)\"");
        pretzel_opt = cmd->add_option("--pretzel", pretzel, "pretzel parameters, e.g. \"3,-5,-7\"");
        cmd->add_option("--strands", strands, "strand count override for --braid");
    }

    std::pair<std::string, std::string> selected() const {
        std::vector<std::pair<std::string, std::string>> picks;
        if (pd_opt->count()) picks.emplace_back("pd", pd);
        if (gauss_opt->count()) picks.emplace_back("gauss", gauss);
        if (braid_opt->count()) picks.emplace_back("braid", braid);
        if (band_opt->count()) picks.emplace_back("band", band);
        if (pretzel_opt->count()) picks.emplace_back("pretzel", pretzel);
        if (picks.size() != 1)
            throw KnotError(ErrorKind::invalid_job,
                            "exactly one of --pd/--gauss/--braid/--band/--pretzel is required");
        return picks.front();
    }
};

std::string render_report(const InvariantReport& report, const std::string& format) {
    return format == "structured" ? to_structured(report) : to_text(report);
}

}  // namespace

SignedGaussCode load_input(const std::string& format, const std::string& payload,
                           std::optional<int> strands) {
    if (format == "pd") return pd_to_gauss(parse_pd(payload));
    if (format == "gauss") return parse_gauss(payload);
    if (format == "braid") return pd_to_gauss(braid_closure(parse_braid(payload, strands)));
    if (format == "band")
        return pd_to_gauss(braid_closure(expand_band_word(parse_band_word(payload))));
    if (format == "pretzel") return parse_pretzel(payload);
    throw KnotError(ErrorKind::invalid_job, "unknown input format '" + format + "'");
}

BatchJob parse_batch_file(std::istream& in) {
    BatchJob job;
    std::set<std::string> labels;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line[0] == '#') continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos)
            throw KnotError(ErrorKind::invalid_job,
                            "line " + std::to_string(line_number) +
                                ": expected `label<TAB>format<TAB>payload`");
        BatchItem item{line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1),
                       line.substr(tab2 + 1)};
        if (!labels.insert(item.label).second)
            throw KnotError(ErrorKind::invalid_job, "duplicate label '" + item.label + "'");
        job.inputs.push_back(std::move(item));
    }
    return job;
}

namespace {

int run_batch(const BatchJob& job, std::ostream& out, std::ostream& err) {
    // Reports are buffered per item and emitted in label order, so the
    // output does not depend on processing order.
    auto items = job.inputs;
    std::sort(items.begin(), items.end(),
              [](const BatchItem& a, const BatchItem& b) { return a.label < b.label; });

    int homogeneous = 0, positive = 0, failed = 0;
    for (const auto& item : items) {
        try {
            const auto report = analyze(load_input(item.format, item.payload));
            out << "## " << item.label << '\n' << render_report(report, job.format);
            if (report.homogeneous) ++homogeneous;
            if (report.positivity != Positivity::not_shown_positive) ++positive;
        } catch (const KnotError& error) {
            ++failed;
            out << "## " << item.label << '\n' << "error " << error.what() << '\n';
            err << item.label << ": " << error.what() << '\n';
            if (job.fail_fast) break;
        }
    }
    out << "summary: " << items.size() << " inputs, " << homogeneous << " homogeneous, "
        << positive << " positive, " << failed << " failed\n";
    return failed > 0 ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"diagrammatic knot invariants: Seifert data, homogeneity, Rasmussen bounds"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* analyze_cmd = app.add_subcommand("analyze", "compute the invariant report for one input");
    InputSelection analyze_input;
    analyze_input.add_options(analyze_cmd);
    analyze_cmd->add_option("--format", format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* pretzel_cmd =
        app.add_subcommand("pretzel", "emit the standard three-pretzel diagram as a Gauss code");
    std::string pretzel_params;
    pretzel_cmd->add_option("params", pretzel_params, "odd parameters \"p,q,r\"")->required();

    auto* braid_check_cmd =
        app.add_subcommand("braid-check", "braid homogeneity and the closure-diagram comparison");
    std::string braid_word_text;
    std::optional<int> braid_check_strands;
    braid_check_cmd->add_option("--braid", braid_word_text, "braid word")->required();
    braid_check_cmd->add_option("--strands", braid_check_strands, "strand count override");

    auto* reduce_cmd = app.add_subcommand("reduce", "untwist all nugatory crossings");
    InputSelection reduce_input;
    reduce_input.add_options(reduce_cmd);

    auto* batch_cmd = app.add_subcommand("batch", "analyze every input in a job file");
    std::string batch_path;
    bool fail_fast = false;
    batch_cmd->add_option("jobfile", batch_path, "lines of `label<TAB>format<TAB>payload`")
        ->required();
    batch_cmd->add_flag("--fail-fast", fail_fast, "stop at the first failing input");
    batch_cmd->add_option("--format", format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& error) {
        std::ostringstream usage_out, usage_err;
        int code = app.exit(error, usage_out, usage_err);
        out << usage_out.str();
        err << usage_err.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            const auto [input_format, payload] = analyze_input.selected();
            const auto report = analyze(load_input(input_format, payload, analyze_input.strands));
            out << render_report(report, format);
            return 0;
        }
        if (pretzel_cmd->parsed()) {
            out << render_gauss(parse_pretzel(pretzel_params)) << '\n';
            return 0;
        }
        if (braid_check_cmd->parsed()) {
            const auto word = parse_braid(braid_word_text, braid_check_strands);
            const bool braid_level = is_homogeneous_braid(word);
            out << "braid_homogeneous " << (braid_level ? "true" : "false") << '\n';
            out << "positive_braid " << (is_positive_braid(word) ? "true" : "false") << '\n';
            try {
                const auto [braid_side, diagram_side] = check_homogeneity_agreement(word);
                out << "closure_diagram_homogeneous " << (diagram_side ? "true" : "false") << '\n';
                out << "agreement " << (braid_side == diagram_side ? "true" : "false") << '\n';
            } catch (const KnotError& error) {
                if (error.kind() != ErrorKind::generator_missing) throw;
                out << "closure_diagram_homogeneous skipped\n";
                out << "agreement skipped (" << error.what() << ")\n";
            }
            // a homogeneous braid closes up to a fibered knot
            out << "fibered_closure " << (braid_level ? "true" : "false") << '\n';
            return 0;
        }
        if (reduce_cmd->parsed()) {
            const auto [input_format, payload] = reduce_input.selected();
            const auto reduced = untwist_all(load_input(input_format, payload, reduce_input.strands));
            out << render_gauss(reduced) << '\n';
            return 0;
        }
        if (batch_cmd->parsed()) {
            std::ifstream file(batch_path);
            if (!file)
                throw KnotError(ErrorKind::invalid_job, "cannot open job file '" + batch_path + "'");
            BatchJob job = parse_batch_file(file);
            job.format = format;
            job.fail_fast = fail_fast;
            return run_batch(job, out, err);
        }
    } catch (const KnotError& error) {
        err << "error: " << error.what() << '\n';
        return exit_code_for(error);
    }
    return 0;
}

}  // namespace knotcalc
