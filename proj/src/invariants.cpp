#include "knotcalc/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "knotcalc/graph.hpp"

namespace knotcalc {

const char* to_string(Positivity p) {
    switch (p) {
        case Positivity::positive_diagram: return "positive_diagram";
        case Positivity::positive_after_untwist: return "positive_after_untwist";
        case Positivity::not_shown_positive: return "not_shown_positive";
    }
    return "unknown";
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }

    int class_count() {
        int count = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++count;
        return count;
    }
};

std::map<int, std::pair<int, int>> crossing_positions(const SignedGaussCode& code) {
    std::map<int, std::pair<int, int>> positions;
    for (int p = 0; p < static_cast<int>(code.visits.size()); ++p) {
        auto [it, fresh] = positions.try_emplace(code.visits[p].crossing, std::pair{p, -1});
        if (!fresh) it->second.second = p;
    }
    return positions;
}

// Shadow component count when only `smoothed_id` is smoothed and every other
// crossing stays put.
int shadow_components_after_smoothing_one(const SignedGaussCode& code,
                                          const std::map<int, std::pair<int, int>>& positions,
                                          int smoothed_id) {
    const int total = static_cast<int>(code.visits.size());
    UnionFind uf(total);
    for (const auto& [id, pos] : positions) {
        const int i = pos.first, j = pos.second;
        if (id == smoothed_id) {
            uf.unite(i, (j + 1) % total);
            uf.unite(j, (i + 1) % total);
        } else {
            uf.unite(i, (i + 1) % total);
            uf.unite(j, (j + 1) % total);
            uf.unite(i, j);
        }
    }
    return uf.class_count();
}

// Chords interleave when their endpoints alternate around the cyclic word.
bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b) {
    auto [a1, a2] = std::minmax(a.first, a.second);
    const bool b1_inside = b.first > a1 && b.first < a2;
    const bool b2_inside = b.second > a1 && b.second < a2;
    return b1_inside != b2_inside;
}

int ceil_div_2(int value) { return value >= 0 ? (value + 1) / 2 : value / 2; }

}  // namespace

int kl_bound(const SignedGaussCode& code) {
    const auto dec = decompose(code);
    return dec.counts.w - dec.counts.o + 2 * dec.counts.o_plus - 1;
}

namespace {

int exact_invariant(const SignedGaussCode& code, const DiagramCounts& counts, const char* what) {
    if (counts.delta != 0) {
        auto witness = mixed_cycle(seifert_graph(code));
        throw NotHomogeneousError(std::string(what) +
                                      " needs a homogeneous diagram, but delta = " +
                                      std::to_string(counts.delta),
                                  witness ? *witness : std::vector<int>{});
    }
    return counts.w - counts.o + 2 * counts.o_plus - 1;
}

}  // namespace

int rasmussen_homogeneous(const SignedGaussCode& code) {
    const auto dec = decompose(code);
    return exact_invariant(code, dec.counts, "the exact Rasmussen invariant");
}

int genus_homogeneous(const SignedGaussCode& code) {
    const auto dec = decompose(code);
    exact_invariant(code, dec.counts, "the exact genus");
    const int doubled = 1 + dec.counts.c - dec.counts.o;
    if (doubled % 2 != 0)
        throw KnotError(ErrorKind::parity_violation,
                        "1 + c - O = " + std::to_string(doubled) + " is odd");
    return doubled / 2;
}

bool is_nugatory(const SignedGaussCode& code, int crossing_id) {
    const auto positions = crossing_positions(code);
    const auto it = positions.find(crossing_id);
    if (it == positions.end())
        throw KnotError(ErrorKind::unknown_crossing,
                        "crossing " + std::to_string(crossing_id) + " not in diagram");

    const bool by_shadow = shadow_components_after_smoothing_one(code, positions, crossing_id) == 2;

    bool interleaved = false;
    for (const auto& [id, pos] : positions)
        if (id != crossing_id && chords_interleave(it->second, pos)) {
            interleaved = true;
            break;
        }
    const bool by_chords = !interleaved;

    if (by_shadow != by_chords)
        throw KnotError(ErrorKind::cross_check_mismatch,
                        "nugatory criteria disagree on crossing " + std::to_string(crossing_id));
    return by_shadow;
}

namespace {

// Lowest-id nugatory crossing, optionally restricted to one sign.
std::optional<int> first_nugatory(const SignedGaussCode& code, std::optional<Sign> sign) {
    std::map<int, Sign> sign_of;
    for (const auto& visit : code.visits) sign_of[visit.crossing] = visit.sign;
    for (const auto& [id, s] : sign_of) {
        if (sign && s != *sign) continue;
        if (is_nugatory(code, id)) return id;
    }
    return std::nullopt;
}

}  // namespace

SignedGaussCode untwist_all(const SignedGaussCode& code) {
    SignedGaussCode current = code;
    while (auto id = first_nugatory(current, std::nullopt)) current = remove_crossing(current, *id);
    return current;
}

Positivity classify_positivity(const SignedGaussCode& code) {
    auto negatives = [](const SignedGaussCode& c) {
        int count = 0;
        for (const auto& visit : c.visits)
            if (visit.sign == Sign::minus) ++count;
        return count / 2;
    };

    if (negatives(code) == 0) return Positivity::positive_diagram;
    SignedGaussCode current = code;
    while (auto id = first_nugatory(current, Sign::minus)) {
        current = remove_crossing(current, *id);
        if (negatives(current) == 0) return Positivity::positive_after_untwist;
    }
    return Positivity::not_shown_positive;
}

InvariantReport analyze(const SignedGaussCode& code) {
    const auto dec = decompose(code);
    const auto& counts = dec.counts;

    InvariantReport report;
    report.counts = counts;
    report.homogeneous = counts.delta == 0;

    const auto block_test = is_homogeneous(seifert_graph(code));
    if (block_test.homogeneous != report.homogeneous)
        throw KnotError(ErrorKind::equivalence_violation,
                        "delta = 0 test disagrees with the block-sign test");

    report.kl_lower_bound = counts.w - counts.o + 2 * counts.o_plus - 1;
    report.sb_lower_bound = counts.w - counts.o + 1;
    report.q_fo = counts.w - counts.o;
    report.positivity = classify_positivity(code);

    // Lower bounds for s and -s respectively; the larger one (clamped at
    // zero) bounds |s| from below. On homogeneous diagrams both are exact.
    const int kl_mirror = -counts.w - counts.o + 2 * counts.o_minus - 1;
    report.fourball_genus_lb = ceil_div_2(std::max({report.kl_lower_bound, kl_mirror, 0}));

    if (report.homogeneous) {
        report.s_exact = report.kl_lower_bound;
        const int doubled = 1 + counts.c - counts.o;
        if (doubled % 2 != 0)
            throw KnotError(ErrorKind::parity_violation,
                            "1 + c - O = " + std::to_string(doubled) + " is odd");
        report.genus = doubled / 2;
        report.s_equals_2g = *report.s_exact == 2 * *report.genus;

        const bool via_counts = counts.o_plus - 1 == counts.n_minus;
        const bool via_classification = report.positivity != Positivity::not_shown_positive;
        if (*report.s_equals_2g != via_counts || via_counts != via_classification)
            throw KnotError(ErrorKind::equivalence_violation,
                            "s = 2g, O+ - 1 = n-, and the positivity classification disagree");
    }
    return report;
}

// --- serialization -----------------------------------------------------------

std::string render_tau(int s_exact) {
    if (s_exact % 2 == 0) return std::to_string(s_exact / 2);
    return std::to_string(s_exact) + "/2";
}

namespace {

std::vector<std::pair<std::string, std::string>> report_fields(const InvariantReport& r) {
    auto opt_int = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("none");
    };
    auto boolean = [](bool v) { return std::string(v ? "true" : "false"); };

    std::vector<std::pair<std::string, std::string>> fields;
    fields.emplace_back("w", std::to_string(r.counts.w));
    fields.emplace_back("c", std::to_string(r.counts.c));
    fields.emplace_back("O", std::to_string(r.counts.o));
    fields.emplace_back("O_plus", std::to_string(r.counts.o_plus));
    fields.emplace_back("O_minus", std::to_string(r.counts.o_minus));
    fields.emplace_back("delta", std::to_string(r.counts.delta));
    fields.emplace_back("n_plus", std::to_string(r.counts.n_plus));
    fields.emplace_back("n_minus", std::to_string(r.counts.n_minus));
    fields.emplace_back("homogeneous", boolean(r.homogeneous));
    fields.emplace_back("kl_lower_bound", std::to_string(r.kl_lower_bound));
    fields.emplace_back("sb_lower_bound", std::to_string(r.sb_lower_bound));
    fields.emplace_back("q_fo", std::to_string(r.q_fo));
    fields.emplace_back("s_exact", opt_int(r.s_exact));
    fields.emplace_back("tau_exact", r.s_exact ? render_tau(*r.s_exact) : "none");
    fields.emplace_back("genus", opt_int(r.genus));
    fields.emplace_back("fourball_genus_lb", std::to_string(r.fourball_genus_lb));
    fields.emplace_back("positivity", to_string(r.positivity));
    fields.emplace_back("s_equals_2g",
                        r.s_equals_2g ? boolean(*r.s_equals_2g) : std::string("none"));
    return fields;
}

}  // namespace

std::string to_structured(const InvariantReport& report) {
    std::ostringstream out;
    for (const auto& [key, value] : report_fields(report)) out << key << ' ' << value << '\n';
    return out.str();
}

std::string to_text(const InvariantReport& report) {
    const auto& c = report.counts;
    std::ostringstream out;
    out << "crossings " << c.c << " (" << c.n_plus << " positive, " << c.n_minus
        << " negative), writhe " << c.w << '\n';
    out << "Seifert circles " << c.o << ", O+ " << c.o_plus << ", O- " << c.o_minus << ", delta "
        << c.delta << '\n';
    out << "homogeneous: " << (report.homogeneous ? "yes" : "no") << '\n';
    out << "lower bounds for s: " << report.sb_lower_bound << " (slice-Bennequin), "
        << report.kl_lower_bound << " (Kawamura-Lobb)\n";
    if (report.s_exact) {
        out << "s = " << *report.s_exact << ", tau = " << render_tau(*report.s_exact)
            << ", Seifert genus = " << *report.genus << '\n';
        out << "s equals 2*genus: " << (*report.s_equals_2g ? "yes" : "no") << '\n';
    } else {
        out << "s not determined by this diagram (not homogeneous)\n";
    }
    out << "four-ball genus >= " << report.fourball_genus_lb << '\n';
    out << "positivity: " << to_string(report.positivity) << '\n';
    return out.str();
}

}  // namespace knotcalc
