#include "knotcalc/codec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace knotcalc {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_token: return "MalformedToken";
        case ErrorKind::arc_label_misuse: return "ArcLabelMisuse";
        case ErrorKind::multi_component: return "MultiComponent";
        case ErrorKind::ambiguous_sign: return "AmbiguousSign";
        case ErrorKind::pass_mismatch: return "PassMismatch";
        case ErrorKind::sign_mismatch: return "SignMismatch";
        case ErrorKind::zero_token: return "ZeroToken";
        case ErrorKind::index_out_of_range: return "IndexOutOfRange";
        case ErrorKind::closure_is_link: return "ClosureIsLink";
        case ErrorKind::generator_missing: return "GeneratorMissing";
        case ErrorKind::not_a_knot: return "NotAKnot";
        case ErrorKind::not_a_cycle: return "NotACycle";
        case ErrorKind::unknown_crossing: return "UnknownCrossing";
        case ErrorKind::not_homogeneous: return "NotHomogeneous";
        case ErrorKind::invalid_job: return "InvalidJob";
        case ErrorKind::loop_detected: return "LoopDetected";
        case ErrorKind::parity_violation: return "ParityViolation";
        case ErrorKind::cross_check_mismatch: return "CrossCheckMismatch";
        case ErrorKind::equivalence_violation: return "EquivalenceViolation";
    }
    return "UnknownError";
}

namespace {

// Successor arc label in the cyclic numbering 1..2n.
int next_arc(int arc, int total) { return arc % total + 1; }

struct MiniUnionFind {
    std::vector<int> parent;

    explicit MiniUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

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

void skip_separators(std::string_view text, size_t& pos) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
}

int parse_int_at(std::string_view text, size_t& pos, const char* context) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw KnotError(ErrorKind::malformed_token,
                        std::string("expected integer in ") + context + " near position " +
                            std::to_string(start));
    return std::stoi(std::string(text.substr(start, pos - start)));
}

}  // namespace

int BraidWord::exponent_sum() const {
    int sum = 0;
    for (const auto& letter : letters) sum += letter.exponent;
    return sum;
}

// --- PD parsing and validation --------------------------------------------

namespace {

// Validation order matters for diagnostics: label counts, then component
// connectivity (detects links before the sequential-numbering checks can
// misfire), then sign derivation, then sequential-traversal structure.
void validate_pd(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0) return;
    const int total = 2 * n;

    std::vector<int> label_count(total + 1, 0);
    for (const auto& x : d.crossings) {
        for (int arc : x.arcs) {
            if (arc < 1 || arc > total)
                throw KnotError(ErrorKind::arc_label_misuse,
                                "arc label " + std::to_string(arc) + " outside 1.." +
                                    std::to_string(total));
            ++label_count[arc];
        }
    }
    for (int arc = 1; arc <= total; ++arc)
        if (label_count[arc] != 2)
            throw KnotError(ErrorKind::arc_label_misuse,
                            "arc label " + std::to_string(arc) + " appears " +
                                std::to_string(label_count[arc]) + " times, expected 2");

    // Strand connectivity: each crossing keeps (a,c) on one strand and (b,d)
    // on the other, so union-find classes are exactly the link components.
    MiniUnionFind components(total + 1);
    for (const auto& x : d.crossings) {
        components.unite(x.arcs[0], x.arcs[2]);
        components.unite(x.arcs[1], x.arcs[3]);
    }
    int classes = 0;
    for (int arc = 1; arc <= total; ++arc)
        if (components.find(arc) == arc) ++classes;
    if (classes != 1)
        throw KnotError(ErrorKind::multi_component,
                        "diagram has " + std::to_string(classes) + " components, expected a knot");

    const auto signs = crossing_signs(d);

    // Sequential numbering along the orientation: every passage advances the
    // arc label by one, under-strand (a -> c) included.
    std::vector<int> in_slot_count(total + 1, 0);
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& arcs = d.crossings[k].arcs;
        if (arcs[2] != next_arc(arcs[0], total))
            throw KnotError(ErrorKind::arc_label_misuse,
                            "crossing " + std::to_string(k + 1) +
                                ": under-strand exit label must follow entry label");
        int over_in = signs[k] == Sign::plus ? arcs[1] : arcs[3];
        ++in_slot_count[arcs[0]];
        ++in_slot_count[over_in];
    }
    for (int arc = 1; arc <= total; ++arc)
        if (in_slot_count[arc] != 1)
            throw KnotError(ErrorKind::arc_label_misuse,
                            "arc label " + std::to_string(arc) + " enters " +
                                std::to_string(in_slot_count[arc]) + " crossings, expected 1");
}

}  // namespace

std::vector<Sign> crossing_signs(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    const int total = 2 * n;
    std::vector<Sign> signs;
    signs.reserve(n);
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& x = d.crossings[k];
        if (n <= 1) {
            if (!x.annotation)
                throw KnotError(ErrorKind::ambiguous_sign,
                                "diagram with " + std::to_string(n) +
                                    " crossing(s) needs explicit X+/X- annotations");
            signs.push_back(*x.annotation);
            continue;
        }
        const int b = x.arcs[1];
        const int d_arc = x.arcs[3];
        const bool pos = d_arc == next_arc(b, total);
        const bool neg = b == next_arc(d_arc, total);
        if (pos == neg)
            throw KnotError(ErrorKind::ambiguous_sign,
                            "crossing " + std::to_string(k + 1) +
                                " matches " + (pos ? "both sign patterns" : "neither sign pattern") +
                                "; arcs are not numbered sequentially");
        Sign derived = pos ? Sign::plus : Sign::minus;
        if (x.annotation && *x.annotation != derived)
            throw KnotError(ErrorKind::ambiguous_sign,
                            "crossing " + std::to_string(k + 1) +
                                " annotation contradicts the derived sign");
        signs.push_back(derived);
    }
    return signs;
}

PlanarDiagram parse_pd(std::string_view text) {
    PlanarDiagram d;
    size_t pos = 0;
    skip_separators(text, pos);
    while (pos < text.size()) {
        if (text[pos] != 'X')
            throw KnotError(ErrorKind::malformed_token,
                            "expected 'X' at position " + std::to_string(pos));
        ++pos;
        PdCrossing crossing;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            crossing.annotation = text[pos] == '+' ? Sign::plus : Sign::minus;
            ++pos;
        }
        if (pos >= text.size() || text[pos] != '[')
            throw KnotError(ErrorKind::malformed_token, "expected '[' after X");
        ++pos;
        for (int slot = 0; slot < 4; ++slot) {
            skip_separators(text, pos);
            int value = parse_int_at(text, pos, "PD tuple");
            if (value < 1)
                throw KnotError(ErrorKind::malformed_token,
                                "arc labels must be positive, got " + std::to_string(value));
            crossing.arcs[slot] = value;
            skip_separators(text, pos);
        }
        if (pos >= text.size() || text[pos] != ']')
            throw KnotError(ErrorKind::malformed_token, "expected ']'");
        ++pos;
        d.crossings.push_back(crossing);
        skip_separators(text, pos);
    }
    validate_pd(d);
    return d;
}

int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (Sign s : crossing_signs(d)) w += sign_value(s);
    return w;
}

int writhe(const SignedGaussCode& code) {
    int doubled = 0;
    for (const auto& visit : code.visits) doubled += sign_value(visit.sign);
    return doubled / 2;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    // Switching every crossing turns X(a,b,c,d) into a crossing whose
    // incoming under-strand is the old over-in slot; the rewritten tuple
    // derives the opposite sign under the numbering rule.
    const auto signs = crossing_signs(d);
    PlanarDiagram m;
    m.crossings.reserve(d.crossings.size());
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& arcs = d.crossings[k].arcs;
        PdCrossing flipped;
        if (signs[k] == Sign::plus)
            flipped.arcs = {arcs[1], arcs[2], arcs[3], arcs[0]};
        else
            flipped.arcs = {arcs[3], arcs[0], arcs[1], arcs[2]};
        if (d.crossing_count() <= 1) flipped.annotation = opposite(signs[k]);
        m.crossings.push_back(flipped);
    }
    validate_pd(m);
    return m;
}

SignedGaussCode mirror(const SignedGaussCode& code) {
    SignedGaussCode m = code;
    for (auto& visit : m.visits) visit.sign = opposite(visit.sign);
    return m;
}

// --- Gauss code ------------------------------------------------------------

void validate_gauss(const SignedGaussCode& code) {
    struct Seen {
        int over = 0, under = 0;
        Sign sign = Sign::plus;
        bool any = false;
    };
    std::map<int, Seen> seen;
    for (const auto& visit : code.visits) {
        if (visit.crossing < 1)
            throw KnotError(ErrorKind::malformed_token,
                            "crossing ids must be positive, got " + std::to_string(visit.crossing));
        auto& entry = seen[visit.crossing];
        if (entry.any && entry.sign != visit.sign)
            throw KnotError(ErrorKind::sign_mismatch,
                            "crossing " + std::to_string(visit.crossing) +
                                " visited with conflicting signs");
        entry.sign = visit.sign;
        entry.any = true;
        ++(visit.pass == Pass::over ? entry.over : entry.under);
    }
    for (const auto& [id, entry] : seen) {
        if (entry.over != 1 || entry.under != 1)
            throw KnotError(ErrorKind::pass_mismatch,
                            "crossing " + std::to_string(id) + " visited " +
                                std::to_string(entry.over) + " times over and " +
                                std::to_string(entry.under) + " times under, expected once each");
    }
}

SignedGaussCode parse_gauss(std::string_view text) {
    SignedGaussCode code;
    size_t pos = 0;
    skip_separators(text, pos);
    while (pos < text.size()) {
        char letter = text[pos];
        if (letter != 'O' && letter != 'U')
            throw KnotError(ErrorKind::malformed_token,
                            "expected 'O' or 'U' at position " + std::to_string(pos));
        ++pos;
        int id = parse_int_at(text, pos, "Gauss visit");
        if (id < 1)
            throw KnotError(ErrorKind::malformed_token,
                            "crossing ids must be positive, got " + std::to_string(id));
        if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
            throw KnotError(ErrorKind::malformed_token,
                            "expected '+' or '-' after crossing id " + std::to_string(id));
        Sign sign = text[pos] == '+' ? Sign::plus : Sign::minus;
        ++pos;
        code.visits.push_back({id, letter == 'O' ? Pass::over : Pass::under, sign});
        skip_separators(text, pos);
    }
    validate_gauss(code);
    return code;
}

SignedGaussCode canonicalize_ids(const SignedGaussCode& code) {
    std::map<int, int> relabel;
    SignedGaussCode out = code;
    for (auto& visit : out.visits) {
        auto it = relabel.try_emplace(visit.crossing, static_cast<int>(relabel.size()) + 1).first;
        visit.crossing = it->second;
    }
    return out;
}

bool same_up_to_rotation(const SignedGaussCode& a, const SignedGaussCode& b) {
    if (a.visits.size() != b.visits.size()) return false;
    if (a.visits.empty()) return true;
    const SignedGaussCode target = canonicalize_ids(b);
    SignedGaussCode rotated = a;
    for (size_t r = 0; r < a.visits.size(); ++r) {
        if (canonicalize_ids(rotated) == target) return true;
        std::rotate(rotated.visits.begin(), rotated.visits.begin() + 1, rotated.visits.end());
    }
    return false;
}

SignedGaussCode remove_crossing(const SignedGaussCode& code, int crossing_id) {
    SignedGaussCode out;
    out.visits.reserve(code.visits.size());
    int removed = 0;
    for (const auto& visit : code.visits) {
        if (visit.crossing == crossing_id)
            ++removed;
        else
            out.visits.push_back(visit);
    }
    if (removed != 2)
        throw KnotError(ErrorKind::unknown_crossing,
                        "crossing " + std::to_string(crossing_id) + " not in diagram");
    return out;
}

// --- rendering -------------------------------------------------------------

std::string render_pd(const PlanarDiagram& d) {
    const auto signs = crossing_signs(d);
    std::ostringstream out;
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        if (k) out << ' ';
        out << 'X';
        if (d.crossing_count() <= 1) out << sign_char(signs[k]);
        const auto& arcs = d.crossings[k].arcs;
        out << '[' << arcs[0] << ',' << arcs[1] << ',' << arcs[2] << ',' << arcs[3] << ']';
    }
    return out.str();
}

std::string render_gauss(const SignedGaussCode& code) {
    const SignedGaussCode canon = canonicalize_ids(code);
    std::ostringstream out;
    for (size_t i = 0; i < canon.visits.size(); ++i) {
        if (i) out << ' ';
        const auto& visit = canon.visits[i];
        out << (visit.pass == Pass::over ? 'O' : 'U') << visit.crossing << sign_char(visit.sign);
    }
    return out.str();
}

std::string render_braid(const BraidWord& word) {
    std::ostringstream out;
    for (size_t i = 0; i < word.letters.size(); ++i) {
        if (i) out << ' ';
        out << word.letters[i].index * word.letters[i].exponent;
    }
    return out.str();
}

// --- conversions -----------------------------------------------------------

SignedGaussCode pd_to_gauss(const PlanarDiagram& d) {
    validate_pd(d);
    const int n = d.crossing_count();
    const int total = 2 * n;
    const auto signs = n ? crossing_signs(d) : std::vector<Sign>{};

    // in_visit[arc] = the visit made when arc terminates at its crossing.
    std::vector<GaussVisit> in_visit(total + 1);
    for (int k = 0; k < n; ++k) {
        const auto& arcs = d.crossings[k].arcs;
        const int over_in = signs[k] == Sign::plus ? arcs[1] : arcs[3];
        in_visit[arcs[0]] = {k + 1, Pass::under, signs[k]};
        in_visit[over_in] = {k + 1, Pass::over, signs[k]};
    }

    SignedGaussCode code;
    code.visits.reserve(total);
    for (int arc = 1; arc <= total; ++arc) code.visits.push_back(in_visit[arc]);
    return canonicalize_ids(code);
}

namespace {

std::vector<int> braid_permutation(const BraidWord& word) {
    std::vector<int> perm(word.strands + 1);
    std::iota(perm.begin(), perm.end(), 0);
    // perm[p] = position where the strand starting at p ends up.
    for (const auto& letter : word.letters) {
        for (int p = 1; p <= word.strands; ++p) {
            if (perm[p] == letter.index)
                perm[p] = letter.index + 1;
            else if (perm[p] == letter.index + 1)
                perm[p] = letter.index;
        }
    }
    return perm;
}

bool is_single_cycle(const std::vector<int>& perm, int n) {
    int visited = 0;
    int p = 1;
    do {
        p = perm[p];
        ++visited;
    } while (p != 1 && visited <= n);
    return visited == n;
}

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
    BraidWord word;
    size_t pos = 0;
    skip_separators(text, pos);
    int max_index = 0;
    while (pos < text.size()) {
        int value = parse_int_at(text, pos, "braid word");
        if (value == 0) throw KnotError(ErrorKind::zero_token, "generator index 0 is not allowed");
        word.letters.push_back({std::abs(value), value > 0 ? 1 : -1});
        max_index = std::max(max_index, std::abs(value));
        skip_separators(text, pos);
    }
    word.strands = strands ? *strands : std::max(2, max_index + 1);
    if (word.strands < 2)
        throw KnotError(ErrorKind::index_out_of_range, "a braid needs at least 2 strands");
    if (max_index > word.strands - 1)
        throw KnotError(ErrorKind::index_out_of_range,
                        "generator index " + std::to_string(max_index) + " needs more than " +
                            std::to_string(word.strands) + " strands");
    return word;
}

PlanarDiagram braid_closure(const BraidWord& word) {
    const int n = word.strands;
    const int c = static_cast<int>(word.letters.size());
    const auto perm = braid_permutation(word);
    if (!is_single_cycle(perm, n))
        throw KnotError(ErrorKind::closure_is_link,
                        "closure permutation is not an n-cycle; the closure is a link");

    // Walk the closed-up braid once. Passage t (1-based) consumes arc t and
    // produces arc t+1; each crossing is passed twice.
    struct PassageInfo {
        int under_in = 0;
        int over_in = 0;
    };
    std::vector<PassageInfo> info(c);
    int position = 1;
    int passage = 0;
    do {
        for (int k = 0; k < c; ++k) {
            const auto& letter = word.letters[k];
            if (position != letter.index && position != letter.index + 1) continue;
            ++passage;
            const bool entering_left = position == letter.index;
            const bool under = (letter.exponent == +1) == entering_left;
            (under ? info[k].under_in : info[k].over_in) = passage;
            position = entering_left ? letter.index + 1 : letter.index;
        }
    } while (position != 1);

    PlanarDiagram d;
    d.crossings.reserve(c);
    const int total = 2 * c;
    for (int k = 0; k < c; ++k) {
        const int u = info[k].under_in;
        const int o = info[k].over_in;
        PdCrossing crossing;
        if (word.letters[k].exponent == +1)
            crossing.arcs = {u, o, next_arc(u, total), next_arc(o, total)};
        else
            crossing.arcs = {u, next_arc(o, total), next_arc(u, total), o};
        if (c <= 1) crossing.annotation = word.letters[k].exponent == +1 ? Sign::plus : Sign::minus;
        d.crossings.push_back(crossing);
    }
    validate_pd(d);
    return d;
}

}  // namespace knotcalc
