#include "knotcalc/braid.hpp"

#include <cctype>
#include <vector>

#include "knotcalc/graph.hpp"
#include "knotcalc/seifert.hpp"

namespace knotcalc {

BandWord parse_band_word(std::string_view text) {
    BandWord word;
    size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](const char* what) {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw KnotError(ErrorKind::malformed_token,
                            std::string("expected ") + what + " at position " + std::to_string(pos));
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw KnotError(ErrorKind::malformed_token,
                            std::string("expected '") + c + "' at position " + std::to_string(pos));
        ++pos;
    };

    skip_space();
    word.strands = read_int("strand count");
    skip_space();
    expect(':');
    skip_space();
    while (pos < text.size()) {
        expect('(');
        skip_space();
        int i = read_int("band index");
        skip_space();
        expect(',');
        skip_space();
        int j = read_int("band index");
        skip_space();
        expect(')');
        if (!(1 <= i && i < j && j <= word.strands))
            throw KnotError(ErrorKind::index_out_of_range,
                            "band (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for " + std::to_string(word.strands) + " strands");
        word.bands.push_back({i, j});
        skip_space();
    }
    if (word.strands < 2)
        throw KnotError(ErrorKind::index_out_of_range, "a band word needs at least 2 strands");
    return word;
}

bool is_homogeneous_braid(const BraidWord& word) {
    std::vector<int> exponent_of(word.strands, 0);  // 0 = unseen
    for (const auto& letter : word.letters) {
        int& slot = exponent_of[letter.index];
        if (slot == 0)
            slot = letter.exponent;
        else if (slot != letter.exponent)
            return false;  // a generator occurs with both exponents
    }
    for (int index = 1; index <= word.strands - 1; ++index)
        if (exponent_of[index] == 0) return false;  // a generator never occurs
    return true;
}

bool is_positive_braid(const BraidWord& word) {
    for (const auto& letter : word.letters)
        if (letter.exponent != +1) return false;
    return true;
}

BraidWord expand_band(int strands, int i, int j) {
    if (!(1 <= i && i < j && j <= strands))
        throw KnotError(ErrorKind::index_out_of_range,
                        "band (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(strands) + " strands");
    BraidWord word;
    word.strands = strands;
    for (int k = i; k <= j - 2; ++k) word.letters.push_back({k, +1});
    word.letters.push_back({j - 1, +1});
    for (int k = j - 2; k >= i; --k) word.letters.push_back({k, -1});
    return word;
}

BraidWord expand_band_word(const BandWord& word) {
    BraidWord out;
    out.strands = word.strands;
    for (const auto& band : word.bands) {
        const auto expanded = expand_band(word.strands, band.i, band.j);
        out.letters.insert(out.letters.end(), expanded.letters.begin(), expanded.letters.end());
    }
    return out;
}

std::pair<bool, bool> check_homogeneity_agreement(const BraidWord& word) {
    std::vector<char> seen(word.strands, 0);
    for (const auto& letter : word.letters) seen[letter.index] = 1;
    for (int index = 1; index <= word.strands - 1; ++index)
        if (!seen[index])
            throw KnotError(ErrorKind::generator_missing,
                            "generator " + std::to_string(index) +
                                " never occurs; the braid-vs-diagram comparison needs every "
                                "generator present");

    const bool braid_level = is_homogeneous_braid(word);
    const auto diagram = pd_to_gauss(braid_closure(word));
    const bool diagram_level = is_homogeneous(seifert_graph(diagram)).homogeneous;
    if (braid_level != diagram_level)
        throw KnotError(ErrorKind::cross_check_mismatch,
                        "braid-level and diagram-level homogeneity disagree");
    return {braid_level, diagram_level};
}

}  // namespace knotcalc
