#include "knotcalc/pretzel.hpp"

#include <array>
#include <cctype>
#include <cstdlib>

namespace knotcalc {

SignedGaussCode make_pretzel(int p, int q, int r) {
    const std::array<int, 3> params{p, q, r};
    std::array<int, 3> twists{};
    std::array<Sign, 3> signs{};
    for (int region = 0; region < 3; ++region) {
        const int value = params[region];
        if (value % 2 == 0)
            throw KnotError(ErrorKind::not_a_knot,
                            "pretzel parameter " + std::to_string(value) +
                                " is even; only all-odd three-pretzels are generated");
        twists[region] = std::abs(value);
        signs[region] = value > 0 ? Sign::minus : Sign::plus;
    }

    // Crossing ids: region 0 gets 1..k0, region 1 the next k1, region 2 the rest.
    std::array<int, 3> base{};
    base[0] = 0;
    base[1] = twists[0];
    base[2] = twists[0] + twists[1];

    // The knot traverses the three twist regions alternately downward and
    // upward: down 0, up 1, down 2, up 0, down 1, up 2. Within a region the
    // strand alternates under/over; the downward passage goes under at odd
    // levels.
    SignedGaussCode code;
    code.visits.reserve(2 * (twists[0] + twists[1] + twists[2]));
    auto emit_down = [&](int region) {
        for (int m = 1; m <= twists[region]; ++m)
            code.visits.push_back(
                {base[region] + m, m % 2 == 1 ? Pass::under : Pass::over, signs[region]});
    };
    auto emit_up = [&](int region) {
        for (int m = twists[region]; m >= 1; --m)
            code.visits.push_back(
                {base[region] + m, m % 2 == 1 ? Pass::over : Pass::under, signs[region]});
    };
    emit_down(0);
    emit_up(1);
    emit_down(2);
    emit_up(0);
    emit_down(1);
    emit_up(2);

    validate_gauss(code);
    return code;
}

SignedGaussCode parse_pretzel(std::string_view text) {
    std::array<int, 3> params{};
    size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    for (int slot = 0; slot < 3; ++slot) {
        skip_space();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw KnotError(ErrorKind::malformed_token,
                            "expected three comma-separated integers, e.g. \"3,-5,-7\"");
        params[slot] = std::stoi(std::string(text.substr(start, pos - start)));
        skip_space();
        if (slot < 2) {
            if (pos >= text.size() || text[pos] != ',')
                throw KnotError(ErrorKind::malformed_token,
                                "expected three comma-separated integers, e.g. \"3,-5,-7\"");
            ++pos;
        }
    }
    skip_space();
    if (pos != text.size())
        throw KnotError(ErrorKind::malformed_token, "trailing input after pretzel parameters");
    return make_pretzel(params[0], params[1], params[2]);
}

}  // namespace knotcalc
