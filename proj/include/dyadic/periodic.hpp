#ifndef DYADIC_PERIODIC_HPP
#define DYADIC_PERIODIC_HPP

#include "dyadic/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyadic {

using Digit = std::uint32_t;
using Digits = std::vector<Digit>;

namespace detail {

inline void check_digits(const Digits& digits, const Base& base)
{
    for (Digit d : digits) {
        if (d >= base.value()) {
            throw std::domain_error("digit " + std::to_string(d) + " out of range for base " +
                                    std::to_string(base.value()));
        }
    }
}

/// Rewrites (preperiod, period) into the shortest pair spelling the same
/// infinite sequence: primitive period first, then the period is rolled back
/// over any matching preperiod tail.
inline void minimize(Digits& pre, Digits& period)
{
    if (period.empty()) {
        throw std::invalid_argument("period must be nonempty");
    }
    const std::size_t len = period.size();
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = d; i < len && repeats; ++i) {
            repeats = period[i] == period[i - d];
        }
        if (repeats) {
            period.resize(d);
            break;
        }
    }
    while (!pre.empty() && pre.back() == period.back()) {
        pre.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
}

inline Digits parse_digit_list(std::string_view text, std::string_view whole)
{
    Digits out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
        auto value = parse_integer(token);
        if (!value || *value > 0xFFFFFFFFu) {
            throw std::invalid_argument("malformed digit sequence: " + std::string(whole));
        }
        out.push_back(value->convert_to<Digit>());
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

inline std::string join_digits(const Digits& digits)
{
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(digits[i]);
    }
    return out;
}

/// Integer whose base-n digits, most significant first, are `digits`.
inline BigInt digits_value(const Digits& digits, const Base& base)
{
    BigInt v = 0;
    for (Digit d : digits) {
        v = v * base.value() + d;
    }
    return v;
}

} // namespace detail

} // namespace dyadic

#endif // DYADIC_PERIODIC_HPP
