#ifndef DYADIC_DIGIT_SEQUENCE_HPP
#define DYADIC_DIGIT_SEQUENCE_HPP

#include "dyadic/periodic.hpp"
#include "dyadic/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dyadic {

/// Eventually periodic digit sequence a_0, a_1, ... over {0, ..., n-1}.
///
/// Read as sum a_i n^i this is an n-adic integer; a grid uses it as its
/// location rule. Equal sequences have identical (preperiod, period) pairs.
class DigitSequence {
public:
    DigitSequence(Base base, Digits preperiod, Digits period)
        : base_(base), pre_(std::move(preperiod)), period_(std::move(period))
    {
        detail::check_digits(pre_, base_);
        detail::check_digits(period_, base_);
        detail::minimize(pre_, period_);
    }

    static DigitSequence zeros(Base base) { return {base, {}, {0}}; }

    /// Literal "d0,d1,...:p0,p1,..." with the preperiod before the colon.
    static DigitSequence parse(std::string_view text, Base base)
    {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
            throw std::invalid_argument("malformed digit sequence: " + std::string(text));
        }
        Digits pre = detail::parse_digit_list(text.substr(0, colon), text);
        Digits period = detail::parse_digit_list(text.substr(colon + 1), text);
        if (period.empty()) {
            throw std::invalid_argument("malformed digit sequence: " + std::string(text));
        }
        return {base, std::move(pre), std::move(period)};
    }

    std::string to_string() const
    {
        return detail::join_digits(pre_) + ":" + detail::join_digits(period_);
    }

    const Base& base() const noexcept { return base_; }
    const Digits& preperiod() const noexcept { return pre_; }
    const Digits& period() const noexcept { return period_; }

    Digit digit(std::size_t i) const
    {
        if (i < pre_.size()) {
            return pre_[i];
        }
        return period_[(i - pre_.size()) % period_.size()];
    }

    /// The ordinary integer this n-adic number equals, when it is one: tails
    /// of all zeros give nonnegative integers, tails of all (n-1) negative ones.
    std::optional<BigInt> integer_value() const
    {
        if (period_.size() != 1 || (period_[0] != 0 && period_[0] != base_.max_digit())) {
            return std::nullopt;
        }
        BigInt v = 0;
        for (std::size_t i = pre_.size(); i-- > 0;) {
            v = v * base_.value() + pre_[i];
        }
        if (period_[0] != 0) {
            v -= base_.pow(pre_.size());
        }
        return v;
    }

    friend bool operator==(const DigitSequence&, const DigitSequence&) = default;

private:
    Base base_;
    Digits pre_;
    Digits period_;
};

/// n-adic sum s + value, by digitwise carry propagation. The carry settles in
/// {-1, 0} after finitely many steps, so (phase in the period, carry) repeats
/// and the result is again eventually periodic.
inline DigitSequence nadic_add_integer(const DigitSequence& s, const BigInt& value)
{
    const Base& base = s.base();
    const BigInt n = base.value();
    const std::size_t mu = s.preperiod().size();
    const std::size_t lambda = s.period().size();

    std::map<std::pair<std::size_t, BigInt>, std::size_t> states;
    Digits out;
    BigInt carry = value;
    for (std::size_t i = 0;; ++i) {
        if (i >= mu) {
            auto [it, inserted] = states.emplace(std::pair{(i - mu) % lambda, carry}, i);
            if (!inserted) {
                const auto first = static_cast<std::ptrdiff_t>(it->second);
                Digits pre(out.begin(), out.begin() + first);
                Digits period(out.begin() + first, out.end());
                return {base, std::move(pre), std::move(period)};
            }
        }
        const BigInt t = carry + s.digit(i);
        out.push_back(floor_mod(t, n).convert_to<Digit>());
        carry = floor_div(t, n);
    }
}

} // namespace dyadic

#endif // DYADIC_DIGIT_SEQUENCE_HPP
