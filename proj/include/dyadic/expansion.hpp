#ifndef DYADIC_EXPANSION_HPP
#define DYADIC_EXPANSION_HPP

#include "dyadic/periodic.hpp"
#include "dyadic/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

/// Fractional base-n digits a_1 a_2 ... of a value in [0, 1), stored as a
/// preperiod followed by a repeating period.
///
/// The stored form is the finest one: a period of all (n-1) is carried into
/// the preperiod, so 1/2 in base 2 is (1, 0, 0, ...) and never
/// (0, 1, 1, ...). The pair is also the shortest spelling of the sequence,
/// which makes structural equality coincide with equality of values.
class BaseNExpansion {
public:
    BaseNExpansion(Base base, Digits preperiod, Digits period)
        : base_(base), pre_(std::move(preperiod)), period_(std::move(period))
    {
        detail::check_digits(pre_, base_);
        detail::check_digits(period_, base_);
        if (period_.empty()) {
            throw std::invalid_argument("period must be nonempty");
        }
        carry_trailing_max_digits();
        detail::minimize(pre_, period_);
    }

    const Base& base() const noexcept { return base_; }
    const Digits& preperiod() const noexcept { return pre_; }
    const Digits& period() const noexcept { return period_; }

    /// a_i for i >= 1.
    Digit digit_at(std::size_t i) const
    {
        if (i == 0) {
            throw std::out_of_range("expansion digits are indexed from 1");
        }
        --i;
        if (i < pre_.size()) {
            return pre_[i];
        }
        return period_[(i - pre_.size()) % period_.size()];
    }

    bool terminates() const noexcept { return period_.size() == 1 && period_[0] == 0; }

    /// Sum of a_i / n^i as an exact rational.
    Rational value() const
    {
        const BigInt head = detail::digits_value(pre_, base_);
        const BigInt cycle = detail::digits_value(period_, base_);
        const BigInt cycle_den = base_.pow(period_.size()) - 1;
        return Rational(head * cycle_den + cycle, cycle_den * base_.pow(pre_.size()));
    }

    friend bool operator==(const BaseNExpansion&, const BaseNExpansion&) = default;

private:
    void carry_trailing_max_digits()
    {
        for (Digit d : period_) {
            if (d != base_.max_digit()) {
                return;
            }
        }
        std::size_t i = pre_.size();
        while (i > 0 && pre_[i - 1] == base_.max_digit()) {
            pre_[--i] = 0;
        }
        if (i == 0) {
            throw std::domain_error("digits sum to 1, outside [0, 1)");
        }
        ++pre_[i - 1];
        period_ = {0};
    }

    Base base_;
    Digits pre_;
    Digits period_;
};

namespace detail {

/// Remainders r_i = numerator of frac(n^i x) over the reduced denominator q of
/// x, listed up to the first repeat. r_{preperiod + period} == r_{preperiod}.
struct RemainderOrbit {
    BigInt denominator;
    std::vector<BigInt> remainders;
    std::size_t preperiod = 0;
    std::size_t period = 0;
};

inline RemainderOrbit remainder_orbit(const Rational& unit_value, const Base& base)
{
    RemainderOrbit orbit;
    orbit.denominator = unit_value.denominator();
    const BigInt& q = orbit.denominator;
    std::map<BigInt, std::size_t> seen;
    BigInt r = unit_value.numerator();
    while (true) {
        auto [it, inserted] = seen.emplace(r, orbit.remainders.size());
        if (!inserted) {
            orbit.preperiod = it->second;
            orbit.period = orbit.remainders.size() - it->second;
            return orbit;
        }
        orbit.remainders.push_back(r);
        r = (r * base.value()) % q;
    }
}

inline void require_unit_interval(const Rational& x)
{
    if (x.sign() < 0 || x >= Rational(1)) {
        throw std::domain_error("value " + x.to_string() + " is outside [0, 1)");
    }
}

} // namespace detail

/// Base-n expansion of x in [0, 1) by long division with remainder-cycle
/// detection.
inline BaseNExpansion expand(const Rational& x, const Base& base)
{
    detail::require_unit_interval(x);
    const auto orbit = detail::remainder_orbit(x, base);
    Digits digits;
    digits.reserve(orbit.remainders.size());
    for (const BigInt& r : orbit.remainders) {
        digits.push_back((r * base.value() / orbit.denominator).convert_to<Digit>());
    }
    Digits pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(orbit.preperiod));
    Digits period(digits.begin() + static_cast<std::ptrdiff_t>(orbit.preperiod), digits.end());
    return {base, std::move(pre), std::move(period)};
}

inline Digit digit_at(const BaseNExpansion& e, std::size_t i) { return e.digit_at(i); }

struct FracFloor {
    Rational fraction;
    BigInt integer;
};

/// Splits x = integer + fraction with fraction in [0, 1).
inline FracFloor frac_floor(const Rational& x) { return {x.frac(), x.floor()}; }

} // namespace dyadic

#endif // DYADIC_EXPANSION_HPP
