#ifndef DYADIC_RATIONAL_HPP
#define DYADIC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dyadic {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division for a positive divisor.
inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if (a < 0 && q * b != a) {
        --q;
    }
    return q;
}

/// Nonnegative residue of a modulo a positive b.
inline BigInt floor_mod(const BigInt& a, const BigInt& b)
{
    BigInt r = a % b;
    if (r < 0) {
        r += b;
    }
    return r;
}

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : num_(value)
    {
    }

    Rational(BigInt value) : num_(std::move(value)) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_ == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        normalize();
    }

    /// Parses "p/q" or "p" with an optional leading '-' (or U+2212).
    static Rational parse(std::string_view text);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    BigInt floor() const { return floor_div(num_, den_); }
    BigInt ceil() const { return -floor_div(-num_, den_); }

    /// Fractional part in [0, 1).
    Rational frac() const { return {floor_mod(num_, den_), den_}; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string to_string() const
    {
        if (den_ == 1) {
            return num_.str();
        }
        return num_.str() + "/" + den_.str();
    }

    Rational operator-() const
    {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o)
    {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.num_ == 0) {
            throw std::domain_error("division by zero");
        }
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) {
            return std::strong_ordering::less;
        }
        if (lhs > rhs) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
        return os << r.to_string();
    }

private:
    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace detail {

inline std::optional<BigInt> parse_integer(std::string_view s)
{
    if (s.empty() || s.size() > 4096) {
        return std::nullopt;
    }
    BigInt v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text)
{
    const std::string original(text);
    bool negative = false;
    if (text.starts_with('-')) {
        negative = true;
        text.remove_prefix(1);
    } else if (text.starts_with("\xE2\x88\x92")) {
        negative = true;
        text.remove_prefix(3);
    }
    std::string_view num_text = text;
    std::string_view den_text = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_text = text.substr(0, slash);
        den_text = text.substr(slash + 1);
    }
    auto num = detail::parse_integer(num_text);
    auto den = detail::parse_integer(den_text);
    if (!num || !den || *den == 0) {
        throw std::invalid_argument("malformed rational: " + original);
    }
    return {negative ? BigInt(-*num) : *num, *den};
}

/// Base of a grid, n >= 2.
class Base {
public:
    explicit Base(std::uint32_t n) : n_(n)
    {
        if (n < 2) {
            throw std::domain_error("base must be at least 2, got " + std::to_string(n));
        }
    }

    std::uint32_t value() const noexcept { return n_; }
    std::uint32_t max_digit() const noexcept { return n_ - 1; }

    BigInt pow(std::uint64_t k) const
    {
        return boost::multiprecision::pow(BigInt(n_), static_cast<unsigned>(k));
    }

    /// n^m as a rational for any integer m.
    Rational power(std::int64_t m) const
    {
        if (m >= 0) {
            return Rational(pow(static_cast<std::uint64_t>(m)));
        }
        return Rational(BigInt(1), pow(static_cast<std::uint64_t>(-m)));
    }

    friend bool operator==(const Base&, const Base&) = default;

private:
    std::uint32_t n_;
};

/// Index pair (m, k) with m >= 0, or m < 0 and k != 0.
class SigmaPair {
public:
    SigmaPair(std::int64_t m, BigInt k) : m_(m), k_(std::move(k))
    {
        if (m_ < 0 && k_ == 0) {
            throw std::domain_error("sigma pair with negative m requires k != 0");
        }
    }

    std::int64_t m() const noexcept { return m_; }
    const BigInt& k() const noexcept { return k_; }

    /// The grid point k / n^m.
    Rational point(const Base& base) const { return Rational(k_) / base.power(m_); }

private:
    std::int64_t m_;
    BigInt k_;
};

} // namespace dyadic

#endif // DYADIC_RATIONAL_HPP
