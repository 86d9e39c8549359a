#ifndef DYADIC_FAR_HPP
#define DYADIC_FAR_HPP

#include "dyadic/expansion.hpp"
#include "dyadic/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyadic {

// ---------------------------------------------------------------------------
// Ties
// ---------------------------------------------------------------------------

/// A maximal run a_start = ... = a_end of a single digit, 0 or n-1
/// (1-based, inclusive).
struct TieWitness {
    std::size_t start;
    std::size_t end;
    Digit digit;

    std::size_t length() const noexcept { return end - start + 1; }
    friend bool operator==(const TieWitness&, const TieWitness&) = default;
};

/// Supremum T of tie lengths. `length` is empty when T is infinite; the
/// witness is present only for a finite, positive T.
struct TieReport {
    std::optional<std::size_t> length;
    std::optional<TieWitness> witness;

    bool infinite() const noexcept { return !length.has_value(); }
};

namespace detail {

inline bool is_tie_digit(Digit d, const Base& base) { return d == 0 || d == base.max_digit(); }

/// Longest run of one repeated tie digit in digits[0..count), reported with
/// 1-based positions.
template <typename DigitAt>
std::optional<TieWitness> longest_tie(std::size_t count, DigitAt&& digit_at, const Base& base)
{
    std::optional<TieWitness> best;
    std::size_t run_start = 0;
    std::size_t run_len = 0;
    Digit run_digit = 0;
    for (std::size_t i = 1; i <= count; ++i) {
        const Digit d = digit_at(i);
        if (!is_tie_digit(d, base)) {
            run_len = 0;
            continue;
        }
        if (run_len > 0 && d == run_digit) {
            ++run_len;
        } else {
            run_start = i;
            run_len = 1;
            run_digit = d;
        }
        if (!best || run_len > best->length()) {
            best = TieWitness{run_start, i, run_digit};
        }
    }
    return best;
}

} // namespace detail

/// T for a canonical expansion. Scanning the preperiod and two copies of the
/// period sees every run, including ones that wrap around the period.
inline TieReport tie_length(const BaseNExpansion& e)
{
    const Base& base = e.base();
    const auto& period = e.period();
    const bool constant_tie = std::all_of(period.begin(), period.end(),
                                          [&](Digit d) { return d == period.front(); }) &&
                              detail::is_tie_digit(period.front(), base);
    if (constant_tie) {
        return {};
    }
    const std::size_t count = e.preperiod().size() + 2 * period.size();
    auto best = detail::longest_tie(count, [&](std::size_t i) { return e.digit_at(i); }, base);
    if (!best) {
        return {0, std::nullopt};
    }
    return {best->length(), best};
}

// ---------------------------------------------------------------------------
// Farness constants
// ---------------------------------------------------------------------------

/// delta is n-far iff the finest expansion of frac(delta) has finite T.
inline bool is_n_far(const Rational& delta, const Base& base)
{
    return !tie_length(expand(delta.frac(), base)).infinite();
}

/// d(delta) = inf over m >= 0 of the distance from n^m delta to the nearest
/// integer. The fractional parts of n^m delta cycle through the long-division
/// remainders, so the infimum is a minimum over one orbit.
inline Rational compute_d(const Rational& delta, const Base& base)
{
    const auto orbit = detail::remainder_orbit(delta.frac(), base);
    const BigInt& q = orbit.denominator;
    BigInt best = q;
    for (const BigInt& r : orbit.remainders) {
        const BigInt dist = r < q - r ? r : BigInt(q - r);
        if (dist < best) {
            best = dist;
        }
    }
    return {best, q};
}

namespace detail {

/// inf over m < 0 and k != 0 of |n^m delta - k|. Once |n^m delta| <= 1/2 the
/// best nonzero k is +-1 and the distance 1 - |n^m delta| only grows as m
/// decreases further, so the scan stops at the first such m.
inline Rational negative_generation_constant(const Rational& delta, const Base& base)
{
    const Rational half(BigInt(1), BigInt(2));
    std::optional<Rational> best;
    Rational y = delta.abs();
    while (true) {
        y /= Rational(base.value());
        Rational dist = Rational(y.ceil()) - y;
        if (y.ceil() == 0) {
            dist = Rational(1) - y;
        }
        if (const BigInt below = y.floor(); below != 0) {
            dist = min(dist, y - Rational(below));
        }
        if (!best || dist < *best) {
            best = dist;
        }
        if (y <= half) {
            return *best;
        }
    }
}

} // namespace detail

/// C(delta), the best constant over the whole index set. Not translation
/// invariant: the negative-generation part depends on |delta| itself.
inline Rational compute_C(const Rational& delta, const Base& base)
{
    return min(compute_d(delta, base), detail::negative_generation_constant(delta, base));
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct FarnessCertificate {
    Rational delta;
    Base base;
    bool is_far = false;
    TieReport tie;
    std::optional<Rational> d_value;
    std::optional<Rational> c_value;
    /// 1/n^(T+1) <= C <= 1/n^T, checked against C on [0, 1) and against the
    /// translation-invariant d elsewhere (the two agree on [0, 1)).
    bool bound_ok = false;
};

inline bool tie_bound_holds(const Rational& constant, std::size_t t, const Base& base)
{
    const Rational upper = base.power(-static_cast<std::int64_t>(t));
    const Rational lower = upper / Rational(base.value());
    return lower <= constant && constant <= upper;
}

inline FarnessCertificate certificate(const Rational& delta, const Base& base)
{
    FarnessCertificate cert{delta, base, false, {}, std::nullopt, std::nullopt, false};
    cert.tie = tie_length(expand(delta.frac(), base));
    cert.is_far = !cert.tie.infinite();
    if (!cert.is_far) {
        return cert;
    }
    cert.d_value = compute_d(delta, base);
    cert.c_value = compute_C(delta, base);
    const bool in_unit = delta.sign() >= 0 && delta < Rational(1);
    const Rational& checked = in_unit ? *cert.c_value : *cert.d_value;
    cert.bound_ok = tie_bound_holds(checked, *cert.tie.length, base);
    return cert;
}

inline bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t f = 2; f * f <= p; ++f) {
        if (p % f == 0) {
            return false;
        }
    }
    return true;
}

/// Certificate for 1/p, p prime and coprime to n. d(1/p) = 1/p exactly: the
/// orbit of n^m mod p never hits 0 and starts at 1.
inline FarnessCertificate family_one_over_prime(std::uint64_t p, const Base& base)
{
    if (!is_prime(p)) {
        throw std::domain_error(std::to_string(p) + " is not prime");
    }
    if (base.value() % p == 0) {
        throw std::domain_error("gcd(p, n) != 1");
    }
    auto cert = certificate(Rational(BigInt(1), BigInt(p)), base);
    if (!cert.is_far || *cert.d_value != Rational(BigInt(1), BigInt(p))) {
        throw std::logic_error("1/p failed its farness certificate");
    }
    return cert;
}

/// Certificate for h/n^j + (1/p)(l/n^j) = (h p + l) / (p n^j), gcd(p, n l) = 1.
inline FarnessCertificate family_prop23(const BigInt& h, const BigInt& l, std::uint32_t j,
                                        std::uint64_t p, const Base& base)
{
    if (!is_prime(p)) {
        throw std::domain_error(std::to_string(p) + " is not prime");
    }
    const BigInt prime(p);
    if (boost::multiprecision::gcd(prime, BigInt(l * base.value())) != 1) {
        throw std::domain_error("gcd(p, n l) != 1");
    }
    const Rational delta(h * prime + l, prime * base.pow(j));
    auto cert = certificate(delta, base);
    if (!cert.is_far) {
        throw std::logic_error("family member failed its farness certificate");
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Digit streams
// ---------------------------------------------------------------------------

/// Deterministic digit rule a_i, i >= 1, possibly never periodic.
struct DigitStream {
    Base base;
    std::function<Digit(std::size_t)> rule;
};

/// 1, 0, 1, 0, 0, 1, 0, 0, 0, ...: blocks "1 0^k" for k = 1, 2, ...; the zero
/// runs grow without bound so the number is not far.
inline DigitStream growing_zero_runs(Base base)
{
    return {base, [](std::size_t i) -> Digit {
                std::size_t block_start = 1;
                for (std::size_t k = 1;; ++k) {
                    if (i == block_start) {
                        return 1;
                    }
                    if (i < block_start + k + 1) {
                        return 0;
                    }
                    block_start += k + 1;
                }
            }};
}

/// Blocks (1, 0)^k, 1, 0, 0 for k = 1, 2, ...: never periodic, yet no zero run
/// exceeds 2, so the number is far.
inline DigitStream bounded_zero_runs(Base base)
{
    return {base, [](std::size_t i) -> Digit {
                std::size_t offset = i - 1;
                for (std::size_t k = 1;; ++k) {
                    const std::size_t block = 2 * k + 3;
                    if (offset < block) {
                        if (offset == block - 1) {
                            return 0;
                        }
                        return offset % 2 == 0 ? 1 : 0;
                    }
                    offset -= block;
                }
            }};
}

inline DigitStream constant_stream(Base base, Digit d)
{
    detail::check_digits({d}, base);
    return {base, [d](std::size_t) { return d; }};
}

enum class StreamVerdict { FarAtDepth, NotFarSuspected, Undecided };

inline const char* to_string(StreamVerdict v)
{
    switch (v) {
    case StreamVerdict::FarAtDepth:
        return "FAR_AT_DEPTH";
    case StreamVerdict::NotFarSuspected:
        return "NOT_FAR_SUSPECTED";
    case StreamVerdict::Undecided:
        return "UNDECIDED";
    }
    return "UNDECIDED";
}

struct BoundedTieResult {
    std::size_t t_lower_bound = 0;
    StreamVerdict verdict = StreamVerdict::Undecided;
};

/// Longest tie among a_1..a_depth. The verdict is a heuristic read of how the
/// running maximum behaves over the scan and never a proof: FAR_AT_DEPTH when
/// the longest tie already appeared in the first half and nothing longer
/// showed up later, NOT_FAR_SUSPECTED when the second half set a new record.
inline BoundedTieResult bounded_tie_analysis(const DigitStream& s, std::size_t depth)
{
    if (depth == 0) {
        throw std::domain_error("depth must be positive");
    }
    std::vector<Digit> digits(depth + 1);
    for (std::size_t i = 1; i <= depth; ++i) {
        digits[i] = s.rule(i);
        if (digits[i] >= s.base.value()) {
            throw std::domain_error("stream produced an out-of-range digit");
        }
    }
    auto at = [&](std::size_t i) { return digits[i]; };
    const auto whole = detail::longest_tie(depth, at, s.base);
    const auto first_half = detail::longest_tie(depth / 2, at, s.base);

    BoundedTieResult out;
    out.t_lower_bound = whole ? whole->length() : 0;
    const std::size_t early = first_half ? first_half->length() : 0;
    if (depth < 16) {
        out.verdict = StreamVerdict::Undecided;
    } else if (out.t_lower_bound > early) {
        out.verdict = StreamVerdict::NotFarSuspected;
    } else if (whole && whole->end == depth && out.t_lower_bound == early) {
        // the record-tying run touches the end of the scan and may continue
        out.verdict = StreamVerdict::Undecided;
    } else {
        out.verdict = StreamVerdict::FarAtDepth;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Density
// ---------------------------------------------------------------------------

/// `count` distinct n-far rationals strictly inside (lo, hi), of the form
/// h/n^j + 1/(p n^j) with p the smallest prime not dividing n and j just
/// large enough to fit them in.
inline std::vector<Rational> density_probe(const Rational& lo, const Rational& hi, const Base& base,
                                           std::size_t count)
{
    if (!(lo < hi)) {
        throw std::domain_error("empty interval");
    }
    if (count == 0) {
        throw std::domain_error("count must be positive");
    }
    std::uint64_t p = 2;
    while (!is_prime(p) || base.value() % p == 0) {
        ++p;
    }
    const Rational width = hi - lo;
    std::uint32_t j = 0;
    while (base.power(-static_cast<std::int64_t>(j)) * Rational(static_cast<std::uint64_t>(count + 1)) > width) {
        ++j;
    }
    const BigInt scale = base.pow(j);
    const BigInt den = scale * p;
    std::vector<Rational> found;
    for (BigInt h = (lo * Rational(scale)).floor(); found.size() < count; ++h) {
        Rational x(h * p + 1, den);
        if (!(x < hi)) {
            throw std::logic_error("probe ran out of room");
        }
        if (!(lo < x)) {
            continue;
        }
        if (!is_n_far(x, base)) {
            throw std::logic_error("probe produced a non-far value");
        }
        found.push_back(std::move(x));
    }
    return found;
}

} // namespace dyadic

#endif // DYADIC_FAR_HPP
