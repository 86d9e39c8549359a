#ifndef DYADIC_MEI_COVER_HPP
#define DYADIC_MEI_COVER_HPP

#include "dyadic/far.hpp"
#include "dyadic/grid.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

namespace dyadic {

/// Query interval [left, right).
class Query {
public:
    Query(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right))
    {
        if (!(left_ < right_)) {
            throw std::domain_error("query needs left < right");
        }
    }

    const Rational& left() const noexcept { return left_; }
    const Rational& right() const noexcept { return right_; }
    Rational length() const { return right_ - left_; }

    friend bool operator==(const Query&, const Query&) = default;

private:
    Rational left_;
    Rational right_;
};

enum class CoverSource { FirstGrid, SecondGrid };

inline const char* to_string(CoverSource s)
{
    return s == CoverSource::FirstGrid ? "FIRST_GRID" : "SECOND_GRID";
}

struct CoverResult {
    Interval interval;
    CoverSource source;
    Rational ratio; // |interval| / |query|
};

namespace detail {

/// Largest m with n^-m >= length.
inline std::int64_t finest_generation(const Rational& length, const Base& base)
{
    std::int64_t m = 0;
    if (length <= Rational(1)) {
        while (base.power(-(m + 1)) >= length) {
            ++m;
        }
    } else {
        while (base.power(-m) < length) {
            --m;
        }
    }
    return m;
}

/// Smallest cell of g containing q, scanning generations coarser from
/// `finest`. A persistent endpoint strictly inside q blocks every generation;
/// otherwise the endpoints nearest q drift off to +-infinity and some
/// generation succeeds.
inline std::optional<Interval> finest_cover(const Query& q, const GridRep& g, std::int64_t finest)
{
    if (auto p = g.persistent_endpoint(); p && q.left() < *p && *p < q.right()) {
        return std::nullopt;
    }
    for (std::int64_t m = finest;; --m) {
        Interval cell = cell_containing(g, q.left(), m);
        if (q.right() <= cell.right()) {
            return cell;
        }
    }
}

} // namespace detail

/// Smallest cell of either grid containing q; ties go to the first grid.
/// Empty when neither grid has such a cell at any generation, which happens
/// only when both grids have a persistent endpoint inside q.
inline std::optional<CoverResult> cover(const Query& q, const GridRep& g1, const GridRep& g2)
{
    detail::require_same_base(g1.base(), g2.base());
    const std::int64_t finest = detail::finest_generation(q.length(), g1.base());
    auto first = detail::finest_cover(q, g1, finest);
    auto second = detail::finest_cover(q, g2, finest);

    std::optional<CoverResult> out;
    if (first && (!second || first->generation() >= second->generation())) {
        out = CoverResult{*first, CoverSource::FirstGrid, Rational(0)};
    } else if (second) {
        out = CoverResult{*second, CoverSource::SecondGrid, Rational(0)};
    }
    if (out) {
        out->ratio = out->interval.length() / q.length();
    }
    return out;
}

/// Brute-force cover in a single grid: for each generation from the finest
/// admissible one down to m_min, enumerate the cells around q straight from
/// the endpoint formula and return the first that contains q.
inline std::optional<Interval> oracle_cover(const Query& q, const GridRep& g, std::int64_t m_min)
{
    const Base& base = g.base();
    const Rational length = q.length();
    if (base.power(-m_min) < length) {
        return std::nullopt;
    }
    std::int64_t m_max = m_min;
    while (base.power(-(m_max + 1)) >= length) {
        ++m_max;
    }
    for (std::int64_t m = m_max; m >= m_min; --m) {
        Rational e = g.shift();
        BigInt place = 1;
        for (std::int64_t i = 0; i < -m; ++i) {
            e += Rational(place * g.location().digit(static_cast<std::size_t>(i)));
            place *= base.value();
        }
        const Rational cell_len = base.power(-m);
        const BigInt k_lo = ((q.left() - e) / cell_len).floor() - 1;
        const BigInt k_hi = ((q.right() - e) / cell_len).floor() + 1;
        for (BigInt k = k_lo; k <= k_hi; ++k) {
            Interval cell(e + Rational(k) * cell_len, m, base);
            if (cell.contains(q.left(), q.right())) {
                return cell;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cover-constant estimation
// ---------------------------------------------------------------------------

/// Deterministic query for trial `trial`. Lengths are n^-m times a factor in
/// (1/n, 1] with m drawn from the scale range; half the queries are placed to
/// straddle an endpoint of one of the grids near generation m, the rest are
/// placed uniformly in a span of twice the coarsest scale around 0.
inline Query sample_query(const GridRep& g1, const GridRep& g2, const GenerationRange& scales,
                          std::uint64_t seed, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    auto draw = [&](std::uint64_t bound) { return rng() % bound; };

    const Base& base = g1.base();
    const std::uint64_t n = base.value();
    constexpr std::uint64_t resolution = std::uint64_t{1} << 16;
    constexpr std::int64_t half_span_units = std::int64_t{1} << 31;

    const auto m = scales.lo + static_cast<std::int64_t>(draw(static_cast<std::uint64_t>(scales.hi - scales.lo + 1)));
    const Rational length =
        base.power(-m) * Rational(BigInt(resolution + 1 + draw((n - 1) * resolution)), BigInt(n * resolution));
    const Rational span = base.power(-scales.lo) * Rational(2);
    const Rational centre =
        span * Rational(BigInt(static_cast<std::int64_t>(draw(2 * half_span_units)) - half_span_units),
                        BigInt(half_span_units));

    Rational left = centre;
    if (draw(2) == 0) {
        const GridRep& g = draw(2) == 0 ? g1 : g2;
        const std::int64_t mm = m + static_cast<std::int64_t>(draw(5)) - 2;
        const Rational endpoint = cell_containing(g, centre, mm).left();
        left = endpoint - length * Rational(BigInt(1 + draw(resolution - 1)), BigInt(resolution));
    }
    return {left, left + length};
}

struct EstimateSummary {
    /// Largest observed ratio; empty when some query had no cover at all.
    std::optional<Rational> max_ratio;
    std::optional<Query> argmax_query;
    std::uint64_t trials = 0;
    std::uint64_t uncovered = 0;
};

/// Empirical cover constant: the worst ratio over `trials` sampled queries.
/// Each trial draws from its own stream seeded by (seed, trial), so the result
/// does not depend on evaluation order.
inline EstimateSummary cover_constant_estimate(const GridRep& g1, const GridRep& g2, std::uint64_t trials,
                                               const GenerationRange& scales, std::uint64_t seed)
{
    detail::require_same_base(g1.base(), g2.base());
    if (trials == 0) {
        throw std::domain_error("trials must be positive");
    }
    if (scales.lo > scales.hi) {
        throw std::domain_error("empty scale range");
    }
    EstimateSummary out;
    out.trials = trials;
    std::optional<Rational> worst;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Query q = sample_query(g1, g2, scales, seed, t);
        auto result = cover(q, g1, g2);
        if (!result) {
            if (out.uncovered++ == 0) {
                out.argmax_query = q;
            }
            continue;
        }
        if (out.uncovered == 0 && (!worst || result->ratio > *worst)) {
            worst = result->ratio;
            out.argmax_query = q;
        }
    }
    if (out.uncovered == 0) {
        out.max_ratio = worst;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Witnesses for non-adjacent translates
// ---------------------------------------------------------------------------

struct Witness {
    std::int64_t m0;
    BigInt k0;
    Query query;
};

/// For delta not n-far: the first (m0, k0) with
/// |delta - k0/n^m0| < n^-(N+1) n^-m0, and a query holding both delta and
/// k0/n^m0 in its interior with |Q| < n^-(N+1+m0). Any cover of Q by the
/// standard grid or the delta translate then has ratio above n^N.
inline Witness adversarial_witness(const Rational& delta, const Base& base, std::uint32_t depth)
{
    if (is_n_far(delta, base)) {
        throw std::domain_error(delta.to_string() + " is n-far; no adversarial witness exists");
    }
    const Rational half(BigInt(1), BigInt(2));
    for (std::int64_t m0 = 0;; ++m0) {
        const Rational scale = base.power(m0);
        const BigInt k0 = (delta * scale + half).floor();
        const Rational point = Rational(k0) / scale;
        const Rational gap = (delta - point).abs();
        const Rational bound = base.power(-static_cast<std::int64_t>(depth) - 1 - m0);
        if (gap < bound) {
            const Rational pad = (bound - gap) / Rational(4);
            const Rational lo = min(delta, point) - pad;
            const Rational hi = max(delta, point) + pad;
            return {m0, k0, Query(lo, hi)};
        }
    }
}

} // namespace dyadic

#endif // DYADIC_MEI_COVER_HPP
