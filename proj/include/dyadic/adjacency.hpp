#ifndef DYADIC_ADJACENCY_HPP
#define DYADIC_ADJACENCY_HPP

#include "dyadic/far.hpp"
#include "dyadic/grid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

/// Subsequential limits of |L_a(j) - L_b(j)| / n^j and their extremes.
struct LimitProfile {
    std::vector<Rational> limit_points; // ascending, distinct
    Rational c1;                        // liminf
    Rational c2;                        // limsup
};

/// D(j) = (L_a(j) - L_b(j)) / n^j, evaluated directly.
inline Rational normalized_gap(const DigitSequence& a, const DigitSequence& b, std::uint64_t j)
{
    return Rational(location_value(a, j) - location_value(b, j), a.base().pow(j));
}

namespace detail {

/// lim L_s(j)/n^j along j' = j (mod period), read off the reversed digits
/// s_{j-1}, s_{j-2}, ... which are purely periodic once j clears the preperiod.
inline Rational reversed_tail_value(const DigitSequence& s, std::uint64_t j)
{
    const std::size_t lambda = s.period().size();
    const Base& base = s.base();
    BigInt cycle = 0;
    for (std::size_t t = 1; t <= lambda; ++t) {
        cycle = cycle * base.value() + s.digit(j - t);
    }
    return {cycle, base.pow(lambda) - 1};
}

inline void require_same_base(const Base& a, const Base& b)
{
    if (a != b) {
        throw std::domain_error("grids have different bases");
    }
}

} // namespace detail

/// Exact liminf/limsup of |D(j)|. Along each residue class of j modulo
/// lcm(period_a, period_b), D(j) converges to the difference of two purely
/// periodic base-n fractions, so the limit set is finite and computable.
inline LimitProfile limit_profile(const DigitSequence& a, const DigitSequence& b)
{
    detail::require_same_base(a.base(), b.base());
    const std::size_t la = a.period().size();
    const std::size_t lb = b.period().size();
    const std::size_t classes = std::lcm(la, lb);
    const std::uint64_t start = std::max(a.preperiod().size() + la, b.preperiod().size() + lb);

    LimitProfile out;
    for (std::uint64_t r = 0; r < classes; ++r) {
        const std::uint64_t j = start + r;
        out.limit_points.push_back(
            (detail::reversed_tail_value(a, j) - detail::reversed_tail_value(b, j)).abs());
    }
    std::sort(out.limit_points.begin(), out.limit_points.end());
    out.limit_points.erase(std::unique(out.limit_points.begin(), out.limit_points.end()),
                           out.limit_points.end());
    out.c1 = out.limit_points.front();
    out.c2 = out.limit_points.back();
    return out;
}

enum class FailingCondition { None, ShiftNotFar, LiminfZero, LimsupOne };

inline const char* to_string(FailingCondition f)
{
    switch (f) {
    case FailingCondition::None:
        return "NONE";
    case FailingCondition::ShiftNotFar:
        return "SHIFT_NOT_FAR";
    case FailingCondition::LiminfZero:
        return "LIMINF_ZERO";
    case FailingCondition::LimsupOne:
        return "LIMSUP_ONE";
    }
    return "NONE";
}

struct AdjacencyReport {
    bool adjacent = false;
    Rational shift_gap;
    bool shift_gap_far = false;
    LimitProfile profile;
    FailingCondition failing_condition = FailingCondition::None;
};

/// Two grids are adjacent iff their shift gap is n-far and the location
/// profile satisfies 0 < liminf <= limsup < 1. Any representations may be
/// passed; the answer does not depend on the choice.
inline AdjacencyReport is_adjacent(const GridRep& g1, const GridRep& g2)
{
    detail::require_same_base(g1.base(), g2.base());
    AdjacencyReport report;
    report.shift_gap = g1.shift() - g2.shift();
    report.shift_gap_far = is_n_far(report.shift_gap, g1.base());
    report.profile = limit_profile(g1.location(), g2.location());

    if (!report.shift_gap_far) {
        report.failing_condition = FailingCondition::ShiftNotFar;
    } else if (report.profile.c1 == Rational(0)) {
        report.failing_condition = FailingCondition::LiminfZero;
    } else if (report.profile.c2 == Rational(1)) {
        report.failing_condition = FailingCondition::LimsupOne;
    }
    report.adjacent = report.failing_condition == FailingCondition::None;
    return report;
}

/// The standard grid and its (1, 0, 1, 0, ...) translate by delta are adjacent
/// iff delta is n-far. Both routes are evaluated and must agree.
inline bool is_adjacent_standard_translate(const Rational& delta, const Base& base)
{
    const bool far = is_n_far(delta, base);
    const bool general = is_adjacent(standard_grid(base), translated_standard_grid(delta, base)).adjacent;
    if (far != general) {
        throw std::logic_error("standard-translate adjacency disagrees with farness of the shift");
    }
    return far;
}

/// min over generations m of n^m times the smallest gap between endpoints of
/// the standard grid and its delta translate inside the window. Coincident
/// endpoints give 0. Generations with fewer than two endpoints in the window
/// are skipped.
inline Rational endpoint_separation(const Rational& delta, const Base& base,
                                    const GenerationRange& range, const Window& window)
{
    const GridRep standard = standard_grid(base);
    const GridRep shifted = translated_standard_grid(delta, base);
    std::optional<Rational> best;
    for (std::int64_t m = range.lo; m <= range.hi; ++m) {
        std::vector<Rational> points = endpoints(standard, m, window);
        std::vector<Rational> other = endpoints(shifted, m, window);
        points.insert(points.end(), other.begin(), other.end());
        if (points.size() < 2) {
            continue;
        }
        std::sort(points.begin(), points.end());
        std::optional<Rational> gap;
        for (std::size_t i = 1; i < points.size(); ++i) {
            Rational d = points[i] - points[i - 1];
            if (!gap || d < *gap) {
                gap = std::move(d);
            }
        }
        Rational scaled = *gap * base.power(m);
        if (!best || scaled < *best) {
            best = std::move(scaled);
        }
    }
    if (!best) {
        throw std::domain_error("window holds fewer than two endpoints in every generation");
    }
    return *best;
}

enum class InvarianceVerdict { Matched, Inverted };

inline const char* to_string(InvarianceVerdict v)
{
    return v == InvarianceVerdict::Matched ? "MATCHED" : "INVERTED";
}

struct InvarianceResult {
    std::pair<Rational, Rational> original;
    std::pair<Rational, Rational> shifted;
    InvarianceVerdict verdict;
};

/// Re-represents g1 and g2 with shifts moved by n1 and n2 and compares the
/// location profiles. For adjacent grids the new (liminf, limsup) is either
/// (C1, C2) or the inverted (1 - C2, 1 - C1).
inline InvarianceResult representation_invariance(const GridRep& g1, const GridRep& g2,
                                                  const BigInt& n1, const BigInt& n2)
{
    if (!is_adjacent(g1, g2).adjacent) {
        throw std::domain_error("representation invariance applies to adjacent grids only");
    }
    const auto before = limit_profile(g1.location(), g2.location());
    const auto after = limit_profile(shift_representation(g1, n1).location(),
                                     shift_representation(g2, n2).location());
    InvarianceResult out{{before.c1, before.c2}, {after.c1, after.c2}, InvarianceVerdict::Matched};
    if (out.shifted == out.original) {
        return out;
    }
    if (out.shifted == std::pair{Rational(1) - before.c2, Rational(1) - before.c1}) {
        out.verdict = InvarianceVerdict::Inverted;
        return out;
    }
    throw std::logic_error("re-represented profile is neither matched nor inverted");
}

} // namespace dyadic

#endif // DYADIC_ADJACENCY_HPP
