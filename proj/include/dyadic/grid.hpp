#ifndef DYADIC_GRID_HPP
#define DYADIC_GRID_HPP

#include "dyadic/digit_sequence.hpp"
#include "dyadic/expansion.hpp"
#include "dyadic/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

/// Inclusive range of generations.
struct GenerationRange {
    std::int64_t lo;
    std::int64_t hi;
};

/// Open window (lo, hi) on the line.
struct Window {
    Rational lo;
    Rational hi;
};

/// Half-open cell [left, left + n^-generation). The length is implied by the
/// generation, so it is exact by construction.
class Interval {
public:
    Interval(Rational left, std::int64_t generation, Base base)
        : left_(std::move(left)), generation_(generation), base_(base)
    {
    }

    const Rational& left() const noexcept { return left_; }
    std::int64_t generation() const noexcept { return generation_; }
    const Base& base() const noexcept { return base_; }

    Rational length() const { return base_.power(-generation_); }
    Rational right() const { return left_ + length(); }

    bool contains(const Rational& x) const { return left_ <= x && x < right(); }

    /// [lo, hi) is a subset of this cell.
    bool contains(const Rational& lo, const Rational& hi) const { return left_ <= lo && hi <= right(); }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational left_;
    std::int64_t generation_;
    Base base_;
};

/// L_a(j) = sum_{i<j} a_i n^i, with L_a(0) = 0.
inline BigInt location_value(const DigitSequence& s, std::uint64_t j)
{
    BigInt value = 0;
    BigInt place = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        value += place * s.digit(i);
        place *= s.base().value();
    }
    return value;
}

/// Grid G(shift, L_location): generation m >= 0 has endpoints shift + k/n^m,
/// generation m < 0 has endpoints shift + L(-m) + k n^-m.
class GridRep {
public:
    GridRep(Base base, Rational shift, DigitSequence location)
        : base_(base), shift_(std::move(shift)), location_(std::move(location))
    {
        if (location_.base() != base_) {
            throw std::domain_error("location sequence base differs from grid base");
        }
    }

    const Base& base() const noexcept { return base_; }
    const Rational& shift() const noexcept { return shift_; }
    const DigitSequence& location() const noexcept { return location_; }

    /// One endpoint of generation m; all others differ by multiples of n^-m.
    Rational offset(std::int64_t m) const
    {
        if (m >= 0) {
            return shift_;
        }
        return shift_ + Rational(location_value(location_, static_cast<std::uint64_t>(-m)));
    }

    /// The point that is an endpoint of every generation, if there is one.
    /// It exists exactly when the location is an ordinary integer (a tail of
    /// zeros or of n-1); no cell of any generation has it in its interior.
    std::optional<Rational> persistent_endpoint() const
    {
        if (auto v = location_.integer_value()) {
            return shift_ + Rational(*v);
        }
        return std::nullopt;
    }

    friend bool operator==(const GridRep&, const GridRep&) = default;

private:
    Base base_;
    Rational shift_;
    DigitSequence location_;
};

inline GridRep standard_grid(Base base) { return {base, Rational(0), DigitSequence::zeros(base)}; }

/// Shift delta with location (1, 0, 1, 0, ...).
inline GridRep translated_standard_grid(const Rational& delta, Base base)
{
    return {base, delta, DigitSequence(base, {}, {1, 0})};
}

/// Closed form of L_(1,0,1,0,...)(-m) for m < 0: (n^-m - 1)/(n^2 - 1) for even
/// m and (n^(1-m) - 1)/(n^2 - 1) for odd m.
inline Rational offset_closed_forms(std::int64_t m, const Base& base)
{
    if (m >= 0) {
        throw std::domain_error("closed-form offsets are defined for negative generations only");
    }
    const auto exponent = static_cast<std::uint64_t>(m % 2 == 0 ? -m : 1 - m);
    const BigInt n = base.value();
    return {base.pow(exponent) - 1, n * n - 1};
}

inline Interval cell_containing(const GridRep& g, const Rational& x, std::int64_t m)
{
    const Rational e = g.offset(m);
    const Rational len = g.base().power(-m);
    const BigInt k = ((x - e) / len).floor();
    return {e + Rational(k) * len, m, g.base()};
}

/// Endpoints of generation m strictly inside the window, ascending.
inline std::vector<Rational> endpoints(const GridRep& g, std::int64_t m, const Window& window)
{
    const Rational e = g.offset(m);
    const Rational len = g.base().power(-m);
    std::vector<Rational> out;
    for (BigInt k = ((window.lo - e) / len).floor(); ; ++k) {
        Rational p = e + Rational(k) * len;
        if (p >= window.hi) {
            break;
        }
        if (p > window.lo) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Checks the grid axioms over a finite window: each generation tiles the
/// window with cells of length n^-m and no gaps or overlaps, and every
/// generation-(m+1) cell meeting the window lies inside one generation-m cell.
/// Nesting plus tiling gives the pairwise intersection property.
inline bool verify_grid_axioms(const GridRep& g, const GenerationRange& range, const Window& window)
{
    const Base& base = g.base();
    for (std::int64_t m = range.lo; m <= range.hi; ++m) {
        const Rational len = base.power(-m);
        Interval cell = cell_containing(g, window.lo, m);
        if (!cell.contains(window.lo)) {
            return false;
        }
        while (cell.left() < window.hi) {
            if (cell.right() - cell.left() != len) {
                return false;
            }
            if (m < range.hi) {
                // children of this cell at generation m+1 that meet the window
                const Rational child_len = len / Rational(base.value());
                Interval child = cell_containing(g, max(cell.left(), window.lo), m + 1);
                while (child.left() < cell.right() && child.left() < window.hi) {
                    if (!cell.contains(child.left(), child.right())) {
                        return false;
                    }
                    child = Interval(child.left() + child_len, m + 1, base);
                }
            }
            Interval next = cell_containing(g, cell.right(), m);
            if (next.left() != cell.right()) {
                return false;
            }
            cell = std::move(next);
        }
    }
    return true;
}

/// Representation with shift in [0, 1): G(delta, a) = G(delta - N, a + N) for
/// N = floor(delta), since the coarse offsets delta + L_a(j) are unchanged
/// modulo n^j.
inline GridRep canonicalize(const GridRep& g)
{
    auto [fraction, integer] = frac_floor(g.shift());
    return {g.base(), std::move(fraction), nadic_add_integer(g.location(), integer)};
}

/// Alternate representation G(delta + N, a - N) of the same grid.
inline GridRep shift_representation(const GridRep& g, const BigInt& offset)
{
    return {g.base(), g.shift() + Rational(offset), nadic_add_integer(g.location(), -offset)};
}

inline bool reps_equal(const GridRep& a, const GridRep& b)
{
    if (a.base() != b.base()) {
        throw std::domain_error("grids have different bases");
    }
    return canonicalize(a) == canonicalize(b);
}

} // namespace dyadic

#endif // DYADIC_GRID_HPP
