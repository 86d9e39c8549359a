#include "dyadic/grid.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dyadic;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return {BigInt(p), BigInt(q)}; }

DigitSequence random_sequence(std::mt19937_64& rng, const Base& base)
{
    std::uniform_int_distribution<std::uint32_t> digit(0, base.max_digit());
    std::uniform_int_distribution<std::size_t> len(0, 4);
    Digits pre(len(rng));
    Digits period(len(rng) + 1);
    for (auto& d : pre) {
        d = digit(rng);
    }
    for (auto& d : period) {
        d = digit(rng);
    }
    return {base, pre, period};
}

GridRep random_grid(std::mt19937_64& rng, const Base& base)
{
    return {base, oracle::random_rational(rng, 50, 6), random_sequence(rng, base)};
}

} // namespace

TEST(Location, Values)
{
    const Base b2(2);
    const auto alt = DigitSequence(b2, {}, {1, 0});
    EXPECT_EQ(location_value(alt, 0), 0);
    EXPECT_EQ(location_value(alt, 1), 1);
    EXPECT_EQ(location_value(alt, 2), 1);
    EXPECT_EQ(location_value(alt, 3), 5);
    EXPECT_EQ(location_value(alt, 4), 5);
    EXPECT_EQ(location_value(alt, 5), 21);
    EXPECT_EQ(location_value(DigitSequence(Base(3), {}, {2}), 3), 26);
}

TEST(Location, ClosedFormsMatchTheSum)
{
    for (std::uint32_t n : {2u, 3u, 5u, 10u}) {
        const Base base(n);
        const auto alt = DigitSequence(base, {}, {1, 0});
        for (std::int64_t m = -40; m < 0; ++m) {
            const BigInt direct =
                oracle::location_sum([](std::uint64_t i) { return i % 2 == 0 ? 1u : 0u; }, static_cast<std::uint64_t>(-m), base);
            EXPECT_EQ(offset_closed_forms(m, base), Rational(direct)) << "m=" << m << " base " << n;
            EXPECT_EQ(offset_closed_forms(m, base), Rational(location_value(alt, static_cast<std::uint64_t>(-m))));
        }
    }
    EXPECT_THROW(offset_closed_forms(0, Base(2)), std::domain_error);
}

TEST(Grid, StandardCells)
{
    const auto g = standard_grid(Base(2));
    EXPECT_EQ(cell_containing(g, R(3, 8), 2), Interval(R(1, 4), 2, Base(2)));
    EXPECT_EQ(cell_containing(g, R(-1, 8), 0), Interval(R(-1), 0, Base(2)));
    EXPECT_EQ(cell_containing(g, R(5), -2), Interval(R(4), -2, Base(2)));
    EXPECT_EQ(cell_containing(g, R(1, 4), 2).left(), R(1, 4));
    EXPECT_EQ(cell_containing(g, R(1, 4), 2).right(), R(1, 2));
}

TEST(Grid, TranslatedCoarseEndpoints)
{
    const Base b2(2);
    const auto g = translated_standard_grid(R(1, 6), b2);
    EXPECT_EQ(g.offset(-1), R(7, 6));
    const auto points = endpoints(g, -1, {R(-2), R(4)});
    ASSERT_EQ(points.size(), 3u);
    EXPECT_EQ(points[0], R(-5, 6));
    EXPECT_EQ(points[1], R(7, 6));
    EXPECT_EQ(points[2], R(19, 6));

    // with a zero first location digit the generation -1 endpoints sit at
    // 1/6 + 2k instead
    const GridRep zero_first(b2, R(1, 6), DigitSequence(b2, {}, {0, 1}));
    EXPECT_EQ(cell_containing(zero_first, R(-1), -1).left(), R(-11, 6));
    EXPECT_EQ(cell_containing(zero_first, R(0), -1).left(), R(-11, 6));
    EXPECT_EQ(cell_containing(zero_first, R(1), -1).left(), R(1, 6));
    EXPECT_EQ(cell_containing(zero_first, R(3), -1).left(), R(13, 6));

    EXPECT_EQ(g.offset(3), R(1, 6));
    EXPECT_EQ(g.offset(-3), R(1, 6) + R(5));
}

TEST(Grid, EndpointsAreStrictlyInsideTheWindow)
{
    const auto g = standard_grid(Base(3));
    const auto points = endpoints(g, 1, {R(0), R(1)});
    ASSERT_EQ(points.size(), 2u);
    EXPECT_EQ(points[0], R(1, 3));
    EXPECT_EQ(points[1], R(2, 3));
}

TEST(Grid, MismatchedBases)
{
    EXPECT_THROW(GridRep(Base(2), R(0), DigitSequence::zeros(Base(3))), std::domain_error);
    EXPECT_THROW(reps_equal(standard_grid(Base(2)), standard_grid(Base(3))), std::domain_error);
}

TEST(Grid, PersistentEndpoint)
{
    const Base b2(2);
    EXPECT_EQ(*standard_grid(b2).persistent_endpoint(), R(0));
    EXPECT_FALSE(translated_standard_grid(R(1, 3), b2).persistent_endpoint());
    const GridRep g(b2, R(1, 2), DigitSequence(b2, {1, 1}, {0}));
    EXPECT_EQ(*g.persistent_endpoint(), R(7, 2));
    for (std::int64_t m = -10; m <= 10; ++m) {
        EXPECT_EQ(cell_containing(g, R(7, 2), m).left(), R(7, 2));
    }
}

TEST(Grid, AxiomsHoldForRandomGrids)
{
    std::mt19937_64 rng(51);
    for (int t = 0; t < 30; ++t) {
        const Base base(2 + static_cast<std::uint32_t>(rng() % 3));
        const auto g = random_grid(rng, base);
        EXPECT_TRUE(verify_grid_axioms(g, {-4, 4}, {R(-10), R(10)})) << g.shift() << " " << g.location().to_string();
    }
}

TEST(Canonical, KnownIdentity)
{
    for (std::uint32_t n : {2u, 3u, 5u}) {
        const Base base(n);
        const GridRep a(base, R(0), DigitSequence(base, {1}, {0}));
        const GridRep b(base, R(2), DigitSequence(base, {}, {base.max_digit()}));
        EXPECT_TRUE(reps_equal(a, b));
        EXPECT_EQ(canonicalize(b), a);
    }
}

TEST(Canonical, SameEndpointsAsOriginal)
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const Base base(2 + static_cast<std::uint32_t>(rng() % 4));
        const auto g = random_grid(rng, base);
        const auto c = canonicalize(g);
        EXPECT_GE(c.shift(), R(0));
        EXPECT_LT(c.shift(), R(1));
        const Window window{R(-12), R(12)};
        for (std::int64_t m = -3; m <= 4; ++m) {
            EXPECT_EQ(endpoints(g, m, window), endpoints(c, m, window));
        }
    }
}

TEST(Canonical, ShiftRepresentationsAreEqual)
{
    std::mt19937_64 rng(57);
    for (int t = 0; t < 100; ++t) {
        const Base base(2 + static_cast<std::uint32_t>(rng() % 4));
        const auto g = random_grid(rng, base);
        const BigInt k = static_cast<std::int64_t>(rng() % 61) - 30;
        const auto h = shift_representation(g, k);
        EXPECT_EQ(h.shift(), g.shift() + Rational(k));
        EXPECT_TRUE(reps_equal(g, h));
        EXPECT_EQ(canonicalize(h), canonicalize(g));
    }
}

TEST(Canonical, ShiftingOnlyTheLocationChangesTheGrid)
{
    // G(0, (1,0,1,0,...)) and G(0, (0,1,0,1,...)) disagree at generation -1
    const Base b2(2);
    const GridRep a(b2, R(0), DigitSequence(b2, {}, {1, 0}));
    const GridRep b(b2, R(0), DigitSequence(b2, {}, {0, 1}));
    EXPECT_FALSE(reps_equal(a, b));
    EXPECT_NE(cell_containing(a, R(0), -1), cell_containing(b, R(0), -1));

    // a shift by a non-integer is never the same grid
    EXPECT_FALSE(reps_equal(standard_grid(b2), GridRep(b2, R(1, 2), DigitSequence::zeros(b2))));
}
