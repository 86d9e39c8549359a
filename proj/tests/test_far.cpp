#include "dyadic/far.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dyadic;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return {BigInt(p), BigInt(q)}; }

std::optional<std::size_t> T(const Rational& x, std::uint32_t n) { return tie_length(expand(x.frac(), Base(n))).length; }

} // namespace

TEST(Ties, KnownLengths)
{
    EXPECT_EQ(T(R(1, 3), 2), 1u);
    EXPECT_EQ(T(R(4, 7), 2), 2u);
    EXPECT_EQ(T(R(1, 2), 2), std::nullopt);
    EXPECT_EQ(T(R(1, 4), 2), std::nullopt);
    EXPECT_EQ(T(R(0), 5), std::nullopt);
    EXPECT_EQ(T(R(1, 2), 3), 0u);
    EXPECT_EQ(T(R(3, 4), 3), 1u);
}

TEST(Ties, WitnessPointsAtTheLongestRun)
{
    auto report = tie_length(expand(R(4, 7), Base(2)));
    ASSERT_TRUE(report.witness);
    EXPECT_EQ(report.witness->start, 2u);
    EXPECT_EQ(report.witness->end, 3u);
    EXPECT_EQ(report.witness->digit, 0u);

    // 0011 repeating: runs of 0 and of 1 are separate ties
    auto mixed = tie_length(expand(R(3, 15), Base(2)));
    EXPECT_EQ(mixed.length, 2u);

    EXPECT_FALSE(tie_length(expand(R(1, 2), Base(2))).witness);
}

TEST(Ties, RunsWrappingThePeriodAreSeen)
{
    // 1/9 in base 2 is 000111 repeating; 7/9 is 110001 repeating, whose
    // 1-run wraps from the end of one period into the next
    EXPECT_EQ(T(R(1, 9), 2), 3u);
    EXPECT_EQ(T(R(7, 9), 2), 3u);
}

TEST(Ties, AgreeWithRawDigitScan)
{
    std::mt19937_64 rng(3);
    for (std::uint32_t n : {2u, 3u, 10u}) {
        for (int t = 0; t < 200; ++t) {
            const Rational x = oracle::random_unit_rational(rng, 300);
            EXPECT_EQ(T(x, n), oracle::scan_tie_length(x, Base(n))) << x << " base " << n;
        }
    }
}

TEST(Farness, ConstantsOfKnownNumbers)
{
    const Base b2(2);
    EXPECT_EQ(compute_d(R(1, 3), b2), R(1, 3));
    EXPECT_EQ(compute_C(R(1, 3), b2), R(1, 3));
    EXPECT_EQ(compute_d(R(4, 7), b2), R(1, 7));
    EXPECT_EQ(compute_C(R(4, 7), b2), R(1, 7));
    EXPECT_EQ(compute_d(R(10, 3), b2), R(1, 3));
    EXPECT_EQ(compute_d(R(1, 2), b2), R(0));
    EXPECT_EQ(compute_d(R(-1, 3), b2), R(1, 3));
}

TEST(Farness, CoarseGenerationsLowerCOutsideTheUnitInterval)
{
    // 10/3 at m = -2 sits at 5/6, which is 1/6 from k = 1
    EXPECT_EQ(compute_C(R(10, 3), Base(2)), R(1, 6));
    EXPECT_EQ(oracle::sigma_scan_C(R(10, 3), Base(2), 60), R(1, 6));
    EXPECT_LE(compute_C(R(10, 3), Base(2)), R(1, 3));
}

TEST(Farness, AgreesWithSigmaScan)
{
    std::mt19937_64 rng(17);
    for (std::uint32_t n : {2u, 3u, 5u, 10u}) {
        const Base base(n);
        for (int t = 0; t < 150; ++t) {
            const Rational x = oracle::random_rational(rng, 60, 40);
            EXPECT_EQ(compute_d(x, base), oracle::sigma_scan_d(x, base, 80)) << x << " base " << n;
            EXPECT_EQ(compute_C(x, base), oracle::sigma_scan_C(x, base, 80)) << x << " base " << n;
        }
    }
}

TEST(Farness, ClassificationAndTieBound)
{
    std::mt19937_64 rng(23);
    for (std::uint32_t n : {2u, 3u, 10u}) {
        const Base base(n);
        for (int t = 0; t < 300; ++t) {
            const Rational x = oracle::random_unit_rational(rng, 2000);
            const auto cert = certificate(x, base);
            const Rational d = compute_d(x, base);
            const Rational c = compute_C(x, base);
            EXPECT_EQ(cert.is_far, d > R(0));
            EXPECT_EQ(cert.is_far, c > R(0));
            EXPECT_EQ(c, d);
            if (cert.is_far) {
                EXPECT_TRUE(cert.bound_ok) << x << " base " << n;
                EXPECT_EQ(*cert.d_value, d);
                EXPECT_EQ(*cert.c_value, c);
            }
        }
    }
}

TEST(Farness, SmallConstantBoundNeedsAPositiveTie)
{
    // with at least one tie, C <= 1/n on [0, 1)
    std::mt19937_64 rng(29);
    for (std::uint32_t n : {2u, 3u, 5u}) {
        const Base base(n);
        for (int t = 0; t < 300; ++t) {
            const Rational x = oracle::random_unit_rational(rng, 1000);
            const auto cert = certificate(x, base);
            if (cert.is_far && *cert.tie.length >= 1) {
                EXPECT_LE(*cert.c_value, base.power(-1)) << x << " base " << n;
                EXPECT_LE(*cert.d_value, base.power(-1)) << x << " base " << n;
            }
        }
    }
}

TEST(Farness, SmallConstantBoundFailsWithoutTies)
{
    // 1/2 in base 3 is 0.111...; no tie, and d = C = 1/2 > 1/3
    const auto cert = certificate(R(1, 2), Base(3));
    ASSERT_TRUE(cert.is_far);
    EXPECT_EQ(*cert.tie.length, 0u);
    EXPECT_EQ(*cert.d_value, R(1, 2));
    EXPECT_EQ(*cert.c_value, R(1, 2));
    EXPECT_GT(*cert.c_value, Base(3).power(-1));
}

TEST(Farness, DInvariantUnderIntegerTranslation)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const Rational x = oracle::random_rational(rng, 500, 20);
        const Rational k(BigInt(static_cast<std::int64_t>(rng() % 41) - 20));
        EXPECT_EQ(compute_d(x + k, Base(2)), compute_d(x, Base(2)));
        EXPECT_EQ(is_n_far(x + k, Base(3)), is_n_far(x, Base(3)));
    }
}

TEST(Farness, ScalingAndBaseChange)
{
    std::mt19937_64 rng(37);
    for (std::uint32_t n : {2u, 3u, 5u}) {
        const Base base(n);
        for (int t = 0; t < 100; ++t) {
            const Rational x = oracle::random_rational(rng, 1000, 5);
            const bool far = is_n_far(x, base);
            for (std::int64_t k = -5; k <= 5; ++k) {
                EXPECT_EQ(is_n_far(x * base.power(k), base), far);
            }
            for (std::uint32_t q = 1; q <= 3; ++q) {
                EXPECT_EQ(is_n_far(x, Base(static_cast<std::uint32_t>(base.pow(q)))), far);
            }
        }
    }
}

TEST(Farness, NotFarExactlyForNAdicRationals)
{
    std::mt19937_64 rng(41);
    for (std::uint32_t n : {2u, 6u, 10u}) {
        const Base base(n);
        for (int t = 0; t < 200; ++t) {
            const Rational x = oracle::random_rational(rng, 1000, 3);
            BigInt q = x.denominator();
            for (std::uint32_t f = 2; f <= n; ++f) {
                if (n % f == 0) {
                    while (q % f == 0) {
                        q /= f;
                    }
                }
            }
            EXPECT_EQ(is_n_far(x, base), q != 1) << x << " base " << n;
        }
    }
}

TEST(Certificate, KnownValues)
{
    const auto third = certificate(R(1, 3), Base(2));
    EXPECT_TRUE(third.is_far);
    EXPECT_EQ(*third.tie.length, 1u);
    EXPECT_EQ(*third.d_value, R(1, 3));
    EXPECT_EQ(*third.c_value, R(1, 3));
    EXPECT_TRUE(third.bound_ok);

    const auto half = certificate(R(1, 2), Base(2));
    EXPECT_FALSE(half.is_far);
    EXPECT_TRUE(half.tie.infinite());
    EXPECT_FALSE(half.d_value);
    EXPECT_FALSE(half.bound_ok);

    for (std::uint32_t n : {2u, 3u, 10u}) {
        EXPECT_FALSE(certificate(R(0), Base(n)).is_far);
    }
}

TEST(Families, OneOverPrime)
{
    for (std::uint32_t n : {2u, 3u, 5u, 10u}) {
        for (std::uint64_t p = 2; p <= 97; ++p) {
            if (!is_prime(p) || n % p == 0) {
                continue;
            }
            const auto cert = family_one_over_prime(p, Base(n));
            EXPECT_EQ(*cert.d_value, R(1, static_cast<std::int64_t>(p)));
        }
    }
    EXPECT_THROW(family_one_over_prime(9, Base(2)), std::domain_error);
    EXPECT_THROW(family_one_over_prime(5, Base(10)), std::domain_error);
    EXPECT_THROW(family_one_over_prime(2, Base(2)), std::domain_error);
}

TEST(Families, ShiftedPrimeFractions)
{
    const Base b2(2);
    for (std::int64_t h = -3; h <= 3; ++h) {
        for (std::int64_t l = 1; l <= 9; l += 2) {
            for (std::uint32_t j = 0; j <= 4; ++j) {
                for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
                    if (l % static_cast<std::int64_t>(p) == 0) {
                        continue;
                    }
                    const auto cert = family_prop23(BigInt(h), BigInt(l), j, p, b2);
                    EXPECT_TRUE(cert.is_far);
                }
            }
        }
    }
    EXPECT_THROW(family_prop23(BigInt(1), BigInt(3), 1, 3, b2), std::domain_error);
    EXPECT_THROW(family_prop23(BigInt(1), BigInt(1), 1, 2, b2), std::domain_error);
    EXPECT_THROW(family_prop23(BigInt(1), BigInt(1), 1, 4, b2), std::domain_error);
}

TEST(Streams, Rules)
{
    const Base b2(2);
    const auto grow = growing_zero_runs(b2);
    const Digits expect_grow{1, 0, 1, 0, 0, 1, 0, 0, 0, 1};
    for (std::size_t i = 0; i < expect_grow.size(); ++i) {
        EXPECT_EQ(grow.rule(i + 1), expect_grow[i]);
    }
    const auto bounded = bounded_zero_runs(b2);
    const Digits expect_bounded{1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0};
    for (std::size_t i = 0; i < expect_bounded.size(); ++i) {
        EXPECT_EQ(bounded.rule(i + 1), expect_bounded[i]);
    }
    EXPECT_THROW(constant_stream(b2, 2), std::domain_error);
}

TEST(Streams, BoundedTieAnalysis)
{
    const Base b2(2);
    const auto grow = bounded_tie_analysis(growing_zero_runs(b2), 10000);
    EXPECT_EQ(grow.verdict, StreamVerdict::NotFarSuspected);
    EXPECT_GE(grow.t_lower_bound, 100u);

    const auto bounded = bounded_tie_analysis(bounded_zero_runs(b2), 10000);
    EXPECT_EQ(bounded.verdict, StreamVerdict::FarAtDepth);
    EXPECT_EQ(bounded.t_lower_bound, 2u);

    EXPECT_EQ(bounded_tie_analysis(constant_stream(b2, 0), 1000).verdict, StreamVerdict::NotFarSuspected);
    EXPECT_EQ(bounded_tie_analysis(bounded_zero_runs(b2), 8).verdict, StreamVerdict::Undecided);
    EXPECT_THROW(bounded_tie_analysis(bounded_zero_runs(b2), 0), std::domain_error);
}

TEST(Density, ProbesLandInsideAndAreFar)
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        const Base base(2 + static_cast<std::uint32_t>(rng() % 9));
        const Rational lo = oracle::random_rational(rng, 1000, 10);
        const Rational width = base.power(-static_cast<std::int64_t>(rng() % 21));
        const auto found = density_probe(lo, lo + width, base, 5);
        ASSERT_EQ(found.size(), 5u);
        for (const auto& x : found) {
            EXPECT_LT(lo, x);
            EXPECT_LT(x, lo + width);
            EXPECT_GT(compute_d(x, base), R(0));
        }
    }
    EXPECT_THROW(density_probe(R(1), R(1), Base(2), 3), std::domain_error);
}
