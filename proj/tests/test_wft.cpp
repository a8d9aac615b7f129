#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyadica/wft.hpp"

#include <random>

using namespace dyadica;

namespace {

ExactScalar sc(long n, long d = 1) { return ExactScalar(Rational(n, d)); }

DyadicRational dr(long num, unsigned scale = 0) {
    return DyadicRational::from_parts(Integer(num), scale);
}

StepFunction chi(int rank, long index) {
    return StepFunction::indicator({rank, Integer(index)});
}

StepFunction random_step(std::mt19937_64& rng, int rank, int support_exp) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::vector<ExactScalar> v(std::size_t{1} << (rank + support_exp));
    for (auto& x : v) x = ExactScalar(Rational(num(rng), 4), Rational(num(rng), 8));
    return StepFunction(rank, support_exp, std::move(v));
}

// Quadrature oracle for the moment integral, at a strictly finer rank than
// the implementation uses.
ExactScalar moment_oracle(long k, const DyadicInterval& interval) {
    int r = static_cast<int>(bit_length(Integer(k))) + 2;
    int refined = std::max(r, interval.rank);
    Integer first = interval.index << (refined - interval.rank);
    Integer count = Integer(1) << (refined - interval.rank);
    Rational acc = 0;
    for (Integer q = first; q < first + count; ++q) {
        DyadicRational left = DyadicRational(q).scale_by_pow2(-refined);
        Rational piece = Rational(2 * q + 1, Integer(1) << (2 * refined + 1));
        acc += walsh(Integer(k), left) > 0 ? piece : -piece;
    }
    return ExactScalar(acc);
}

}  // namespace

TEST_CASE("transform of chi_[0,1) is itself") {
    StepFunction one = StepFunction::unit_indicator();
    CHECK(wft(one) == one);
    CHECK(wft_direct(one) == one);
}

TEST_CASE("frozen small transforms") {
    // both computed with the kernel-sum oracle
    StepFunction half = chi(1, 0);
    StepFunction half_hat = StepFunction(0, 1, {sc(1, 2), sc(1, 2)});
    CHECK(wft_direct(half) == half_hat);
    CHECK(wft(half) == half_hat);

    StepFunction shifted = chi(0, 1);
    StepFunction shifted_hat = StepFunction(1, 0, {sc(1), sc(-1)});
    CHECK(wft_direct(shifted) == shifted_hat);
    CHECK(wft(shifted) == shifted_hat);

    CHECK(wft_direct(StepFunction::zero(1, 1)).is_identically_zero());
}

TEST_CASE("fast equals direct, exhaustive basis up to size 16") {
    for (int total = 0; total <= 4; ++total) {
        for (int rank = -2; rank <= total + 2; ++rank) {
            int m = total - rank;
            for (long idx = 0; idx < (1L << total); ++idx) {
                std::vector<ExactScalar> v(std::size_t{1} << total);
                v[static_cast<std::size_t>(idx)] = sc(1);
                StepFunction f(rank, m, std::move(v));
                StepFunction fast = wft(f);
                StepFunction direct = wft_direct(f);
                CHECK(fast.rank() == m);
                CHECK(fast.support_exp() == rank);
                CHECK(fast.values() == direct.values());
            }
        }
    }
}

TEST_CASE("fast equals direct, random functions") {
    std::mt19937_64 rng(301);
    for (int t = 0; t < 120; ++t) {
        int rank = std::uniform_int_distribution<int>(-1, 4)(rng);
        int total = std::uniform_int_distribution<int>(std::max(0, -rank), 6)(rng);
        StepFunction f = random_step(rng, rank, total - rank);
        StepFunction fast = wft(f);
        CHECK(fast.values() == wft_direct(f).values());
        CHECK(wft(fast) == f);  // involution
    }
}

TEST_CASE("Parseval and linearity") {
    std::mt19937_64 rng(302);
    for (int t = 0; t < 60; ++t) {
        int rank = std::uniform_int_distribution<int>(0, 3)(rng);
        int m = std::uniform_int_distribution<int>(0, 3 - rank + 1)(rng);
        StepFunction f = random_step(rng, rank, m);
        StepFunction g = random_step(rng, rank, m);
        CHECK(inner(f, f) == inner(wft(f), wft(f)));
        CHECK(inner(f, g) == inner(wft(f), wft(g)));
        ExactScalar a(Rational(3, 2), Rational(1, 4));
        ExactScalar b(Rational(-2, 3));
        CHECK(wft(linear_combine(a, f, b, g)) ==
              linear_combine(a, wft(f), b, wft(g)));
    }
}

TEST_CASE("support/rank duality and constancy at claimed rank") {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 40; ++t) {
        int rank = std::uniform_int_distribution<int>(-1, 3)(rng);
        int total = std::uniform_int_distribution<int>(std::max(0, -rank), 5)(rng);
        StepFunction f = random_step(rng, rank, total - rank);
        StepFunction fhat = wft(f);
        CHECK(fhat.rank() == f.support_exp());
        CHECK(fhat.support_exp() == f.rank());
        // genuinely constant on its atoms: kernel evaluation one rank finer
        StepFunction refined = fhat.refine_rank(fhat.rank() + 1);
        for (std::size_t p = 0; p < refined.size(); ++p) {
            DyadicRational y = DyadicRational(Integer(p)).scale_by_pow2(-refined.rank());
            CHECK(wft_eval(f, y) == refined.values()[p]);
        }
    }
}

TEST_CASE("dilation covariance: transform of f(2x) is half of fhat(y/2)") {
    std::mt19937_64 rng(304);
    for (int t = 0; t < 40; ++t) {
        int rank = std::uniform_int_distribution<int>(0, 3)(rng);
        int m = std::uniform_int_distribution<int>(1, 3)(rng);
        StepFunction f = random_step(rng, rank, m);
        StepFunction lhs = wft(dilate(f, Dilation::contract));
        StepFunction rhs = linear_combine(sc(1, 2), dilate(wft(f), Dilation::expand),
                                          sc(0), StepFunction::zero());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("moment_integral examples") {
    DyadicInterval unit{0, 0};
    CHECK(moment_integral(0, unit) == sc(1, 2));
    CHECK(moment_integral(1, unit) == sc(-1, 4));
    CHECK(moment_integral(2, unit) == sc(-1, 8));
    CHECK(moment_integral(1, unit) == moment_oracle(1, unit));
    CHECK(moment_integral(2, unit) == moment_oracle(2, unit));
}

TEST_CASE("moment_integral against finer quadrature oracle") {
    std::mt19937_64 rng(305);
    for (int t = 0; t < 60; ++t) {
        long k = std::uniform_int_distribution<long>(0, 40)(rng);
        int rank = std::uniform_int_distribution<int>(-2, 4)(rng);
        long max_index = rank >= 0 ? (4L << rank) : 4L;
        DyadicInterval interval{rank,
                                Integer(std::uniform_int_distribution<long>(0, max_index)(rng))};
        CHECK(moment_integral(Integer(k), interval) == moment_oracle(k, interval));
    }
}

TEST_CASE("moments are additive over split intervals") {
    std::mt19937_64 rng(306);
    for (int t = 0; t < 40; ++t) {
        long k = std::uniform_int_distribution<long>(0, 20)(rng);
        long idx = std::uniform_int_distribution<long>(0, 10)(rng);
        int rank = std::uniform_int_distribution<int>(0, 3)(rng);
        ExactScalar whole = moment_integral(Integer(k), {rank, Integer(idx)});
        ExactScalar left = moment_integral(Integer(k), {rank + 1, Integer(2 * idx)});
        ExactScalar right = moment_integral(Integer(k), {rank + 1, Integer(2 * idx + 1)});
        CHECK(whole == left + right);
    }
}
