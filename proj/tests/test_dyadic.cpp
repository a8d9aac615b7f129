#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyadica/dyadic.hpp"

#include <random>

using namespace dyadica;

namespace {

// Independent binary-expansion oracle: digit i of a non-negative rational
// with terminating expansion is floor(v / 2^i) mod 2.
int bit_oracle(const Rational& v, long i) {
    Rational shifted = i >= 0 ? v / Rational(Integer(1) << i) : v * Rational(Integer(1) << -i);
    Integer fl = boost::multiprecision::numerator(shifted) /
                 boost::multiprecision::denominator(shifted);
    return static_cast<int>(fl % 2);
}

DyadicRational dr(long num, unsigned scale = 0) {
    return DyadicRational::from_parts(Integer(num), scale);
}

DyadicRational random_dyadic(std::mt19937_64& rng, unsigned max_bits = 20,
                             unsigned max_scale = 12) {
    std::uniform_int_distribution<std::uint64_t> num(0, (std::uint64_t{1} << max_bits) - 1);
    std::uniform_int_distribution<unsigned> scale(0, max_scale);
    return DyadicRational::from_parts(Integer(num(rng)), scale(rng));
}

// XOR oracle built digit by digit from the expansion oracle.
Rational xor_oracle(const DyadicRational& x, const DyadicRational& y) {
    Rational vx = x.to_rational(), vy = y.to_rational(), out = 0;
    for (long i = -32; i <= 40; ++i) {
        int d = (bit_oracle(vx, i) + bit_oracle(vy, i)) % 2;
        if (d) out += i >= 0 ? Rational(Integer(1) << i) : Rational(1, Integer(1) << -i);
    }
    return out;
}

unsigned long pairing_oracle(const DyadicRational& y, const DyadicRational& x) {
    Rational vy = y.to_rational(), vx = x.to_rational();
    unsigned long sum = 0;
    for (long k = -32; k <= 40; ++k)
        sum += static_cast<unsigned long>(bit_oracle(vy, k) * bit_oracle(vx, -1 - k));
    return sum;
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(dr(4, 2) == dr(1, 0));
    CHECK(dr(6, 1) == dr(3, 0));
    CHECK(dr(0, 7) == dr(0, 0));
    CHECK(dr(5, 1).numerator() == 5);
    CHECK(dr(5, 1).scale() == 1);
}

TEST_CASE("bit digits") {
    DyadicRational zero;
    for (long i = -6; i <= 6; ++i) CHECK(zero.bit(i) == 0);

    DyadicRational five_halves = dr(5, 1);  // 10.1b
    CHECK(five_halves.bit(-1) == 1);
    CHECK(five_halves.bit(0) == 0);
    CHECK(five_halves.bit(1) == 1);
    CHECK(five_halves.bit(2) == 0);
    CHECK(five_halves.bit(-2) == 0);

    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        DyadicRational x = random_dyadic(rng);
        Rational v = x.to_rational();
        for (long i = -14; i <= 22; ++i) CHECK(x.bit(i) == bit_oracle(v, i));
    }
}

TEST_CASE("dyadic_add examples") {
    CHECK(dyadic_add(dr(1), dr(1)) == dr(0));
    CHECK(dyadic_add(dr(3, 1), dr(1)) == dr(1, 1));  // 1.1b XOR 1.0b = 0.1b
    CHECK(dyadic_add(dr(3), dr(5)) == dr(6));
}

TEST_CASE("dyadic_add properties") {
    std::mt19937_64 rng(102);
    for (int t = 0; t < 300; ++t) {
        DyadicRational x = random_dyadic(rng);
        DyadicRational y = random_dyadic(rng);
        DyadicRational z = random_dyadic(rng);
        DyadicRational s = dyadic_add(x, y);
        CHECK(s.to_rational() == xor_oracle(x, y));
        CHECK(s == dyadic_add(y, x));
        CHECK(dyadic_add(dyadic_add(x, y), z) == dyadic_add(x, dyadic_add(y, z)));
        CHECK(dyadic_add(s, y) == x);          // involution in each argument
        CHECK(dyadic_add(x, x).is_zero());
    }
}

TEST_CASE("pairing examples") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 20; ++t) CHECK(pairing(dr(0), random_dyadic(rng)) == 0);
    CHECK(pairing(dr(1), dr(1, 1)) == 1);
    CHECK(pairing(dr(2), dr(1, 2)) == 1);
    for (int t = 0; t < 300; ++t) {
        DyadicRational y = random_dyadic(rng);
        DyadicRational x = random_dyadic(rng);
        CHECK(pairing(y, x) == pairing_oracle(y, x));
    }
}

TEST_CASE("walsh examples") {
    std::mt19937_64 rng(104);
    for (int t = 0; t < 20; ++t) CHECK(walsh(0, random_dyadic(rng)) == 1);
    CHECK(walsh(1, dr(1, 1)) == -1);
    CHECK(walsh(2, dr(1, 2)) == -1);
    CHECK(walsh(2, dr(3, 1)) == 1);
}

TEST_CASE("walsh has period 1") {
    std::mt19937_64 rng(105);
    for (int t = 0; t < 200; ++t) {
        DyadicRational x = random_dyadic(rng);
        Integer k = std::uniform_int_distribution<int>(0, 63)(rng);
        DyadicRational shifted = DyadicRational::from_parts(
            x.frac().numerator() + (x.floor() + 1 << x.frac().scale()), x.frac().scale());
        CHECK(walsh(k, x) == walsh(k, x.frac()));
        CHECK(walsh(k, shifted) == walsh(k, x));
    }
}

TEST_CASE("walsh character property, exhaustive on 1/8 lattice") {
    for (int k = 0; k < 16; ++k) {
        for (int a = 0; a < 32; ++a) {
            for (int b = 0; b < 32; ++b) {
                DyadicRational x = dr(a, 3), h = dr(b, 3);
                CHECK(walsh(k, dyadic_add(x, h)) == walsh(k, x) * walsh(k, h));
            }
        }
    }
}

TEST_CASE("walsh constant on rank-bit_length(k) atoms") {
    for (int k = 1; k <= 16; ++k) {
        unsigned r = bit_length(Integer(k));
        for (int q = 0; q < (1 << r); ++q) {
            int base = walsh(k, dr(q, r));
            for (int t = 1; t < 8; ++t) {
                // q*2^-r + t*2^-(r+3) stays inside the rank-r atom
                DyadicRational point = dr((q << 3) + t, r + 3);
                CHECK(walsh(k, point) == base);
            }
        }
    }
}

TEST_CASE("psi examples and symmetry") {
    std::mt19937_64 rng(106);
    for (int t = 0; t < 20; ++t) CHECK(psi(random_dyadic(rng), dr(0)) == 1);
    CHECK(psi(dr(1, 1), dr(1)) == -1);
    CHECK(psi(dr(3, 1), dr(5, 1)) == -1);
    CHECK(psi(dr(5, 1), dr(3, 1)) == -1);
    for (int t = 0; t < 300; ++t) {
        DyadicRational x = random_dyadic(rng);
        DyadicRational y = random_dyadic(rng);
        CHECK(psi(x, y) == psi(y, x));
    }
}

TEST_CASE("text round trips") {
    CHECK(DyadicRational::parse("5/2^1") == dr(5, 1));
    CHECK(DyadicRational::parse("10.011b") == dr(19, 3));
    CHECK(DyadicRational::parse("7") == dr(7));
    CHECK(dr(5, 1).to_fraction_string() == "5/2^1");
    CHECK(dr(7).to_fraction_string() == "7");
    CHECK(dr(5, 1).to_binary_string() == "10.1b");
    CHECK(dr(0).to_binary_string() == "0b");

    std::mt19937_64 rng(107);
    for (int t = 0; t < 300; ++t) {
        DyadicRational x = random_dyadic(rng);
        CHECK(DyadicRational::parse(x.to_fraction_string()) == x);
        CHECK(DyadicRational::parse(x.to_binary_string()) == x);
    }

    CHECK_THROWS_AS(DyadicRational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(DyadicRational::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(DyadicRational::parse("10.0.1b"), std::invalid_argument);
    CHECK_THROWS_AS(DyadicRational::parse("abc"), std::invalid_argument);
}

TEST_CASE("floor, frac, scaling") {
    DyadicRational x = dr(19, 3);  // 10.011b
    CHECK(x.floor() == 2);
    CHECK(x.frac() == dr(3, 3));
    CHECK(x.scale_by_pow2(3) == dr(19));
    CHECK(x.scale_by_pow2(-2) == dr(19, 5));
    CHECK(x.scale_by_pow2(1).scale_by_pow2(-1) == x);
}
