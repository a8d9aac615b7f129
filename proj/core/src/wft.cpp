#include "dyadica/wft.hpp"

#include <utility>
#include <vector>

namespace dyadica {

namespace {

Rational pow2(int e) {
    if (e >= 0) return Rational(Integer(1) << e);
    return Rational(1, Integer(1) << -e);
}

std::size_t bit_reverse(std::size_t p, unsigned bits) {
    std::size_t r = 0;
    for (unsigned i = 0; i < bits; ++i) {
        r = (r << 1) | (p & 1);
        p >>= 1;
    }
    return r;
}

}  // namespace

StepFunction wft(const StepFunction& f) {
    const unsigned bits = static_cast<unsigned>(f.rank() + f.support_exp());
    const std::size_t n = f.size();
    std::vector<ExactScalar> v = f.values();
    // In-place Hadamard butterfly in natural index order.
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t block = 0; block < n; block += len << 1) {
            for (std::size_t i = block; i < block + len; ++i) {
                ExactScalar a = v[i];
                ExactScalar b = v[i + len];
                v[i] = a + b;
                v[i + len] = a - b;
            }
        }
    }
    // The kernel exponent is <bitrev(p), q> over the m+n index bits, so the
    // output is the natural-order transform read at the reversed index.
    const ExactScalar scale{pow2(-f.rank())};
    std::vector<ExactScalar> out(n);
    for (std::size_t p = 0; p < n; ++p) out[p] = v[bit_reverse(p, bits)] * scale;
    return StepFunction(f.support_exp(), f.rank(), std::move(out));
}

ExactScalar wft_eval(const StepFunction& f, const DyadicRational& y) {
    const int n = f.rank();
    const Integer y_floor = y.floor();
    ExactScalar sum;
    for (std::size_t q = 0; q < f.size(); ++q) {
        if (f.values()[q].is_zero()) continue;
        DyadicRational x = DyadicRational(Integer(q)).scale_by_pow2(-n);
        int sign = walsh(y_floor, x) * walsh(x.floor(), y);
        if (sign > 0)
            sum += f.values()[q];
        else
            sum -= f.values()[q];
    }
    return sum * ExactScalar(pow2(-n));
}

StepFunction wft_direct(const StepFunction& f) {
    const int n = f.rank();
    const int m = f.support_exp();
    const std::size_t size = f.size();
    std::vector<DyadicRational> xs(size);
    std::vector<Integer> x_floor(size);
    for (std::size_t q = 0; q < size; ++q) {
        xs[q] = DyadicRational(Integer(q)).scale_by_pow2(-n);
        x_floor[q] = xs[q].floor();
    }
    const ExactScalar scale{pow2(-n)};
    std::vector<ExactScalar> out(size);
    for (std::size_t p = 0; p < size; ++p) {
        DyadicRational y = DyadicRational(Integer(p)).scale_by_pow2(-m);
        Integer y_floor = y.floor();
        ExactScalar sum;
        for (std::size_t q = 0; q < size; ++q) {
            if (f.values()[q].is_zero()) continue;
            int sign = walsh(y_floor, xs[q]) * walsh(x_floor[q], y);
            if (sign > 0)
                sum += f.values()[q];
            else
                sum -= f.values()[q];
        }
        out[p] = sum * scale;
    }
    return StepFunction(m, n, std::move(out));
}

ExactScalar moment_integral(const Integer& k, const DyadicInterval& interval) {
    if (interval.index < 0) throw std::domain_error("moment_integral: negative interval");
    const int r = static_cast<int>(bit_length(k));
    const int refined = std::max(r, interval.rank);
    const Integer first = interval.index << (refined - interval.rank);
    const Integer count = Integer(1) << (refined - interval.rank);
    // On each rank-`refined` atom w_k is constant and the moment of x is
    // (2q+1) * 2^-(2*refined+1).
    Integer acc = 0;
    for (Integer q = first; q < first + count; ++q) {
        DyadicRational left = DyadicRational(q).scale_by_pow2(-refined);
        Integer weight = 2 * q + 1;
        if (walsh(k, left) > 0)
            acc += weight;
        else
            acc -= weight;
    }
    return ExactScalar(Rational(acc) * pow2(-(2 * refined + 1)));
}

}  // namespace dyadica
