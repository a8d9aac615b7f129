#include "dyadica/theorem1.hpp"

#include "dyadica/dyadic.hpp"
#include "dyadica/wft.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace dyadica {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

// Integral of x * psi(x, y) over [0,1), evaluated from the full kernel
// definition (both Walsh factors), by refinement to atoms of constancy.
ExactScalar kernel_moment(const DyadicRational& y) {
    Integer y_floor = y.floor();
    int rank = static_cast<int>(bit_length(y_floor));
    Integer count = Integer(1) << rank;
    Integer acc = 0;
    for (Integer q = 0; q < count; ++q) {
        DyadicRational x = DyadicRational(q).scale_by_pow2(-rank);
        int sign = walsh(y_floor, x) * walsh(x.floor(), y);
        Integer weight = 2 * q + 1;
        acc += sign > 0 ? weight : -weight;
    }
    return ExactScalar(Rational(acc, Integer(1) << (2 * rank + 1)));
}

// Shared denominator D = 2^(N+3) * lcm(1..N+1): every partial-sum term
// times D is an integer.
struct SumContext {
    unsigned limit;
    Integer denom;

    explicit SumContext(unsigned N) : limit(N) {
        Integer l = 1;
        for (unsigned k = 2; k <= N + 1; ++k) {
            Integer kk(k);
            l *= kk / gcd(l % kk, kk);
        }
        denom = l << (N + 3);
    }

    // term_n * D = D/(4(n+1)) + (D >> (n+3))/(n+1), both divisions exact.
    Integer scaled_term(unsigned n) const {
        Integer np1(n + 1);
        return denom / (4 * np1) + (denom >> (n + 3)) / np1;
    }

    Integer scaled_sum(unsigned N) const {
        Integer acc = 0;
        for (unsigned n = 1; n <= N; ++n) acc += scaled_term(n);
        return acc;
    }

    // D * 1/4 (H_{N+1} - 1) = sum_{k=2..N+1} D/(4k).
    Integer scaled_harmonic_bound(unsigned N) const {
        Integer acc = 0;
        for (unsigned k = 2; k <= N + 1; ++k) acc += denom / (4 * Integer(k));
        return acc;
    }
};

}  // namespace

ExactScalar fhat_on_block(unsigned n) {
    ExactScalar value = moment_integral(Integer(1) << n, DyadicInterval{0, 0});
    // Constancy on [2^n, 2^n+1): the defining integral at two distinct y
    // in the block must agree with the moment value.
    DyadicRational y1 = DyadicRational(Integer(1) << n);
    DyadicRational y2 = dyadic_add(y1, DyadicRational::from_parts(1, 1));
    if (kernel_moment(y1) != value || kernel_moment(y2) != value)
        throw std::logic_error("fhat_on_block: value not constant on the block");
    return value;
}

ExactScalar pairing_partial_sum(unsigned N) {
    if (N < 1) throw std::invalid_argument("pairing_partial_sum: N >= 1 required");
    SumContext ctx(N);
    return ExactScalar(Rational(ctx.scaled_sum(N), ctx.denom));
}

bool partial_sum_lower_bound_holds(unsigned N) {
    // Termwise: 1/(n+1) * 2^-(n+2) * (2^n + 1/2) >= 1/(4(n+1)), i.e.
    // 4 * (2^(n+1) + 1) >= 2^(n+3).  Checked exactly for every n, which
    // makes the bound hold for every partial sum up to N.
    for (unsigned n = 1; n <= N; ++n) {
        Integer lhs = (Integer(1) << (n + 1)) + 1;
        if (4 * lhs < (Integer(1) << (n + 3))) return false;
    }
    // Endpoint cross-check on the full sums over a shared denominator.
    SumContext ctx(N);
    return ctx.scaled_sum(N) >= ctx.scaled_harmonic_bound(N);
}

unsigned divergence_witness(const Rational& bound) {
    Integer p = numerator(bound);
    Integer q = denominator(bound);
    for (unsigned N = 1;; N *= 2) {
        SumContext ctx(N);
        // S_N > bound  <=>  q * (D * S_N) > p * D.
        if (q * ctx.scaled_sum(N) > p * ctx.denom) return N;
        if (N > (1u << 24)) throw std::runtime_error("divergence_witness: bound too large");
    }
}

bool Theorem1Report::printed_value_deviates() const {
    for (const auto& [n, v] : fhat_values) {
        auto it = printed_values.find(n);
        if (it == printed_values.end() || v == it->second) return false;
    }
    return !fhat_values.empty();
}

Theorem1Report theorem1_report(unsigned n_max, unsigned N_max) {
    if (n_max < 1 || N_max < 1)
        throw std::invalid_argument("theorem1_report: n_max, N_max >= 1 required");
    Theorem1Report report;
    report.n_min = 0;  // n = 0 reported alongside the audited range n >= 1
    report.n_max = n_max;
    for (unsigned n = 0; n <= n_max; ++n) {
        report.fhat_values[n] = fhat_on_block(n);
        report.printed_values[n] = ExactScalar(-Rational(1, Integer(1) << (n + 1)));
    }
    SumContext ctx(N_max);
    Integer acc = 0;
    for (unsigned N = 1; N <= N_max; ++N) {
        acc += ctx.scaled_term(N);
        report.partial_sums[N] = ExactScalar(Rational(acc, ctx.denom));
    }
    return report;
}

}  // namespace dyadica
