#pragma once

#include "dyadica/exact.hpp"

#include <map>

namespace dyadica {

/// Side-by-side audit of the transform of x*chi_[0,1): the computed block
/// values of its transform against the printed constant -2^-(n+1), plus the
/// exact partial sums of the divergent pairing.
struct Theorem1Report {
    unsigned n_min = 0;
    unsigned n_max = 0;
    std::map<unsigned, ExactScalar> fhat_values;      // n -> value on [2^n, 2^n+1)
    std::map<unsigned, ExactScalar> printed_values;   // n -> -2^-(n+1)
    std::map<unsigned, ExactScalar> partial_sums;     // N -> S_N

    /// True iff the computed value differs from the printed one for every n.
    bool printed_value_deviates() const;
};

/// Exact value of the transform of x*chi_[0,1) on [2^n, 2^n+1); equals
/// the integral of x * w_{2^n}(x) over [0,1).  Closed form: -2^-(n+2).
ExactScalar fhat_on_block(unsigned n);

/// Exact S_N = sum_{n=1..N} 1/(n+1) * |fhat_on_block(n)| * (2^n + 1/2).
ExactScalar pairing_partial_sum(unsigned N);

/// Exact check that S_N >= 1/4 (H_{N+1} - 1), H the harmonic number.
/// Holds termwise, so it holds for every partial sum up to N.
bool partial_sum_lower_bound_holds(unsigned N);

/// Smallest power-of-two-probed N with S_N > bound, verified exactly.
unsigned divergence_witness(const Rational& bound);

Theorem1Report theorem1_report(unsigned n_max, unsigned N_max);

}  // namespace dyadica
