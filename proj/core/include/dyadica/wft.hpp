#pragma once

#include "dyadica/stepfn.hpp"

namespace dyadica {

/// Walsh-Fourier transform of a step function, fhat(y) = integral of
/// psi(x,y) f(x) dx.  Fast path: Hadamard butterfly plus a bit-reversal
/// permutation, O(N log N) exact scalar additions; bit-exact-equal to
/// wft_direct.  Output swaps (rank, support_exp) with the input.
StepFunction wft(const StepFunction& f);

/// Same contract via explicit O(N^2) kernel summation; the oracle for wft.
StepFunction wft_direct(const StepFunction& f);

/// fhat at a single point y, by kernel summation.
ExactScalar wft_eval(const StepFunction& f, const DyadicRational& y);

/// Exact integral of x * w_k(x) over a dyadic interval, by refining the
/// interval to atoms on which w_k is constant.
ExactScalar moment_integral(const Integer& k, const DyadicInterval& interval);

}  // namespace dyadica
