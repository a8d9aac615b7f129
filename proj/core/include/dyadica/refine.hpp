#pragma once

#include "dyadica/stepfn.hpp"

#include <stdexcept>
#include <vector>

namespace dyadica {

/// Thrown by Mask construction when the coefficient sum is not 2.
class MaskSumError : public std::runtime_error {
public:
    explicit MaskSumError(ExactScalar sum);
    const ExactScalar& sum() const { return sum_; }

private:
    ExactScalar sum_;
};

/// Thrown by mask_normalize when the coefficient sum is zero.
class ZeroSumError : public std::runtime_error {
public:
    ZeroSumError() : std::runtime_error("mask coefficients sum to zero") {}
};

/// A Walsh polynomial m(y) = 1/2 sum_k c_k w_k(y), period 1, tabulated on
/// the 2^resolution atoms of [0,1) on which it is constant.  Normalized
/// masks (sum c_k = 2) satisfy m(0) = 1.
class Mask {
public:
    /// Requires sum c_k = 2 exactly; throws MaskSumError otherwise.
    explicit Mask(std::vector<ExactScalar> coeffs);

    /// Scales coefficients by 2 / (sum c_k); throws ZeroSumError.
    static std::vector<ExactScalar> normalize(const std::vector<ExactScalar>& coeffs);

    const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
    /// Top coefficient index K.
    std::size_t top_index() const { return coeffs_.size() - 1; }
    /// r = bit_length(K): m is constant on rank-r atoms.
    unsigned resolution() const { return resolution_; }
    const std::vector<ExactScalar>& table() const { return table_; }

    /// m(y): table lookup on the fractional part of y.
    ExactScalar eval(const DyadicRational& y) const;

    bool has_nonnegative_real_coeffs() const;

private:
    std::vector<ExactScalar> coeffs_;
    unsigned resolution_;
    std::vector<ExactScalar> table_;
};

/// Transition operator Tf(x) = sum_k c_k f(2x (-) k), exact.
StepFunction transition(const Mask& m, const StepFunction& f);

/// Adjoint of T under the inner product: inner(Tf, g) = inner(f, transition_adjoint(m, g)).
/// Lowers rank by one per application, so pairings with deep cascade
/// iterates stay cheap.
StepFunction transition_adjoint(const Mask& m, const StepFunction& g);

/// [T f0, T^2 f0, ..., T^kmax f0], exact.
std::vector<StepFunction> cascade(const Mask& m, const StepFunction& f0, unsigned kmax);

/// fhat(2^{-k} y) * prod_{j=1..k} m(2^{-j} y) as a step function on a window
/// covering supp(wft(T^k f)); equals wft(transition^k(f)) bit-exactly.
StepFunction wft_iterate_identity(const Mask& m, const StepFunction& f, unsigned k);

/// prod_{j=1..J} m(2^{-j} y) on [0, 2^N), J = N + resolution - 1; the
/// remaining factors are identically 1 on the window.
StepFunction phihat_window(const Mask& m, int window_exp);

/// Cascade approximation T^kmax chi_[0,1) to the refinable function, integral 1.
StepFunction solve_refinable(const Mask& m, unsigned kmax);
/// Same from an arbitrary start with nonzero integral; result rescaled to integral 1.
StepFunction solve_refinable(const Mask& m, const StepFunction& f0, unsigned kmax);

/// True iff every nonzero value of f sits on an atom inside [0, 2^n).
bool check_support(const StepFunction& f, int n);

/// Runs the cascade from chi_[0,1) and checks every iterate value is real
/// and >= 0.  Requires all coefficients real and non-negative.
bool check_nonnegative_cascade(const Mask& m, unsigned kmax);

}  // namespace dyadica
