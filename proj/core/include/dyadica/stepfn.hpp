#pragma once

#include "dyadica/dyadic.hpp"
#include "dyadica/exact.hpp"

#include <vector>

namespace dyadica {

enum class Dilation { contract, expand };

/// A dyadic step function: constant on every Delta_{rank,k}, supported in
/// [0, 2^support_exp), with 2^(support_exp + rank) exact values.  Entry k
/// is the value on Delta_{rank,k}.  Immutable.
class StepFunction {
public:
    /// Requires support_exp + rank >= 0 and values.size() == 2^(support_exp+rank).
    StepFunction(int rank, int support_exp, std::vector<ExactScalar> values);

    static StepFunction zero(int rank = 0, int support_exp = 0);
    /// Indicator of Delta_{rank,index}.
    static StepFunction indicator(const DyadicInterval& atom);
    /// chi_[0,1).
    static StepFunction unit_indicator() { return indicator({0, 0}); }

    int rank() const { return rank_; }
    int support_exp() const { return support_exp_; }
    const std::vector<ExactScalar>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    ExactScalar eval(const DyadicRational& x) const;
    bool is_identically_zero() const;

    /// Same function represented at the finer rank j2 >= rank().
    StepFunction refine_rank(int j2) const;
    /// Same function with support window enlarged to [0, 2^m2), m2 >= support_exp().
    StepFunction with_support_exp(int m2) const;
    /// Restriction to [0, 2^m2): values beyond the window are dropped.
    StepFunction restrict_support(int m2) const;

private:
    int rank_;
    int support_exp_;
    std::vector<ExactScalar> values_;
};

/// a*f + b*g, exact, at the common refinement.
StepFunction linear_combine(const ExactScalar& a, const StepFunction& f,
                            const ExactScalar& b, const StepFunction& g);

/// g(x) = f(x (+) h), a pure index permutation at a sufficient rank.
StepFunction dyadic_translate(const StepFunction& f, const DyadicRational& h);

/// contract: x -> f(2x); expand: x -> f(x/2).  Mutually inverse.
StepFunction dilate(const StepFunction& f, Dilation direction);

/// Exact integral over the half-line.
ExactScalar integrate(const StepFunction& f);

/// Exact inner product: integral of f * conj(g); the distribution pairing.
ExactScalar inner(const StepFunction& f, const StepFunction& g);

/// Exact pointwise product at the common refinement.
StepFunction pointwise_mul(const StepFunction& f, const StepFunction& g);

/// Pointwise equality (both sides are brought to a common representation).
bool operator==(const StepFunction& f, const StepFunction& g);
inline bool operator!=(const StepFunction& f, const StepFunction& g) { return !(f == g); }

}  // namespace dyadica
