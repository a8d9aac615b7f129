#include "dyadica/refine.hpp"

#include "dyadica/wft.hpp"

#include <utility>

namespace dyadica {

MaskSumError::MaskSumError(ExactScalar sum)
    : std::runtime_error("mask coefficients must sum to 2, got " + to_string(sum)),
      sum_(std::move(sum)) {}

Mask::Mask(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("mask needs at least one coefficient");
    ExactScalar sum;
    for (const auto& c : coeffs_) sum += c;
    if (sum != ExactScalar(2)) throw MaskSumError(sum);
    resolution_ = bit_length(Integer(coeffs_.size() - 1));
    const std::size_t atoms = std::size_t{1} << resolution_;
    const ExactScalar half{Rational(1, 2)};
    table_.resize(atoms);
    for (std::size_t q = 0; q < atoms; ++q) {
        DyadicRational y =
            DyadicRational(Integer(q)).scale_by_pow2(-static_cast<int>(resolution_));
        ExactScalar acc;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (walsh(Integer(k), y) > 0)
                acc += coeffs_[k];
            else
                acc -= coeffs_[k];
        }
        table_[q] = half * acc;
    }
}

std::vector<ExactScalar> Mask::normalize(const std::vector<ExactScalar>& coeffs) {
    ExactScalar sum;
    for (const auto& c : coeffs) sum += c;
    if (sum.is_zero()) throw ZeroSumError();
    ExactScalar factor = ExactScalar(2) / sum;
    std::vector<ExactScalar> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c * factor);
    return out;
}

ExactScalar Mask::eval(const DyadicRational& y) const {
    DyadicRational fr = y.frac();
    Integer q = fr.scale_by_pow2(static_cast<int>(resolution_)).floor();
    return table_[static_cast<std::size_t>(q)];
}

bool Mask::has_nonnegative_real_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_real() || c.re < 0) return false;
    return true;
}

StepFunction transition(const Mask& m, const StepFunction& f) {
    StepFunction acc = StepFunction::zero(f.rank() + 1, std::max(f.support_exp(), 0));
    for (std::size_t k = 0; k < m.coeffs().size(); ++k) {
        const ExactScalar& c = m.coeffs()[k];
        if (c.is_zero()) continue;
        StepFunction term = dilate(dyadic_translate(f, DyadicRational(Integer(k))),
                                   Dilation::contract);
        acc = linear_combine(ExactScalar::one(), acc, c, term);
    }
    return acc;
}

StepFunction transition_adjoint(const Mask& m, const StepFunction& g) {
    StepFunction expanded = dilate(g, Dilation::expand);
    StepFunction acc = StepFunction::zero(expanded.rank(), std::max(expanded.support_exp(), 0));
    const ExactScalar half{Rational(1, 2)};
    for (std::size_t k = 0; k < m.coeffs().size(); ++k) {
        const ExactScalar& c = m.coeffs()[k];
        if (c.is_zero()) continue;
        StepFunction term = dyadic_translate(expanded, DyadicRational(Integer(k)));
        acc = linear_combine(ExactScalar::one(), acc, half * c.conj(), term);
    }
    return acc;
}

std::vector<StepFunction> cascade(const Mask& m, const StepFunction& f0, unsigned kmax) {
    std::vector<StepFunction> iterates;
    iterates.reserve(kmax);
    StepFunction current = f0;
    for (unsigned k = 0; k < kmax; ++k) {
        current = transition(m, current);
        iterates.push_back(current);
    }
    return iterates;
}

StepFunction wft_iterate_identity(const Mask& m, const StepFunction& f, unsigned k) {
    const int window_exp = f.rank() + static_cast<int>(k);
    int rank = std::max({f.support_exp(), static_cast<int>(m.resolution()), -window_exp});
    StepFunction fhat = wft(f);
    const std::size_t size = std::size_t{1} << (rank + window_exp);
    std::vector<ExactScalar> out(size);
    for (std::size_t p = 0; p < size; ++p) {
        DyadicRational y = DyadicRational(Integer(p)).scale_by_pow2(-rank);
        ExactScalar v = fhat.eval(y.scale_by_pow2(-static_cast<int>(k)));
        for (unsigned j = 1; j <= k && !v.is_zero(); ++j)
            v *= m.eval(y.scale_by_pow2(-static_cast<int>(j)));
        out[p] = v;
    }
    return StepFunction(rank, window_exp, std::move(out));
}

StepFunction phihat_window(const Mask& m, int window_exp) {
    if (window_exp < 0) throw std::invalid_argument("phihat_window: negative window");
    const int r = static_cast<int>(m.resolution());
    const int rank = std::max(r - 1, -window_exp);
    const int depth = window_exp + r - 1;  // factors beyond are 1 on the window
    const std::size_t size = std::size_t{1} << (rank + window_exp);
    std::vector<ExactScalar> out(size);
    for (std::size_t p = 0; p < size; ++p) {
        DyadicRational y = DyadicRational(Integer(p)).scale_by_pow2(-rank);
        ExactScalar v = ExactScalar::one();
        for (int j = 1; j <= depth && !v.is_zero(); ++j)
            v *= m.eval(y.scale_by_pow2(-j));
        out[p] = v;
    }
    return StepFunction(rank, window_exp, std::move(out));
}

StepFunction solve_refinable(const Mask& m, unsigned kmax) {
    StepFunction current = StepFunction::unit_indicator();
    for (unsigned k = 0; k < kmax; ++k) current = transition(m, current);
    return current;
}

StepFunction solve_refinable(const Mask& m, const StepFunction& f0, unsigned kmax) {
    ExactScalar c = integrate(f0);
    if (c.is_zero())
        throw std::invalid_argument("solve_refinable: start function has zero integral");
    StepFunction current = f0;
    for (unsigned k = 0; k < kmax; ++k) current = transition(m, current);
    return linear_combine(ExactScalar::one() / c, current, ExactScalar::zero(), current);
}

bool check_support(const StepFunction& f, int n) {
    long limit_exp = static_cast<long>(n) + f.rank();
    Integer limit = limit_exp >= 0 ? Integer(1) << limit_exp : Integer(0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f.values()[k].is_zero()) continue;
        if (Integer(k) + 1 > limit) return false;
    }
    return true;
}

bool check_nonnegative_cascade(const Mask& m, unsigned kmax) {
    if (!m.has_nonnegative_real_coeffs())
        throw std::invalid_argument(
            "check_nonnegative_cascade: coefficients must be real and non-negative");
    StepFunction current = StepFunction::unit_indicator();
    for (unsigned k = 0; k < kmax; ++k) {
        current = transition(m, current);
        for (const auto& v : current.values())
            if (!v.is_real() || v.re < 0) return false;
    }
    return true;
}

}  // namespace dyadica
