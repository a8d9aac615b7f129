#include "dyadica/stepfn.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dyadica {

namespace {

// Resource guard: 2^26 exact scalars is already ~gigabytes.
constexpr int kMaxLogSize = 26;

std::size_t checked_size(int rank, int support_exp) {
    long total = static_cast<long>(rank) + support_exp;
    if (total < 0)
        throw std::invalid_argument("StepFunction: support_exp + rank must be >= 0");
    if (total > kMaxLogSize)
        throw std::length_error("StepFunction: 2^(support_exp + rank) too large");
    return std::size_t{1} << total;
}

Rational pow2(int e) {
    if (e >= 0) return Rational(Integer(1) << e);
    return Rational(1, Integer(1) << -e);
}

// Common representation: rank = max of ranks, support_exp = max of supports.
std::pair<StepFunction, StepFunction> align(const StepFunction& f, const StepFunction& g) {
    int j = std::max(f.rank(), g.rank());
    int m = std::max(f.support_exp(), g.support_exp());
    return {f.refine_rank(j).with_support_exp(m), g.refine_rank(j).with_support_exp(m)};
}

}  // namespace

StepFunction::StepFunction(int rank, int support_exp, std::vector<ExactScalar> values)
    : rank_(rank), support_exp_(support_exp), values_(std::move(values)) {
    if (values_.size() != checked_size(rank, support_exp))
        throw std::invalid_argument("StepFunction: values length must be 2^(support_exp + rank)");
}

StepFunction StepFunction::zero(int rank, int support_exp) {
    return StepFunction(rank, support_exp,
                        std::vector<ExactScalar>(checked_size(rank, support_exp)));
}

StepFunction StepFunction::indicator(const DyadicInterval& atom) {
    if (atom.index < 0) throw std::domain_error("indicator: negative index");
    int m = std::max(static_cast<int>(bit_length(atom.index)) - atom.rank, -atom.rank);
    std::vector<ExactScalar> v(checked_size(atom.rank, m));
    v[static_cast<std::size_t>(atom.index)] = ExactScalar::one();
    return StepFunction(atom.rank, m, std::move(v));
}

ExactScalar StepFunction::eval(const DyadicRational& x) const {
    Integer idx = x.scale_by_pow2(rank_).floor();
    if (idx >= Integer(values_.size())) return ExactScalar::zero();
    return values_[static_cast<std::size_t>(idx)];
}

bool StepFunction::is_identically_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const ExactScalar& v) { return v.is_zero(); });
}

StepFunction StepFunction::refine_rank(int j2) const {
    if (j2 < rank_) throw std::invalid_argument("refine_rank: target rank is coarser");
    if (j2 == rank_) return *this;
    std::size_t rep = checked_size(j2 - rank_, 0);
    std::vector<ExactScalar> v;
    v.reserve(values_.size() * rep);
    for (const auto& val : values_)
        for (std::size_t i = 0; i < rep; ++i) v.push_back(val);
    return StepFunction(j2, support_exp_, std::move(v));
}

StepFunction StepFunction::with_support_exp(int m2) const {
    if (m2 < support_exp_)
        throw std::invalid_argument("with_support_exp: window would truncate");
    if (m2 == support_exp_) return *this;
    std::vector<ExactScalar> v = values_;
    v.resize(checked_size(rank_, m2));
    return StepFunction(rank_, m2, std::move(v));
}

StepFunction StepFunction::restrict_support(int m2) const {
    if (m2 >= support_exp_) return with_support_exp(m2);
    std::vector<ExactScalar> v(values_.begin(),
                               values_.begin() + static_cast<long>(checked_size(rank_, m2)));
    return StepFunction(rank_, m2, std::move(v));
}

StepFunction linear_combine(const ExactScalar& a, const StepFunction& f,
                            const ExactScalar& b, const StepFunction& g) {
    auto [fa, ga] = align(f, g);
    std::vector<ExactScalar> v(fa.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a * fa.values()[i] + b * ga.values()[i];
    return StepFunction(fa.rank(), fa.support_exp(), std::move(v));
}

StepFunction dyadic_translate(const StepFunction& f, const DyadicRational& h) {
    // Bits of h below the atom size permute points within rank-j atoms and
    // leave the function unchanged, so only floor(h * 2^j) shifts indices.
    const int j = f.rank();
    Integer shift = h.scale_by_pow2(j).floor();
    if (shift == 0) return f;
    int m = std::max(f.support_exp(), static_cast<int>(bit_length(shift)) - j);
    StepFunction base = f.with_support_exp(m);
    std::size_t n = base.size();
    std::size_t s = static_cast<std::size_t>(shift);
    std::vector<ExactScalar> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = base.values()[k ^ s];
    return StepFunction(j, m, std::move(v));
}

StepFunction dilate(const StepFunction& f, Dilation direction) {
    if (direction == Dilation::contract)
        return StepFunction(f.rank() + 1, f.support_exp() - 1, f.values());
    return StepFunction(f.rank() - 1, f.support_exp() + 1, f.values());
}

ExactScalar integrate(const StepFunction& f) {
    ExactScalar sum;
    for (const auto& v : f.values()) sum += v;
    return sum * ExactScalar(pow2(-f.rank()));
}

ExactScalar inner(const StepFunction& f, const StepFunction& g) {
    auto [fa, ga] = align(f, g);
    ExactScalar sum;
    for (std::size_t i = 0; i < fa.size(); ++i)
        sum += fa.values()[i] * ga.values()[i].conj();
    return sum * ExactScalar(pow2(-fa.rank()));
}

StepFunction pointwise_mul(const StepFunction& f, const StepFunction& g) {
    auto [fa, ga] = align(f, g);
    std::vector<ExactScalar> v(fa.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fa.values()[i] * ga.values()[i];
    return StepFunction(fa.rank(), fa.support_exp(), std::move(v));
}

bool operator==(const StepFunction& f, const StepFunction& g) {
    auto [fa, ga] = align(f, g);
    return fa.values() == ga.values();
}

}  // namespace dyadica
