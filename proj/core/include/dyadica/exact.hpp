#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace dyadica {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A complex number with exact rational real and imaginary parts.
/// All arithmetic is exact; no rounding ever occurs.
struct ExactScalar {
    Rational re;
    Rational im;

    ExactScalar() = default;
    ExactScalar(Rational r) : re(std::move(r)) {}
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ExactScalar(int v) : re(v) {}

    static ExactScalar zero() { return ExactScalar{}; }
    static ExactScalar one() { return ExactScalar{1}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ExactScalar conj() const { return {re, -im}; }

    ExactScalar& operator+=(const ExactScalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }

    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        Rational n = b.re * b.re + b.im * b.im;  // |b|^2, zero only for b = 0
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

/// |a|^2 as an exact rational.
inline Rational norm_sq(const ExactScalar& a) { return a.re * a.re + a.im * a.im; }

std::string to_string(const Rational& q);
std::string to_string(const ExactScalar& s);

}  // namespace dyadica
