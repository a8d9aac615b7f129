#pragma once

#include "dyadica/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyadica {

/// A non-negative number with a terminating binary expansion,
/// value = numerator * 2^(-scale).  Canonical form: scale == 0 or the
/// numerator is odd; zero is (0, 0).  These are the domain points of
/// every function in the library.
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(const Integer& n) : num_(n) { require_nonneg(); }
    DyadicRational(long n) : num_(n) { require_nonneg(); }
    DyadicRational(int n) : num_(n) { require_nonneg(); }

    /// value = num * 2^(-scale); canonicalizes.
    static DyadicRational from_parts(Integer num, unsigned scale);

    const Integer& numerator() const { return num_; }
    unsigned scale() const { return scale_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return scale_ == 0; }

    /// Digit x_i in x = sum x_i 2^i; zero outside the finite expansion.
    int bit(long i) const;

    /// Integer part [x].
    Integer floor() const { return num_ >> scale_; }
    /// Fractional part, x - [x].
    DyadicRational frac() const;

    /// x * 2^e (e may be negative).
    DyadicRational scale_by_pow2(int e) const;

    Rational to_rational() const;
    double to_double() const { return static_cast<double>(to_rational()); }

    /// Emits "p/2^s" ("p" when integral).
    std::string to_fraction_string() const;
    /// Emits a binary literal such as "10.011b".
    std::string to_binary_string() const;

    /// Parses "p/2^s", a binary literal "10.011b", or a plain integer.
    static DyadicRational parse(std::string_view text);

    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.scale_ == b.scale_ && a.num_ == b.num_;
    }
    friend bool operator!=(const DyadicRational& a, const DyadicRational& b) { return !(a == b); }
    friend bool operator<(const DyadicRational& a, const DyadicRational& b);

private:
    void canonicalize();
    void require_nonneg() const {
        if (num_ < 0) throw std::domain_error("DyadicRational: negative value");
    }

    Integer num_ = 0;
    unsigned scale_ = 0;
};

/// The dyadic interval Delta_{j,k} = [2^{-j} k, 2^{-j}(k+1)).
struct DyadicInterval {
    int rank = 0;
    Integer index = 0;

    DyadicRational left() const { return DyadicRational(index).scale_by_pow2(-rank); }
};

/// Digitwise mod-2 addition: align to a common scale and XOR numerators.
/// Each element is its own inverse.
DyadicRational dyadic_add(const DyadicRational& x, const DyadicRational& y);

/// (y, x) = sum_k y_k x_{-1-k}; always a finite sum.
unsigned long pairing(const DyadicRational& y, const DyadicRational& x);

/// Pairing against an integer first argument, (k, x) = sum of fractional
/// digits of x selected by the bits of k.
unsigned long pairing(const Integer& k, const DyadicRational& x);

/// Walsh function w_k(x) = (-1)^{(k,x)}; period 1 in x.
int walsh(const Integer& k, const DyadicRational& x);

/// Generalized Walsh kernel psi(x, y) = w_{[y]}(x) * w_{[x]}(y); symmetric.
int psi(const DyadicRational& x, const DyadicRational& y);

/// Smallest r with k < 2^r (0 for k = 0).
unsigned bit_length(const Integer& k);

}  // namespace dyadica
