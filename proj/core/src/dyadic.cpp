#include "dyadica/dyadic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace dyadica {

using boost::multiprecision::bit_test;
using boost::multiprecision::denominator;
using boost::multiprecision::lsb;
using boost::multiprecision::msb;
using boost::multiprecision::numerator;

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

std::string to_string(const ExactScalar& s) {
    if (s.im == 0) return to_string(s.re);
    return to_string(s.re) + (s.im > 0 ? "+" : "") + to_string(s.im) + "i";
}

void DyadicRational::canonicalize() {
    if (num_ == 0) {
        scale_ = 0;
        return;
    }
    unsigned tz = lsb(num_);
    unsigned drop = std::min<unsigned>(tz, scale_);
    if (drop > 0) {
        num_ >>= drop;
        scale_ -= drop;
    }
}

DyadicRational DyadicRational::from_parts(Integer num, unsigned scale) {
    DyadicRational x;
    x.num_ = std::move(num);
    x.scale_ = scale;
    x.require_nonneg();
    x.canonicalize();
    return x;
}

int DyadicRational::bit(long i) const {
    if (num_ == 0) return 0;
    long pos = i + static_cast<long>(scale_);
    if (pos < 0) return 0;
    if (pos > static_cast<long>(msb(num_))) return 0;
    return bit_test(num_, static_cast<unsigned>(pos)) ? 1 : 0;
}

DyadicRational DyadicRational::frac() const {
    Integer rest = num_ - (floor() << scale_);
    return from_parts(std::move(rest), scale_);
}

DyadicRational DyadicRational::scale_by_pow2(int e) const {
    if (num_ == 0 || e == 0) return *this;
    if (e > 0) {
        unsigned ue = static_cast<unsigned>(e);
        if (scale_ >= ue) return from_parts(num_, scale_ - ue);
        return from_parts(num_ << (ue - scale_), 0);
    }
    return from_parts(num_, scale_ + static_cast<unsigned>(-e));
}

Rational DyadicRational::to_rational() const {
    Integer den = Integer(1) << scale_;
    return Rational(num_, den);
}

std::string DyadicRational::to_fraction_string() const {
    if (scale_ == 0) return num_.str();
    return num_.str() + "/2^" + std::to_string(scale_);
}

std::string DyadicRational::to_binary_string() const {
    if (num_ == 0) return "0b";
    std::string digits;
    long top = static_cast<long>(msb(num_));
    long int_bits = top - static_cast<long>(scale_);  // highest exponent
    for (long i = std::max<long>(int_bits, 0); i >= -static_cast<long>(scale_); --i) {
        if (i == -1) digits += '.';
        digits += static_cast<char>('0' + bit(i));
    }
    digits += 'b';
    return digits;
}

DyadicRational DyadicRational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty dyadic literal");
    if (text.back() == 'b') {
        std::string_view body = text.substr(0, text.size() - 1);
        Integer num = 0;
        unsigned scale = 0;
        bool after_point = false;
        bool any = false;
        for (char c : body) {
            if (c == '.') {
                if (after_point) throw std::invalid_argument("two points in binary literal");
                after_point = true;
                continue;
            }
            if (c != '0' && c != '1')
                throw std::invalid_argument("bad digit in binary literal");
            num = (num << 1) | (c == '1' ? 1 : 0);
            if (after_point) ++scale;
            any = true;
        }
        if (!any) throw std::invalid_argument("empty binary literal");
        return from_parts(std::move(num), scale);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        try {
            return DyadicRational(Integer(std::string(text)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
        }
    }
    std::string_view p = text.substr(0, slash);
    std::string_view rest = text.substr(slash + 1);
    if (rest.size() < 3 || rest[0] != '2' || rest[1] != '^')
        throw std::invalid_argument("expected p/2^s form");
    try {
        Integer num{std::string(p)};
        unsigned long s = std::stoul(std::string(rest.substr(2)));
        return from_parts(std::move(num), static_cast<unsigned>(s));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad p/2^s literal '" + std::string(text) + "'");
    }
}

bool operator<(const DyadicRational& a, const DyadicRational& b) {
    unsigned s = std::max(a.scale_, b.scale_);
    return (a.num_ << (s - a.scale_)) < (b.num_ << (s - b.scale_));
}

DyadicRational dyadic_add(const DyadicRational& x, const DyadicRational& y) {
    unsigned s = std::max(x.scale(), y.scale());
    Integer a = x.numerator() << (s - x.scale());
    Integer b = y.numerator() << (s - y.scale());
    return DyadicRational::from_parts(a ^ b, s);
}

unsigned long pairing(const Integer& k, const DyadicRational& x) {
    if (k == 0 || x.is_zero()) return 0;
    unsigned long sum = 0;
    unsigned top = msb(k);
    for (unsigned pos = static_cast<unsigned>(lsb(k)); pos <= top; ++pos)
        if (bit_test(k, pos)) sum += static_cast<unsigned long>(x.bit(-1 - static_cast<long>(pos)));
    return sum;
}

unsigned long pairing(const DyadicRational& y, const DyadicRational& x) {
    if (y.is_zero() || x.is_zero()) return 0;
    unsigned long sum = 0;
    const Integer& n = y.numerator();
    long sy = static_cast<long>(y.scale());
    unsigned top = msb(n);
    for (unsigned pos = static_cast<unsigned>(lsb(n)); pos <= top; ++pos) {
        if (!bit_test(n, pos)) continue;
        long k = static_cast<long>(pos) - sy;  // digit position in y
        sum += static_cast<unsigned long>(x.bit(-1 - k));
    }
    return sum;
}

int walsh(const Integer& k, const DyadicRational& x) {
    return (pairing(k, x) & 1) ? -1 : 1;
}

int psi(const DyadicRational& x, const DyadicRational& y) {
    return walsh(y.floor(), x) * walsh(x.floor(), y);
}

unsigned bit_length(const Integer& k) {
    if (k < 0) throw std::domain_error("bit_length: negative argument");
    if (k == 0) return 0;
    return static_cast<unsigned>(msb(k)) + 1;
}

}  // namespace dyadica
