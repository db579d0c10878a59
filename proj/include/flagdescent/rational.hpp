#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "flagdescent/error.hpp"

namespace fd {

using Rational = mpq_class;
using Integer = mpz_class;

// An element a + b*sqrt(-1) of Q(sqrt(-1)), with exact rational components.
// mpq_class keeps fractions in lowest terms with positive denominator, so the
// representation is canonical and equality is componentwise.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re_num, long re_den, long im_num, long im_den);

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // z * conj(z); always a rational >= 0, zero only at z = 0.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const;
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational inverse() const;
    GaussianRational pow(long n) const;

    // Textual form "a/b+c/d*i" (unit denominators elided), parsed back by parse().
    std::string str() const;
    static GaussianRational parse(const std::string& text);

private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

struct ScalarClass {
    bool in_dyadic_gaussian = false;           // both components have 2-power denominators
    bool is_unit_of_dyadic_gaussian = false;   // z = ±2^k or ±sqrt(-1)*2^k
    bool in_dyadic_rational = false;           // real with 2-power denominator
};

ScalarClass classify_scalar(const GaussianRational& z);

// True unit test for Z[1/2,sqrt(-1)]: z lies in the ring and its norm is a
// power of two (this also admits units such as 1+sqrt(-1)).
bool is_dyadic_gaussian_unit(const GaussianRational& z);

// Is q (in lowest terms) of the form ±2^k?
bool is_power_of_two_times_sign(const Rational& q);

} // namespace fd
