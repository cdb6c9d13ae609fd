#pragma once

// Exact scalars over the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace bihom {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 == 0/1)
// after every arithmetic operation.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT: integers convert implicitly
    Scalar(Rational re, Rational im = 0);

    static Scalar i() { return {0, 1}; }
    static Scalar parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    // Square root inside Q(i), if one exists.
    std::optional<Scalar> sqrt() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return {-re_, -im_}; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order (re, then im); only for canonical sorting.
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bihom
