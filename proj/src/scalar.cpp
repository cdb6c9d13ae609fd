#include "bihom/scalar.hpp"

#include "bihom/error.hpp"

#include <cctype>
#include <ostream>

namespace bihom {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Integer square root of a non-negative integer, if exact.
std::optional<mpz_class> exact_isqrt(const mpz_class& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// Square root of the Gaussian integer x + yi inside Z[i].
std::optional<std::pair<mpz_class, mpz_class>> gaussian_isqrt(const mpz_class& x, const mpz_class& y) {
    auto n = exact_isqrt(x * x + y * y);
    if (!n) return std::nullopt;
    mpz_class twice_u2 = x + *n;
    if (twice_u2 % 2 != 0) return std::nullopt;
    auto u = exact_isqrt(twice_u2 / 2);
    if (!u) return std::nullopt;
    mpz_class v;
    if (sgn(*u) != 0) {
        if (y % (2 * *u) != 0) return std::nullopt;
        v = y / (2 * *u);
    } else {
        auto w = exact_isqrt(-x);
        if (!w) return std::nullopt;
        v = *w;
    }
    if (*u * *u - v * v != x || 2 * *u * v != y) return std::nullopt;
    return std::pair{*u, v};
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Rational q;
    q.get_num() = mpz_class(std::string(num));
    q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

// scalar := rat | rat sign rat "i" | rat "i"
Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return Scalar(parse_rational(text));
    std::string_view body = text.substr(0, text.size() - 1);
    // The sign separating the parts is the last '+'/'-' that is not leading.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    if (split == std::string_view::npos) return Scalar(0, parse_rational(body));
    Rational re = parse_rational(body.substr(0, split));
    std::string_view im = body.substr(split + 1);
    if (im.empty() || im.front() == '-' || im.front() == '+')
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    Rational imq = parse_rational(im);
    return Scalar(re, body[split] == '-' ? Rational(-imq) : imq);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::optional<Scalar> Scalar::sqrt() const {
    if (is_zero()) return Scalar{};
    // Write the value as g / d^2 with g a Gaussian integer.
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
    Rational d2 = Rational(d * d);
    Rational gx = re_ * d2, gy = im_ * d2;
    auto root = gaussian_isqrt(gx.get_num(), gy.get_num());
    if (!root) return std::nullopt;
    return Scalar(Rational(root->first) / Rational(d), Rational(root->second) / Rational(d));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
}

std::string Scalar::str() const {
    if (is_real()) return to_string(re_);
    std::string im_abs = to_string(abs(im_));
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_abs + "i";
    return to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_abs + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace bihom
