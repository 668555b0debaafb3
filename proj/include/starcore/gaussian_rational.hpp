#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "starcore/rational.hpp"

namespace starcore {

// Exact complex number re + im*i with rational parts. Conjugation is the
// involution every matrix-level star() is built on.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    // |z|^2, always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational inv() const {
        if (is_zero()) throw DivisionByZero();
        if (is_real()) return {1 / re_, Rational(0)};
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussianRational add(const GaussianRational& x, const GaussianRational& y) { return x + y; }
inline GaussianRational mul(const GaussianRational& x, const GaussianRational& y) { return x * y; }
inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }
inline GaussianRational inv(const GaussianRational& x) { return x.inv(); }

// Canonical text form: "3/4-2/5i", "i", "-i", "2i", "-1/3", "0".
inline std::string format_scalar(const GaussianRational& z) {
    const auto& re = z.re();
    const auto& im = z.im();
    if (sgn(im) == 0) return format_rational(re);
    std::string imag;
    if (im == 1)
        imag = "";
    else if (im == -1)
        imag = "-";
    else
        imag = format_rational(im);
    if (sgn(re) == 0) return imag + "i";
    std::string out = format_rational(re);
    if (sgn(im) > 0) out += '+';
    if (im == -1)
        out += '-';
    else
        out += imag;
    return out + "i";
}

namespace detail {

// Longest prefix of s at pos matching ['-'] digits ['/' digits].
inline std::size_t scan_rational(std::string_view s, std::size_t pos) {
    std::size_t p = pos;
    if (p < s.size() && s[p] == '-') ++p;
    std::size_t digits_start = p;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
    if (p == digits_start) return 0;
    if (p < s.size() && s[p] == '/') {
        std::size_t q = p + 1;
        std::size_t den_start = q;
        while (q < s.size() && s[q] >= '0' && s[q] <= '9') ++q;
        if (q == den_start) return 0;
        p = q;
    }
    return p - pos;
}

} // namespace detail

// complex := rational | [rational] ['+'|'-'] [rational] 'i'
inline GaussianRational parse_scalar(std::string_view s) {
    auto fail = [&]() -> GaussianRational {
        throw ParseError("malformed scalar: '" + std::string(s) + "'");
    };
    if (s.empty()) return fail();

    std::size_t pos = 0;
    Rational head(0);
    bool have_head = false;
    if (std::size_t n = detail::scan_rational(s, 0); n > 0) {
        head = parse_rational(s.substr(0, n));
        have_head = true;
        pos = n;
    }
    if (pos == s.size()) return have_head ? GaussianRational(head) : fail();

    // "<rational>i" with no separate sign
    if (have_head && s[pos] == 'i' && pos + 1 == s.size()) return {Rational(0), head};

    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1;
        ++pos;
    } else if (have_head) {
        return fail();
    }

    Rational coeff(1);
    if (std::size_t n = detail::scan_rational(s, pos); n > 0) {
        coeff = parse_rational(s.substr(pos, n));
        pos += n;
    }
    if (pos + 1 != s.size() || s[pos] != 'i') return fail();
    return {have_head ? head : Rational(0), sign * coeff};
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_scalar(z);
}

} // namespace starcore
