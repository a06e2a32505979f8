#pragma once

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pact {

/// Exact element of Q(i): rational real and imaginary parts kept in lowest
/// terms with positive denominators. All arithmetic is exact; equality is
/// literal equality of canonical forms.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    /// num/den with canonicalization; throws on zero denominator.
    static GaussianRational rational(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// |z|^2 as an exact rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        *this = *this * o;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        *this = *this / o;
        return *this;
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        if (a.is_zero() || b.is_zero()) return GaussianRational();
        if (a.is_real() && b.is_real()) return GaussianRational(a.re_ * b.re_);
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (a.is_zero()) return GaussianRational();
        if (b.is_real()) return GaussianRational(a.re_ / b.re_, a.im_ / b.re_);
        mpq_class n = b.norm2();
        GaussianRational p = a * b.conj();
        return GaussianRational(p.re_ / n, p.im_ / n);
    }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical rendering: "p/q", "r/s i", or "p/q+r/s i" (minus folded into
    /// the sign). Round-trips through parse().
    std::string str() const {
        if (is_real()) return re_.get_str();
        std::string imag = mpq_class(abs(im_)).get_str() + " i";
        if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
        return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
    }

    /// Accepts "p", "p/q", "p/q i", "p/q+r/s i", "i", "-i" with optional
    /// spaces around tokens. Rejects zero denominators.
    static std::optional<GaussianRational> parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.str();
    }

private:
    mpq_class re_, im_;
};

namespace detail {

inline void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

// [sign] digits [/ digits]; fails on malformed input or zero denominator.
inline std::optional<mpq_class> parse_rat(std::string_view& s) {
    skip_ws(s);
    std::size_t n = 0;
    bool neg = false;
    if (n < s.size() && (s[n] == '+' || s[n] == '-')) {
        neg = s[n] == '-';
        ++n;
        while (n < s.size() && (s[n] == ' ' || s[n] == '\t')) ++n;
    }
    std::size_t num_begin = n;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    if (n == num_begin) return std::nullopt;
    mpz_class num(std::string(s.substr(num_begin, n - num_begin)), 10);
    mpz_class den(1);
    if (n < s.size() && s[n] == '/') {
        ++n;
        std::size_t den_begin = n;
        while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
        if (n == den_begin) return std::nullopt;
        den = mpz_class(std::string(s.substr(den_begin, n - den_begin)), 10);
        if (sgn(den) == 0) return std::nullopt;
    }
    s.remove_prefix(n);
    mpq_class q(neg ? -num : num, den);
    q.canonicalize();
    return q;
}

}  // namespace detail

inline std::optional<GaussianRational> GaussianRational::parse(std::string_view s) {
    using detail::parse_rat;
    using detail::skip_ws;
    skip_ws(s);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    // Bare imaginary unit.
    if (s == "i") return GaussianRational::i();
    if (s == "-i") return GaussianRational(mpq_class(0), mpq_class(-1));
    auto first = parse_rat(s);
    if (!first) return std::nullopt;
    skip_ws(s);
    if (s.empty()) return GaussianRational(*first);
    if (s == "i") return GaussianRational(mpq_class(0), *first);
    if (s.front() != '+' && s.front() != '-') return std::nullopt;
    auto second = parse_rat(s);
    if (!second) return std::nullopt;
    skip_ws(s);
    if (s != "i") return std::nullopt;
    return GaussianRational(*first, *second);
}

}  // namespace pact
