#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace fieldsym::exact {

/// Exact complex rational re + im*i. Both parts are kept in lowest terms.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRational(const mpq_class& re) : re_(re) { re_.canonicalize(); }  // NOLINT
    GaussRational(mpq_class re, mpq_class im);

    static GaussRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }
    static GaussRational ratio(long num, long den);

    /// Parses "p", "p/q", optionally with a trailing "i" for an imaginary value.
    static GaussRational parse(std::string_view text);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    /// |z|^2, always real.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    GaussRational pow(int exponent) const;

    /// Exact square root when one exists in Q(i) for a real argument: sqrt(q) or i*sqrt(-q).
    std::optional<GaussRational> sqrt_exact() const;

    /// Canonical text: "3/4", "-2", "1/2i", "3/4+1/2i".
    std::string to_string() const;

    double real_double() const { return re_.get_d(); }

    /// Total order used only to make containers deterministic.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& v);

/// Exact sqrt of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

/// Parses "p" or "p/q" (no float syntax); throws std::invalid_argument otherwise.
mpq_class parse_rational(std::string_view text);

/// Canonical "p/q" or "p" text.
std::string rational_string(const mpq_class& q);

}  // namespace fieldsym::exact
