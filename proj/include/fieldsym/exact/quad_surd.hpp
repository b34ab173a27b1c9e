#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace fieldsym::exact {

/// a + b*sqrt(r) with rational a, b and a fixed positive radicand r. When r is a perfect square
/// the value is folded to a rational and the radicand reset to 1.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(const mpq_class& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadSurd(mpq_class a, mpq_class b, mpq_class radicand);

    /// sqrt(r) itself.
    static QuadSurd root(const mpq_class& radicand) { return {0, 1, radicand}; }

    const mpq_class& rational_part() const noexcept { return a_; }
    const mpq_class& surd_part() const noexcept { return b_; }
    const mpq_class& radicand() const noexcept { return r_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    /// Exact sign.
    int sign() const;
    double to_double() const;

    QuadSurd operator-() const { return {-a_, -b_, r_}; }
    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).is_zero(); }

    QuadSurd conjugate() const { return {a_, -b_, r_}; }

    /// Nonnegative square root inside the same field, if one exists.
    std::optional<QuadSurd> sqrt_in_field() const;

    /// "p/q", or "a + b*sqrt(r)" forms with rational a, b, r.
    std::string to_string() const;

private:
    /// Same value written over `radicand`; requires radicand() / radicand to be a rational square.
    QuadSurd rebased(const mpq_class& radicand) const;
    static mpq_class common_radicand(const QuadSurd& x, const QuadSurd& y);

    mpq_class a_{0};
    mpq_class b_{0};
    mpq_class r_{1};
};

}  // namespace fieldsym::exact
