#pragma once

#include "fieldsym/exact/gauss_rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace fieldsym::exact {

/// Power product over symbol ids; exponents may be negative. Entries sorted by id, no zero exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial power(int id, int exponent);

    const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    int exponent(int id) const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial without(int id) const;
    /// True when every exponent is nonnegative.
    bool is_polynomial() const;
    /// True when o / *this has only nonnegative exponents.
    bool divides(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<std::pair<int, int>> factors_;
};

/// Lexicographic order, lower symbol ids dominate. Used for leading terms and exact division.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate Laurent polynomial with Gaussian-rational coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, GaussRational, MonomialLess>;

    Polynomial() = default;
    Polynomial(const GaussRational& c);  // NOLINT(google-explicit-constructor)
    static Polynomial term(const GaussRational& c, const Monomial& m);
    static Polynomial variable(int id, int exponent = 1);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    GaussRational constant_term() const;
    const Monomial& leading_monomial() const;
    const GaussRational& leading_coefficient() const;

    void add_term(const Monomial& m, const GaussRational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const GaussRational& c) const;
    Polynomial shifted(const Monomial& m) const;
    Polynomial pow(unsigned exponent) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    /// Explicit partial derivative, every other symbol held fixed.
    Polynomial partial(int id) const;

    bool mentions(int id) const;
    std::set<int> symbols() const;
    int max_degree(int id) const;
    int min_degree(int id) const;
    /// Per-symbol minimum exponent over all terms (the monomial content).
    Monomial min_monomial() const;
    /// Map from exponent of `id` to the coefficient polynomial (free of `id`).
    std::map<int, Polynomial> collect(int id) const;

    /// Quotient if `divisor` divides *this exactly (Laurent shifts allowed).
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
    /// Exact square root, normalized so the leading coefficient has positive real part when possible.
    std::optional<Polynomial> sqrt_exact() const;

    bool all_real() const;

private:
    Terms terms_;
};

/// A polynomial split as coefficient * monomial * primitive part, the primitive part having
/// nonnegative exponents, no monomial content and leading coefficient 1.
struct NormalizedPolynomial {
    GaussRational coefficient;
    Monomial monomial;
    Polynomial primitive;
};
NormalizedPolynomial normalize(const Polynomial& p);

}  // namespace fieldsym::exact
