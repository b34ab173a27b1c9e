#pragma once

#include "fieldsym/exact/polynomial.hpp"

#include <vector>

namespace fieldsym::exact {

/// One primitive factor of a denominator, raised to `multiplicity`.
struct DenominatorFactor {
    Polynomial poly;
    int multiplicity = 1;

    friend bool operator==(const DenominatorFactor& a, const DenominatorFactor& b) {
        return a.multiplicity == b.multiplicity && a.poly == b.poly;
    }
};

/// numerator / prod(factor^multiplicity). The numerator is a Laurent polynomial, so monomial
/// denominators never appear as factors. Factors are normalized (see `normalize`) and sorted.
class Fraction {
public:
    Fraction() = default;
    Fraction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
    Fraction(const GaussRational& c) : Fraction(Polynomial(c)) {}  // NOLINT

    const Polynomial& numerator() const noexcept { return num_; }
    const std::vector<DenominatorFactor>& factors() const noexcept { return den_; }
    Polynomial denominator() const;

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }

    Fraction operator-() const;
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    Fraction inverse() const;
    Fraction pow(int exponent) const;

    /// Explicit partial derivative (quotient rule over the factored denominator).
    Fraction partial(int id) const;

    bool mentions(int id) const;
    std::set<int> symbols() const;

    /// Replaces numerator and factors with already-reduced versions and renormalizes.
    static Fraction rebuild(Polynomial numerator, const std::vector<DenominatorFactor>& factors);

    /// Structural equality of the stored representation.
    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void add_factor(const Polynomial& primitive, int multiplicity);
    void cancel();

    Polynomial num_;
    std::vector<DenominatorFactor> den_;
};

}  // namespace fieldsym::exact
