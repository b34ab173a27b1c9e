#pragma once

#include "fieldsym/exact/gauss_rational.hpp"

#include <map>
#include <string>

namespace fieldsym::exact {

class MultiExpr;

/// Finite sum of c_k * var^k, k any integer. Zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(std::string variable = "s") : var_(std::move(variable)) {}
    static LaurentPoly monomial(const std::string& variable, int exponent, const GaussRational& c = GaussRational(1));

    const std::string& variable() const noexcept { return var_; }
    const std::map<int, GaussRational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    GaussRational coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    void add_term(int exponent, const GaussRational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const GaussRational& c, const LaurentPoly& p);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

    /// Multiplies by var^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly derivative() const;

    std::string to_string() const;

private:
    std::string var_;
    std::map<int, GaussRational> terms_;
};

/// Converts e, which must have constant coefficients in every power of `variable`.
LaurentPoly to_laurent(const MultiExpr& e, const std::string& variable);

}  // namespace fieldsym::exact
