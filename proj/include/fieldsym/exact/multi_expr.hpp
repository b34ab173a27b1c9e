#pragma once

#include "fieldsym/exact/symbol_table.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fieldsym::exact {

/// Polynomial-fraction expression over the symbols of a SymbolTable. Every constructed value is
/// canonical with respect to the table's ring relations.
class MultiExpr {
public:
    MultiExpr(TablePtr table, Fraction value);
    MultiExpr(TablePtr table, const GaussRational& c) : MultiExpr(std::move(table), Fraction(c)) {}

    static MultiExpr symbol(const TablePtr& table, const std::string& name);
    static MultiExpr constant(const TablePtr& table, const GaussRational& c) { return {table, c}; }
    /// Reads the s-expression text format (see docs/formats.md).
    static MultiExpr parse(const TablePtr& table, std::string_view text);

    const TablePtr& table() const noexcept { return table_; }
    const Fraction& value() const noexcept { return value_; }

    bool is_zero() const noexcept { return value_.is_zero(); }
    bool is_constant() const;
    std::optional<GaussRational> constant_value() const;
    bool mentions(const std::string& name) const;
    std::vector<std::string> free_symbols() const;

    MultiExpr numerator() const;
    MultiExpr denominator() const;
    MultiExpr lift(const TablePtr& target) const;

    MultiExpr operator-() const { return {table_, -value_}; }
    MultiExpr& operator+=(const MultiExpr& o);
    MultiExpr& operator-=(const MultiExpr& o);
    MultiExpr& operator*=(const MultiExpr& o);
    MultiExpr& operator/=(const MultiExpr& o);
    friend MultiExpr operator+(MultiExpr a, const MultiExpr& b) { return a += b; }
    friend MultiExpr operator-(MultiExpr a, const MultiExpr& b) { return a -= b; }
    friend MultiExpr operator*(MultiExpr a, const MultiExpr& b) { return a *= b; }
    friend MultiExpr operator/(MultiExpr a, const MultiExpr& b) { return a /= b; }
    friend MultiExpr operator+(MultiExpr a, const GaussRational& b) { return a += MultiExpr(a.table_, b); }
    friend MultiExpr operator-(MultiExpr a, const GaussRational& b) { return a -= MultiExpr(a.table_, b); }
    friend MultiExpr operator*(MultiExpr a, const GaussRational& b) { return a *= MultiExpr(a.table_, b); }
    friend MultiExpr operator/(MultiExpr a, const GaussRational& b) { return a /= MultiExpr(a.table_, b); }
    friend MultiExpr operator+(const GaussRational& a, const MultiExpr& b) { return MultiExpr(b.table_, a) + b; }
    friend MultiExpr operator-(const GaussRational& a, const MultiExpr& b) { return MultiExpr(b.table_, a) - b; }
    friend MultiExpr operator*(const GaussRational& a, const MultiExpr& b) { return MultiExpr(b.table_, a) * b; }
    friend MultiExpr operator/(const GaussRational& a, const MultiExpr& b) { return MultiExpr(b.table_, a) / b; }
    MultiExpr pow(int exponent) const;

    /// Mathematical equality (the difference canonicalizes to zero).
    friend bool operator==(const MultiExpr& a, const MultiExpr& b) { return (a - b).is_zero(); }
    friend bool operator!=(const MultiExpr& a, const MultiExpr& b) { return !(a == b); }

    std::string to_sexpr() const;
    /// Infix rendering for reports, e.g. "-3/4*C*x^-2 + D".
    std::string to_string() const;

private:
    void unify(MultiExpr& other);

    TablePtr table_;
    Fraction value_;
};

/// d e / d var, chaining through the derivative rules of formal functions. Throws UnknownVariable
/// when var is not declared.
MultiExpr differentiate(const MultiExpr& e, const std::string& var);

/// Splits e by powers of var: sum of c_k var^k. Throws NotPolynomialIn when a denominator
/// factor involves var.
std::map<int, MultiExpr> collect_powers(const MultiExpr& e, const std::string& var);

MultiExpr substitute(const MultiExpr& e, const std::map<std::string, MultiExpr>& values);
MultiExpr substitute(const MultiExpr& e, const std::string& name, const MultiExpr& value);

}  // namespace fieldsym::exact
