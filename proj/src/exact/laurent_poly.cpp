#include "fieldsym/exact/laurent_poly.hpp"

#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/multi_expr.hpp"

namespace fieldsym::exact {

LaurentPoly LaurentPoly::monomial(const std::string& variable, int exponent, const GaussRational& c) {
    LaurentPoly p(variable);
    p.add_term(exponent, c);
    return p;
}

GaussRational LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? GaussRational() : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.var_ != var_ && !o.is_zero() && !is_zero()) throw Error("Laurent polynomials in different variables");
    if (is_zero()) var_ = o.var_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.var_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly operator*(const GaussRational& c, const LaurentPoly& p) {
    LaurentPoly r(p.var_);
    for (const auto& [k, v] : p.terms_) r.add_term(k, c * v);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.add_term(e - 1, c * GaussRational(e));
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_string() + ")";
        if (it->first != 0) out += "*" + var_ + "^" + std::to_string(it->first);
    }
    return out;
}

LaurentPoly to_laurent(const MultiExpr& e, const std::string& variable) {
    LaurentPoly out(variable);
    for (const auto& [k, c] : collect_powers(e, variable)) {
        auto v = c.constant_value();
        if (!v) throw Error("coefficient of " + variable + "^" + std::to_string(k) + " is not constant");
        out.add_term(k, *v);
    }
    return out;
}

}  // namespace fieldsym::exact
