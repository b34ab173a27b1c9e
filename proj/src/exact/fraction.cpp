#include "fieldsym/exact/fraction.hpp"

#include "fieldsym/exact/errors.hpp"

#include <algorithm>

namespace fieldsym::exact {

Fraction::Fraction(Polynomial numerator) : num_(std::move(numerator)) {}

Polynomial Fraction::denominator() const {
    Polynomial d(GaussRational(1));
    for (const auto& f : den_) d = d * f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return d;
}

void Fraction::add_factor(const Polynomial& primitive, int multiplicity) {
    if (multiplicity == 0) return;
    auto it = std::lower_bound(den_.begin(), den_.end(), primitive,
                               [](const DenominatorFactor& f, const Polynomial& p) { return f.poly < p; });
    if (it != den_.end() && it->poly == primitive) {
        it->multiplicity += multiplicity;
        if (it->multiplicity == 0) den_.erase(it);
    } else {
        den_.insert(it, DenominatorFactor{primitive, multiplicity});
    }
}

void Fraction::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->multiplicity > 0) {
            auto q = num_.divide_exact(it->poly);
            if (!q) break;
            num_ = std::move(*q);
            --it->multiplicity;
        }
        if (it->multiplicity == 0) {
            it = den_.erase(it);
        } else {
            ++it;
        }
    }
}

Fraction Fraction::rebuild(Polynomial numerator, const std::vector<DenominatorFactor>& factors) {
    Fraction r(std::move(numerator));
    for (const auto& f : factors) {
        auto n = normalize(f.poly);
        // coefficient * monomial parts move to the numerator.
        Polynomial scale = Polynomial::term(n.coefficient, n.monomial).pow(static_cast<unsigned>(f.multiplicity));
        auto inv = Polynomial::term(GaussRational(1) / scale.leading_coefficient(), scale.leading_monomial().inverse());
        r.num_ = r.num_ * inv;
        if (!n.primitive.is_constant()) r.add_factor(n.primitive, f.multiplicity);
    }
    r.cancel();
    return r;
}

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

// Multiplier turning a's denominator into the lcm of both denominators.
Polynomial cofactor(const std::vector<DenominatorFactor>& own, const std::vector<DenominatorFactor>& lcm) {
    Polynomial m(GaussRational(1));
    for (const auto& f : lcm) {
        int have = 0;
        for (const auto& g : own)
            if (g.poly == f.poly) have = g.multiplicity;
        if (f.multiplicity > have) m = m * f.poly.pow(static_cast<unsigned>(f.multiplicity - have));
    }
    return m;
}

std::vector<DenominatorFactor> lcm_factors(const std::vector<DenominatorFactor>& a,
                                           const std::vector<DenominatorFactor>& b) {
    std::vector<DenominatorFactor> out = a;
    for (const auto& f : b) {
        auto it = std::find_if(out.begin(), out.end(), [&](const DenominatorFactor& g) { return g.poly == f.poly; });
        if (it == out.end()) {
            out.push_back(f);
        } else {
            it->multiplicity = std::max(it->multiplicity, f.multiplicity);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.poly < y.poly; });
    return out;
}

}  // namespace

Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) {
        Fraction r = a;
        r.num_ += b.num_;
        r.cancel();
        return r;
    }
    Fraction r;
    r.den_ = lcm_factors(a.den_, b.den_);
    r.num_ = a.num_ * cofactor(a.den_, r.den_) + b.num_ * cofactor(b.den_, r.den_);
    r.cancel();
    return r;
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Fraction r(a.num_ * b.num_);
    r.den_ = a.den_;
    for (const auto& f : b.den_) r.add_factor(f.poly, f.multiplicity);
    r.cancel();
    return r;
}

Fraction Fraction::inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    auto n = normalize(num_);
    Fraction r(denominator() * Polynomial::term(GaussRational(1) / n.coefficient, n.monomial.inverse()));
    if (!n.primitive.is_constant()) r.add_factor(n.primitive, 1);
    r.cancel();
    return r;
}

Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

Fraction Fraction::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Fraction r(Polynomial(GaussRational(1)));
    for (int i = 0; i < exponent; ++i) r = r * *this;
    return r;
}

Fraction Fraction::partial(int id) const {
    Fraction r;
    r.num_ = num_.partial(id);
    r.den_ = den_;
    for (const auto& f : den_) {
        Polynomial df = f.poly.partial(id);
        if (df.is_zero()) continue;
        Fraction term(num_ * df.scaled(GaussRational(f.multiplicity)));
        term.den_ = den_;
        term.add_factor(f.poly, 1);
        r = r - term;
    }
    r.cancel();
    return r;
}

bool Fraction::mentions(int id) const {
    if (num_.mentions(id)) return true;
    return std::any_of(den_.begin(), den_.end(), [id](const auto& f) { return f.poly.mentions(id); });
}

std::set<int> Fraction::symbols() const {
    std::set<int> s = num_.symbols();
    for (const auto& f : den_) {
        auto t = f.poly.symbols();
        s.insert(t.begin(), t.end());
    }
    return s;
}

}  // namespace fieldsym::exact
