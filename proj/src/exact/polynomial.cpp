#include "fieldsym/exact/polynomial.hpp"

#include "fieldsym/exact/errors.hpp"

#include <algorithm>
#include <climits>

namespace fieldsym::exact {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::power(int id, int exponent) {
    Monomial m;
    if (exponent != 0) m.factors_.emplace_back(id, exponent);
    return m;
}

int Monomial::exponent(int id) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::make_pair(id, INT_MIN));
    return (it != factors_.end() && it->first == id) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.factors_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& f : r.factors_) f.second = -f.second;
    return r;
}

Monomial Monomial::without(int id) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != id) r.factors_.push_back(f);
    return r;
}

bool Monomial::is_polynomial() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second > 0; });
}

bool Monomial::divides(const Monomial& o) const { return (o * inverse()).is_polynomial(); }

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    // Walk both sparse lists; the first symbol (lowest id) with differing exponent decides.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
        int ida = i < fa.size() ? fa[i].first : INT_MAX;
        int idb = j < fb.size() ? fb[j].first : INT_MAX;
        int id = std::min(ida, idb);
        int ea = ida == id ? fa[i].second : 0;
        int eb = idb == id ? fb[j].second : 0;
        if (ea != eb) return ea < eb;
        if (ida == id) ++i;
        if (idb == id) ++j;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::term(const GaussRational& c, const Monomial& m) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(int id, int exponent) { return term(GaussRational(1), Monomial::power(id, exponent)); }

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

GaussRational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussRational() : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const GaussRational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const GaussRational& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(GaussRational(1));
    Polynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.rbegin();
    auto ib = b.terms_.rbegin();
    MonomialLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.rend() && ib != b.terms_.rend();
}

Polynomial Polynomial::partial(int id) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(id);
        if (e == 0) continue;
        r.add_term(m * Monomial::power(id, -1), c * GaussRational(e));
    }
    return r;
}

bool Polynomial::mentions(int id) const {
    return std::any_of(terms_.begin(), terms_.end(), [id](const auto& t) { return t.first.exponent(id) != 0; });
}

std::set<int> Polynomial::symbols() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) out.insert(f.first);
    return out;
}

int Polynomial::max_degree(int id) const {
    int d = INT_MIN;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(id));
    return terms_.empty() ? 0 : d;
}

int Polynomial::min_degree(int id) const {
    int d = INT_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(id));
    return terms_.empty() ? 0 : d;
}

Monomial Polynomial::min_monomial() const {
    if (terms_.empty()) return {};
    Monomial content;
    for (int id : symbols()) content = content * Monomial::power(id, min_degree(id));
    return content;
}

std::map<int, Polynomial> Polynomial::collect(int id) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) out[m.exponent(id)].add_term(m.without(id), c);
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    if (is_zero()) return Polynomial{};
    // Shift both operands to honest polynomials, divide in lex order, undo the shift.
    const Monomial shift_num = min_monomial().inverse();
    const Monomial shift_den = divisor.min_monomial().inverse();
    Polynomial rem = shifted(shift_num);
    const Polynomial den = divisor.shifted(shift_den);
    const Monomial& lm = den.leading_monomial();
    const GaussRational& lc = den.leading_coefficient();
    Polynomial quotient;
    std::size_t guard = 0;
    const std::size_t limit = 64 * (rem.size() + 1) * (den.size() + 1) + 1024;
    while (!rem.is_zero()) {
        if (++guard > limit) return std::nullopt;
        const Monomial& rm = rem.leading_monomial();
        if (!lm.divides(rm)) return std::nullopt;
        Polynomial t = term(rem.leading_coefficient() / lc, rm * lm.inverse());
        quotient += t;
        rem -= t * den;
    }
    return quotient.shifted(shift_num.inverse() * shift_den);
}

std::optional<Polynomial> Polynomial::sqrt_exact() const {
    if (is_zero()) return Polynomial{};
    const Monomial& lm = leading_monomial();
    Monomial root_lm;
    for (const auto& [id, e] : lm.factors()) {
        if (e % 2 != 0) return std::nullopt;
        root_lm = root_lm * Monomial::power(id, e / 2);
    }
    auto lc = leading_coefficient().sqrt_exact();
    if (!lc) return std::nullopt;
    Polynomial root = term(*lc, root_lm);
    const Polynomial twice_lead = term(*lc * GaussRational(2), root_lm);
    MonomialLess less;
    for (std::size_t iter = 0; iter <= size() + 1; ++iter) {
        Polynomial rem = *this - root * root;
        if (rem.is_zero()) return root;
        const Monomial next = rem.leading_monomial() * root_lm.inverse();
        if (!less(next, root_lm)) return std::nullopt;
        root += term(rem.leading_coefficient() / twice_lead.leading_coefficient(), next);
    }
    return std::nullopt;
}

bool Polynomial::all_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

NormalizedPolynomial normalize(const Polynomial& p) {
    if (p.is_zero()) throw DivisionByZero();
    Monomial content = p.min_monomial();
    Polynomial prim = p.shifted(content.inverse());
    GaussRational lc = prim.leading_coefficient();
    prim = prim.scaled(GaussRational(1) / lc);
    return {lc, content, prim};
}

}  // namespace fieldsym::exact
