#include "fieldsym/exact/quad_surd.hpp"

#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/gauss_rational.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace fieldsym::exact {

QuadSurd::QuadSurd(mpq_class a, mpq_class b, mpq_class radicand)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
    a_.canonicalize();
    b_.canonicalize();
    r_.canonicalize();
    if (sgn(r_) <= 0) throw Error("surd radicand must be positive");
    if (auto s = rational_sqrt(r_)) {
        a_ += b_ * *s;
        b_ = 0;
    }
    if (sgn(b_) == 0) r_ = 1;
}

mpq_class QuadSurd::common_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.r_;
    if (y.is_rational()) return x.r_;
    if (x.r_ != y.r_ && !rational_sqrt(x.r_ / y.r_)) throw Error("surds with incompatible radicands");
    return x.r_;
}

QuadSurd QuadSurd::rebased(const mpq_class& radicand) const {
    if (is_rational() || r_ == radicand) return *this;
    // b sqrt(r) = (b t) sqrt(radicand) with t = sqrt(r / radicand).
    auto t = rational_sqrt(r_ / radicand);
    if (!t) throw Error("surds with incompatible radicands");
    QuadSurd out;
    out.a_ = a_;
    out.b_ = b_ * *t;
    out.r_ = radicand;
    return out;
}

int QuadSurd::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 r.
    const mpq_class lhs = a_ * a_;
    const mpq_class rhs = b_ * b_ * r_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

double QuadSurd::to_double() const {
    // get_d truncates; evaluate with guard bits and let strtod round to nearest.
    mpf_class v(a_, 256);
    if (!is_rational()) {
        mpf_class root(r_, 256);
        root = sqrt(root);
        v += mpf_class(b_, 256) * root;
    }
    mp_exp_t exp = 0;
    const std::string digits = v.get_str(exp, 10, 25);
    if (digits.empty()) return 0.0;
    const bool neg = digits.front() == '-';
    const std::string mant = neg ? digits.substr(1) : digits;
    return std::strtod(((neg ? "-0." : "0.") + mant + "e" + std::to_string(exp)).c_str(), nullptr);
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    const mpq_class r = QuadSurd::common_radicand(x, y);
    const QuadSurd yr = y.rebased(r);
    return {x.a_ + yr.a_, x.b_ + yr.b_, r};
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    const mpq_class r = QuadSurd::common_radicand(x, y);
    const QuadSurd xr = x.rebased(r);
    const QuadSurd yr = y.rebased(r);
    return {xr.a_ * yr.a_ + xr.b_ * yr.b_ * r, xr.a_ * yr.b_ + xr.b_ * yr.a_, r};
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    const mpq_class n = y.a_ * y.a_ - y.b_ * y.b_ * y.r_;
    if (sgn(n) == 0) throw DivisionByZero();
    QuadSurd num = x * y.conjugate();
    return {num.a_ / n, num.b_ / n, num.r_};
}

std::optional<QuadSurd> QuadSurd::sqrt_in_field() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return QuadSurd();
    if (is_rational()) {
        if (auto s = rational_sqrt(a_)) return QuadSurd(*s);
        return std::nullopt;
    }
    // (p + q sqrt r)^2 = a + b sqrt r  <=>  p^2 + r q^2 = a, 2pq = b.
    const mpq_class disc = a_ * a_ - b_ * b_ * r_;
    auto sd = rational_sqrt(disc);
    if (!sd) return std::nullopt;
    for (const mpq_class& p2 : {mpq_class((a_ + *sd) / 2), mpq_class((a_ - *sd) / 2)}) {
        if (sgn(p2) <= 0) continue;
        auto p = rational_sqrt(p2);
        if (!p) continue;
        QuadSurd cand(*p, b_ / (2 * *p), r_);
        if (cand.sign() < 0) cand = -cand;
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

std::string QuadSurd::to_string() const {
    if (is_rational()) return rational_string(a_);
    std::string surd = rational_string(abs(b_)) + "*sqrt(" + rational_string(r_) + ")";
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + surd;
    return rational_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + surd;
}

}  // namespace fieldsym::exact
