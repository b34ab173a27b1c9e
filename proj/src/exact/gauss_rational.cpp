#include "fieldsym/exact/gauss_rational.hpp"

#include "fieldsym/exact/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace fieldsym::exact {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRational GaussRational::ratio(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRational(q);
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussRational GaussRational::pow(int exponent) const {
    if (exponent < 0) return GaussRational(1) / pow(-exponent);
    GaussRational result(1);
    GaussRational base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<GaussRational> GaussRational::sqrt_exact() const {
    if (!is_real()) return std::nullopt;
    if (sgn(re_) >= 0) {
        auto r = rational_sqrt(re_);
        if (!r) return std::nullopt;
        return GaussRational(*r);
    }
    auto r = rational_sqrt(-re_);
    if (!r) return std::nullopt;
    return GaussRational(mpq_class(0), *r);
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
        if (pos == dstart) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return std::string(text.substr(start, pos - start));
    };
    std::string num = digits(true);
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits(false);
    }
    if (pos != text.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d(den);
    if (d == 0) throw DivisionByZero();
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

GaussRational GaussRational::parse(std::string_view text) {
    if (text == "i") return imaginary_unit();
    if (text == "-i") return -imaginary_unit();
    if (!text.empty() && text.back() == 'i') {
        return {mpq_class(0), parse_rational(text.substr(0, text.size() - 1))};
    }
    return GaussRational(parse_rational(text));
}

std::string GaussRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string im = im_.get_str() + "i";
    if (sgn(re_) == 0) return im;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& v) { return os << v.to_string(); }

}  // namespace fieldsym::exact
