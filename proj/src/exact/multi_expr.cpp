#include "fieldsym/exact/multi_expr.hpp"

#include "fieldsym/exact/errors.hpp"

namespace fieldsym::exact {

MultiExpr::MultiExpr(TablePtr table, Fraction value) : table_(std::move(table)), value_(std::move(value)) {
    if (!table_) throw Error("expression without symbol table");
    value_ = table_->reduce(value_);
}

MultiExpr MultiExpr::symbol(const TablePtr& table, const std::string& name) {
    return {table, Fraction(Polynomial::variable(table->id(name)))};
}

bool MultiExpr::is_constant() const { return value_.is_polynomial() && value_.numerator().is_constant(); }

std::optional<GaussRational> MultiExpr::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return value_.numerator().constant_term();
}

bool MultiExpr::mentions(const std::string& name) const {
    auto id = table_->find(name);
    return id && value_.mentions(*id);
}

std::vector<std::string> MultiExpr::free_symbols() const {
    std::vector<std::string> out;
    for (int id : value_.symbols()) out.push_back(table_->name(id));
    return out;
}

MultiExpr MultiExpr::numerator() const { return {table_, Fraction(value_.numerator())}; }

MultiExpr MultiExpr::denominator() const { return {table_, Fraction(value_.denominator())}; }

MultiExpr MultiExpr::lift(const TablePtr& target) const {
    if (!target->accepts(*table_)) throw ContextMismatch();
    return {target, value_};
}

void MultiExpr::unify(MultiExpr& other) {
    if (table_ == other.table_) return;
    if (table_->accepts(*other.table_)) {
        other = other.lift(table_);
    } else if (other.table_->accepts(*table_)) {
        *this = lift(other.table_);
    } else {
        throw ContextMismatch();
    }
}

MultiExpr& MultiExpr::operator+=(const MultiExpr& o) {
    MultiExpr b = o;
    unify(b);
    value_ = table_->reduce(value_ + b.value_);
    return *this;
}

MultiExpr& MultiExpr::operator-=(const MultiExpr& o) {
    MultiExpr b = o;
    unify(b);
    value_ = table_->reduce(value_ - b.value_);
    return *this;
}

MultiExpr& MultiExpr::operator*=(const MultiExpr& o) {
    MultiExpr b = o;
    unify(b);
    value_ = table_->reduce(value_ * b.value_);
    return *this;
}

MultiExpr& MultiExpr::operator/=(const MultiExpr& o) {
    MultiExpr b = o;
    unify(b);
    value_ = table_->reduce(value_ / b.value_);
    return *this;
}

MultiExpr MultiExpr::pow(int exponent) const {
    if (exponent < 0) return MultiExpr(table_, GaussRational(1)) / pow(-exponent);
    MultiExpr result(table_, GaussRational(1));
    MultiExpr base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

MultiExpr differentiate(const MultiExpr& e, const std::string& var) {
    const auto& table = *e.table();
    const int v = table.id(var);
    Fraction result;
    for (int w : e.value().symbols()) {
        Fraction dw;
        if (w == v) {
            dw = Fraction(GaussRational(1));
        } else {
            const auto& info = table.info(w);
            if (info.depends_on.count(v) == 0) continue;
            auto it = info.derivatives.find(v);
            if (it == info.derivatives.end()) throw MissingDerivativeRule(info.name, var);
            dw = it->second;
        }
        if (dw.is_zero()) continue;
        result = result + e.value().partial(w) * dw;
    }
    return {e.table(), result};
}

std::map<int, MultiExpr> collect_powers(const MultiExpr& e, const std::string& var) {
    const int v = e.table()->id(var);
    for (const auto& f : e.value().factors())
        if (f.poly.mentions(v)) throw NotPolynomialIn(var);
    Fraction inv_den = Fraction(e.value().denominator()).inverse();
    std::map<int, MultiExpr> out;
    for (auto& [k, coeff] : e.value().numerator().collect(v)) {
        out.emplace(k, MultiExpr(e.table(), Fraction(coeff) * inv_den));
    }
    return out;
}

namespace {

Fraction evaluate(const Polynomial& p, const std::map<int, Fraction>& values) {
    std::map<std::pair<int, int>, Fraction> cache;
    auto power = [&](int id, int e) -> const Fraction& {
        auto key = std::make_pair(id, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, values.at(id).pow(e)).first;
        return it->second;
    };
    Fraction out;
    for (const auto& [m, c] : p.terms()) {
        Monomial kept;
        Fraction factor(GaussRational(1));
        for (const auto& [id, e] : m.factors()) {
            if (values.count(id) != 0) {
                factor = factor * power(id, e);
            } else {
                kept = kept * Monomial::power(id, e);
            }
        }
        out = out + factor * Fraction(Polynomial::term(c, kept));
    }
    return out;
}

}  // namespace

MultiExpr substitute(const MultiExpr& e, const std::map<std::string, MultiExpr>& values) {
    TablePtr table = e.table();
    std::map<int, Fraction> by_id;
    for (const auto& [name, value] : values) {
        MultiExpr v = value;
        if (v.table() != table) {
            if (v.table()->accepts(*table)) {
                table = v.table();
            } else {
                v = v.lift(table);
            }
        }
        by_id.emplace(table->id(name), v.value());
    }
    for (auto& [id, f] : by_id) f = table->reduce(f);
    Fraction out = evaluate(e.value().numerator(), by_id);
    for (const auto& f : e.value().factors()) out = out / evaluate(f.poly, by_id).pow(f.multiplicity);
    return {table, out};
}

MultiExpr substitute(const MultiExpr& e, const std::string& name, const MultiExpr& value) {
    return substitute(e, std::map<std::string, MultiExpr>{{name, value}});
}

}  // namespace fieldsym::exact
