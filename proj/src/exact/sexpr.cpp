// s-expression reader/writer and infix rendering for MultiExpr.
#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/multi_expr.hpp"

#include <cctype>
#include <sstream>

namespace fieldsym::exact {

namespace {

std::string coefficient_sexpr(const GaussRational& c) {
    if (c.is_real()) return rational_string(c.re());
    std::string im = sgn(c.im()) == 0 ? "" : "(* " + rational_string(c.im()) + " i)";
    if (sgn(c.re()) == 0) return im;
    return "(+ " + rational_string(c.re()) + " " + im + ")";
}

std::string monomial_sexpr(const SymbolTable& table, const Monomial& m) {
    std::string out;
    for (const auto& [id, e] : m.factors()) {
        if (!out.empty()) out += ' ';
        out += e == 1 ? table.name(id) : "(^ " + table.name(id) + " " + std::to_string(e) + ")";
    }
    return out;
}

std::string polynomial_sexpr(const SymbolTable& table, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (m.is_one()) {
            terms.push_back(coefficient_sexpr(c));
            continue;
        }
        const bool single = m.factors().size() == 1 && c.is_one();
        if (single) {
            terms.push_back(monomial_sexpr(table, m));
        } else if (c.is_one()) {
            terms.push_back("(* " + monomial_sexpr(table, m) + ")");
        } else {
            terms.push_back("(* " + coefficient_sexpr(c) + " " + monomial_sexpr(table, m) + ")");
        }
    }
    if (terms.size() == 1) return terms.front();
    std::string out = "(+";
    for (const auto& t : terms) out += " " + t;
    return out + ")";
}

std::string coefficient_infix(const GaussRational& c) {
    if (c.is_real()) return rational_string(c.re());
    return "(" + c.to_string() + ")";
}

std::string polynomial_infix(const SymbolTable& table, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        GaussRational c = it->second;
        const Monomial& m = it->first;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (!c.is_one() || m.is_one()) body = coefficient_infix(c);
        for (const auto& [id, e] : m.factors()) {
            if (!body.empty()) body += "*";
            body += table.name(id);
            if (e != 1) body += "^" + std::to_string(e);
        }
        out += body;
    }
    return out;
}

class Parser {
public:
    Parser(const TablePtr& table, std::string_view text) : table_(table), text_(text) {}

    MultiExpr parse_all() {
        MultiExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    std::string atom() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
               std::isspace(static_cast<unsigned char>(text_[pos_])) == 0)
            ++pos_;
        if (pos_ == start) throw ParseError("expected atom", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_number(const std::string& a) {
        std::size_t k = (a[0] == '-') ? 1 : 0;
        if (k >= a.size()) return false;
        bool slash = false;
        bool digit = false;
        for (; k < a.size(); ++k) {
            if (a[k] == '/') {
                if (slash || !digit) return false;
                slash = true;
                digit = false;
            } else if (std::isdigit(static_cast<unsigned char>(a[k])) != 0) {
                digit = true;
            } else {
                return false;
            }
        }
        return digit;
    }

    MultiExpr parse_expr() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (text_[pos_] == ')') throw ParseError("unexpected ')'", pos_);
        if (text_[pos_] != '(') {
            std::string a = atom();
            if (a == "i") return {table_, GaussRational::imaginary_unit()};
            if (is_number(a)) return {table_, GaussRational(parse_rational(a))};
            if (!table_->find(a)) throw UnknownVariable(a);
            return MultiExpr::symbol(table_, a);
        }
        const std::size_t open = pos_++;
        std::string op = atom();
        std::vector<MultiExpr> args;
        std::string exponent_text;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) throw ParseError("unbalanced '('", open);
            if (text_[pos_] == ')') {
                ++pos_;
                break;
            }
            if (op == "^" && args.size() == 1) {
                exponent_text = atom();
                continue;
            }
            args.push_back(parse_expr());
        }
        if (op == "+") {
            MultiExpr r(table_, GaussRational(0));
            for (const auto& a : args) r += a;
            return r;
        }
        if (op == "*") {
            MultiExpr r(table_, GaussRational(1));
            for (const auto& a : args) r *= a;
            return r;
        }
        if (op == "-") {
            if (args.size() == 1) return -args[0];
            if (args.size() == 2) return args[0] - args[1];
            throw ParseError("'-' takes one or two arguments", open);
        }
        if (op == "/") {
            if (args.size() != 2) throw ParseError("'/' takes two arguments", open);
            return args[0] / args[1];
        }
        if (op == "^") {
            if (args.size() != 1 || exponent_text.empty() || !is_number(exponent_text) ||
                exponent_text.find('/') != std::string::npos)
                throw ParseError("'^' takes a base and an integer exponent", open);
            return args[0].pow(std::stoi(exponent_text));
        }
        throw ParseError("unknown operator '" + op + "'", open);
    }

    const TablePtr& table_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string MultiExpr::to_sexpr() const {
    std::string num = polynomial_sexpr(*table_, value_.numerator());
    if (value_.is_polynomial()) return num;
    std::vector<std::string> parts;
    for (const auto& f : value_.factors()) {
        std::string base = polynomial_sexpr(*table_, f.poly);
        parts.push_back(f.multiplicity == 1 ? base : "(^ " + base + " " + std::to_string(f.multiplicity) + ")");
    }
    std::string den = parts.size() == 1 ? parts.front() : "(*";
    if (parts.size() > 1) {
        for (const auto& p : parts) den += " " + p;
        den += ")";
    }
    return "(/ " + num + " " + den + ")";
}

std::string MultiExpr::to_string() const {
    std::string num = polynomial_infix(*table_, value_.numerator());
    if (value_.is_polynomial()) return num;
    std::string den;
    for (const auto& f : value_.factors()) {
        if (!den.empty()) den += "*";
        den += "(" + polynomial_infix(*table_, f.poly) + ")";
        if (f.multiplicity != 1) den += "^" + std::to_string(f.multiplicity);
    }
    return "(" + num + ")/" + (value_.factors().size() == 1 ? den : "(" + den + ")");
}

MultiExpr MultiExpr::parse(const TablePtr& table, std::string_view text) { return Parser(table, text).parse_all(); }

}  // namespace fieldsym::exact
