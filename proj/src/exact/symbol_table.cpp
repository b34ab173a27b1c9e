#include "fieldsym/exact/symbol_table.hpp"

#include "fieldsym/exact/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace fieldsym::exact {

namespace {
std::atomic<std::uint64_t> next_uid{1};
}

SymbolTable::SymbolTable() : uid_(next_uid.fetch_add(1)) {}

std::shared_ptr<SymbolTable> SymbolTable::create() { return std::shared_ptr<SymbolTable>(new SymbolTable()); }

std::shared_ptr<SymbolTable> SymbolTable::extend() const {
    frozen_ = true;
    auto child = std::shared_ptr<SymbolTable>(new SymbolTable());
    child->ancestors_ = ancestors_;
    child->ancestors_.push_back(uid_);
    child->symbols_ = symbols_;
    child->by_name_ = by_name_;
    child->relation_ids_ = relation_ids_;
    return child;
}

void SymbolTable::require_mutable() const {
    if (frozen_) throw Error("symbol table was extended and can no longer be modified");
}

int SymbolTable::declare(const std::string& name, SymbolKind kind, const std::vector<std::string>& depends_on) {
    require_mutable();
    if (name.empty() || name == "i") throw Error("invalid symbol name '" + name + "'");
    if (by_name_.count(name) != 0) throw Error("symbol '" + name + "' declared twice");
    SymbolInfo info;
    info.name = name;
    info.kind = kind;
    for (const auto& d : depends_on) info.depends_on.insert(id(d));
    const int new_id = static_cast<int>(symbols_.size());
    symbols_.push_back(std::move(info));
    by_name_.emplace(name, new_id);
    return new_id;
}

void SymbolTable::set_derivative(const std::string& symbol, const std::string& var, const Fraction& value) {
    require_mutable();
    const int s = id(symbol);
    const int v = id(var);
    auto& info = symbols_[static_cast<std::size_t>(s)];
    info.depends_on.insert(v);
    info.derivatives[v] = value;
}

void SymbolTable::set_square_rule(const std::string& symbol, const Polynomial& value) {
    require_mutable();
    const int s = id(symbol);
    if (value.max_degree(s) >= 2 || value.min_degree(s) < 0) throw Error("square rule for '" + symbol + "' is recursive");
    symbols_[static_cast<std::size_t>(s)].square_rule = value;
    if (std::find(relation_ids_.begin(), relation_ids_.end(), s) == relation_ids_.end()) relation_ids_.push_back(s);
}

std::string SymbolTable::jet_name(const std::string& base, const std::vector<std::string>& derivs) {
    if (derivs.empty()) return base;
    std::string out = base + "_";
    for (const auto& d : derivs) out += d;
    return out;
}

void SymbolTable::declare_jet(const std::string& name, const std::vector<std::string>& vars, int order) {
    // Multi-indices as sorted vectors of variable positions; mixed partials commute.
    std::function<void(std::vector<std::size_t>&, std::size_t, int, std::vector<std::vector<std::size_t>>&)> gen =
        [&](std::vector<std::size_t>& cur, std::size_t start, int remaining, std::vector<std::vector<std::size_t>>& out) {
            out.push_back(cur);
            if (remaining == 0) return;
            for (std::size_t k = start; k < vars.size(); ++k) {
                cur.push_back(k);
                gen(cur, k, remaining - 1, out);
                cur.pop_back();
            }
        };
    std::vector<std::vector<std::size_t>> indices;
    std::vector<std::size_t> cur;
    gen(cur, 0, order, indices);
    auto to_name = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::string> d;
        for (auto k : idx) d.push_back(vars[k]);
        return jet_name(name, d);
    };
    for (const auto& idx : indices) declare(to_name(idx), SymbolKind::function, vars);
    for (const auto& idx : indices) {
        if (static_cast<int>(idx.size()) == order) continue;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            auto next = idx;
            next.push_back(k);
            std::sort(next.begin(), next.end());
            set_derivative(to_name(idx), vars[k], Fraction(Polynomial::variable(id(to_name(next)))));
        }
    }
}

std::optional<int> SymbolTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

int SymbolTable::id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw UnknownVariable(name);
    return it->second;
}

bool SymbolTable::accepts(const SymbolTable& other) const {
    if (other.uid_ == uid_) return true;
    return std::find(ancestors_.begin(), ancestors_.end(), other.uid_) != ancestors_.end();
}

Polynomial SymbolTable::reduce(const Polynomial& p) const {
    if (relation_ids_.empty()) return p;
    Polynomial out;
    std::vector<std::pair<Monomial, GaussRational>> work(p.terms().begin(), p.terms().end());
    std::size_t guard = 0;
    while (!work.empty()) {
        if (++guard > 1000000) throw Error("relation reduction did not terminate");
        auto [m, c] = std::move(work.back());
        work.pop_back();
        bool rewritten = false;
        for (int rid : relation_ids_) {
            const int e = m.exponent(rid);
            const Polynomial& rule = *symbols_[static_cast<std::size_t>(rid)].square_rule;
            Polynomial replacement;
            if (e >= 2) {
                replacement = rule * Polynomial::term(c, m * Monomial::power(rid, -2));
            } else if (e < 0 && rule.is_monomial()) {
                // v^-1 = v / rule when the rule is a single term.
                const auto& [rm, rc] = *rule.terms().begin();
                replacement = Polynomial::term(c / rc, m * Monomial::power(rid, 2) * rm.inverse());
            } else {
                continue;
            }
            for (const auto& t : replacement.terms()) work.emplace_back(t.first, t.second);
            rewritten = true;
            break;
        }
        if (!rewritten) out.add_term(m, c);
    }
    return out;
}

Fraction SymbolTable::reduce(const Fraction& f) const {
    if (relation_ids_.empty()) return f;
    bool factors_change = false;
    std::vector<DenominatorFactor> factors = f.factors();
    for (auto& fac : factors) {
        Polynomial r = reduce(fac.poly);
        if (r != fac.poly) {
            fac.poly = std::move(r);
            factors_change = true;
        }
    }
    Polynomial num = reduce(f.numerator());
    if (!factors_change && num == f.numerator()) return f;
    return Fraction::rebuild(std::move(num), factors);
}

}  // namespace fieldsym::exact
