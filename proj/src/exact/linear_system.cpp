#include "fieldsym/exact/linear_system.hpp"

#include "fieldsym/exact/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace fieldsym::exact {

std::map<std::string, MultiExpr> SolutionBranch::substitution() const {
    std::map<std::string, MultiExpr> out;
    for (const auto& pv : parameter_values) out.insert_or_assign(pv.parameter, pv.value);
    for (const auto& [u, v] : closed_form) out.insert_or_assign(u, v);
    return out;
}

namespace {

constexpr int kMaxDepth = 64;

struct State {
    std::vector<MultiExpr> equations;
    SolutionBranch branch;
    std::set<std::string> solved;
};

class Eliminator {
public:
    explicit Eliminator(const ParamLinearSystem& sys) : sys_(sys) {
        for (const auto& u : sys_.unknowns) (void)sys_.table->id(u);
        for (const auto& p : sys_.parameters) (void)sys_.table->id(p);
    }

    std::vector<SolutionBranch> run() {
        State s;
        s.equations = sys_.equations;
        process(std::move(s), 0);
        return std::move(done_);
    }

private:
    MultiExpr zero() const { return {sys_.table, GaussRational(0)}; }

    bool mentions_unknown(const MultiExpr& e) const {
        return std::any_of(sys_.unknowns.begin(), sys_.unknowns.end(), [&](const auto& u) { return e.mentions(u); });
    }

    MultiExpr coefficient(const MultiExpr& eq, const std::string& unknown) const {
        MultiExpr c = differentiate(eq, unknown);
        if (mentions_unknown(c)) throw NotLinear("equation is not linear in the unknowns: " + eq.to_string());
        return c;
    }

    /// Numerator with nonnegative exponents, as an expression.
    MultiExpr zero_set(const MultiExpr& e) const {
        auto n = normalize(e.value().numerator());
        Polynomial p = n.primitive;
        for (const auto& [id, exp] : n.monomial.factors())
            if (exp > 0) p = p * Polynomial::variable(id, exp);
        return {sys_.table, Fraction(p)};
    }

    /// Applies parameter := value everywhere; nullopt when an assumption is violated.
    std::optional<State> assign(State s, const std::string& param, const MultiExpr& value) const {
        if (value.mentions(param)) throw Error("parameter value refers to itself");
        auto sub = [&](const MultiExpr& e) { return substitute(e, param, value); };
        try {
            std::vector<MultiExpr> nonzero;
            for (const auto& c : s.branch.nonzero_conditions) {
                MultiExpr r = sub(c);
                if (r.is_zero()) return std::nullopt;
                if (!r.is_constant()) nonzero.push_back(zero_set(r));
            }
            s.branch.nonzero_conditions = std::move(nonzero);
            std::vector<MultiExpr> residual;
            for (const auto& c : s.branch.residual_constraints) {
                MultiExpr r = sub(c);
                if (r.is_zero()) continue;
                if (r.is_constant()) return std::nullopt;
                residual.push_back(zero_set(r));
            }
            s.branch.residual_constraints = std::move(residual);
            for (auto& eq : s.equations) eq = sub(eq);
            for (auto& rel : s.branch.relations) rel.value = sub(rel.value);
            for (auto& pv : s.branch.parameter_values) pv.value = sub(pv.value);
        } catch (const DivisionByZero&) {
            return std::nullopt;
        }
        s.branch.parameter_values.push_back({param, value});
        return s;
    }

    std::vector<std::string> candidate_parameters(const MultiExpr& e) const {
        std::vector<std::string> out;
        for (const auto& p : sys_.parameters)
            if (e.mentions(p)) out.push_back(p);
        for (const auto& name : e.free_symbols())
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        return out;
    }

    /// States in which p = 0 holds. The flag marks states where p = 0 was only recorded.
    std::vector<std::pair<State, bool>> impose(const State& s, const MultiExpr& expr, int depth) const {
        if (depth > kMaxDepth) throw Error("elimination branching too deep");
        std::vector<std::pair<State, bool>> out;
        if (expr.is_zero()) {
            out.emplace_back(s, false);
            return out;
        }
        if (expr.is_constant()) return out;
        const auto norm = normalize(expr.value().numerator());
        std::vector<std::string> content;
        for (const auto& [id, exp] : norm.monomial.factors())
            if (exp > 0) content.push_back(sys_.table->name(id));
        for (const auto& v : content)
            if (auto t = assign(s, v, zero())) out.emplace_back(std::move(*t), false);
        const MultiExpr q(sys_.table, Fraction(norm.primitive));
        if (q.is_constant()) return out;
        State base = s;
        for (const auto& v : content) base.branch.nonzero_conditions.push_back(MultiExpr::symbol(sys_.table, v));
        for (auto& r : solve_primitive(base, q, depth)) out.push_back(std::move(r));
        return out;
    }

    std::vector<std::pair<State, bool>> solve_primitive(const State& s, const MultiExpr& q, int depth) const {
        std::vector<std::pair<State, bool>> out;
        const Polynomial& poly = q.value().numerator();
        const auto params = candidate_parameters(q);
        for (const auto& param : params) {
            const int id = sys_.table->id(param);
            if (poly.min_degree(id) < 0 || poly.max_degree(id) != 1) continue;
            auto parts = poly.collect(id);
            const MultiExpr a(sys_.table, Fraction(parts[1]));
            const MultiExpr rest(sys_.table, Fraction(parts[0]));
            if (a.is_constant()) {
                if (auto t = assign(s, param, -rest / a)) out.emplace_back(std::move(*t), false);
                return out;
            }
            State nz = s;
            nz.branch.nonzero_conditions.push_back(zero_set(a));
            if (auto t = assign(nz, param, -rest / a)) out.emplace_back(std::move(*t), false);
            for (auto& [t, flag] : impose(s, a, depth + 1)) {
                const MultiExpr r = reduce_in(t, rest);
                for (auto& r2 : impose(t, r, depth + 1)) out.push_back(std::move(r2));
            }
            return out;
        }
        for (const auto& param : params) {
            const int id = sys_.table->id(param);
            if (poly.min_degree(id) < 0 || poly.max_degree(id) != 2) continue;
            auto parts = poly.collect(id);
            const MultiExpr a2(sys_.table, Fraction(parts[2]));
            if (!a2.is_constant()) continue;
            const Polynomial disc = parts[1] * parts[1] - parts[2] * parts[0] * Polynomial(GaussRational(4));
            auto root = disc.sqrt_exact();
            if (!root) continue;
            const MultiExpr a1(sys_.table, Fraction(parts[1]));
            const MultiExpr r(sys_.table, Fraction(*root));
            const MultiExpr two_a = a2 * GaussRational(2);
            std::vector<MultiExpr> roots{(-a1 + r) / two_a};
            if (!root->is_zero()) roots.push_back((-a1 - r) / two_a);
            for (const auto& v : roots)
                if (auto t = assign(s, param, v)) out.emplace_back(std::move(*t), false);
            return out;
        }
        State kept = s;
        kept.branch.residual_constraints.push_back(q);
        out.emplace_back(std::move(kept), true);
        return out;
    }

    static MultiExpr reduce_in(const State& s, const MultiExpr& e) {
        MultiExpr r = e;
        for (const auto& pv : s.branch.parameter_values) r = substitute(r, pv.parameter, pv.value);
        return r;
    }

    void process(State s, int depth) {
        if (depth > kMaxDepth) throw Error("elimination branching too deep");
        while (true) {
            std::vector<MultiExpr> eqs;
            for (auto& e : s.equations) {
                if (e.is_zero()) continue;
                if (e.is_constant()) return;
                eqs.push_back(std::move(e));
            }
            s.equations = std::move(eqs);
            if (s.equations.empty()) {
                finalize(std::move(s));
                return;
            }
            // Parameter-only equations first.
            auto param_eq = std::find_if(s.equations.begin(), s.equations.end(),
                                         [&](const MultiExpr& e) { return !mentions_unknown(e); });
            if (param_eq != s.equations.end()) {
                const MultiExpr e = *param_eq;
                s.equations.erase(param_eq);
                for (auto& [t, recorded] : impose(s, e, 0)) process(std::move(t), depth + 1);
                return;
            }
            std::string unknown;
            for (const auto& u : sys_.unknowns) {
                if (std::any_of(s.equations.begin(), s.equations.end(), [&](const auto& e) { return e.mentions(u); })) {
                    unknown = u;
                    break;
                }
            }
            std::size_t best = s.equations.size();
            MultiExpr best_coeff = zero();
            for (std::size_t k = 0; k < s.equations.size(); ++k) {
                if (!s.equations[k].mentions(unknown)) continue;
                MultiExpr c = coefficient(s.equations[k], unknown);
                if (c.is_zero()) continue;
                const bool better = best == s.equations.size() || (c.is_constant() && !best_coeff.is_constant()) ||
                                    (c.is_constant() == best_coeff.is_constant() &&
                                     c.value().numerator().size() < best_coeff.value().numerator().size());
                if (better) {
                    best = k;
                    best_coeff = c;
                }
            }
            if (best == s.equations.size()) throw NotLinear("unknown '" + unknown + "' does not appear linearly");
            if (best_coeff.is_constant()) {
                pivot(s, best, unknown, best_coeff);
                continue;
            }
            State nz = s;
            nz.branch.nonzero_conditions.push_back(zero_set(best_coeff));
            pivot(nz, best, unknown, best_coeff);
            process(std::move(nz), depth + 1);
            const MultiExpr term = MultiExpr::symbol(sys_.table, unknown) * best_coeff;
            for (auto& [t, recorded] : impose(s, best_coeff, 0)) {
                if (recorded) t.equations[best] -= reduce_in(t, term);
                process(std::move(t), depth + 1);
            }
            return;
        }
    }

    void pivot(State& s, std::size_t eq_index, const std::string& unknown, const MultiExpr& coeff) const {
        const MultiExpr eq = s.equations[eq_index];
        const MultiExpr sym = MultiExpr::symbol(sys_.table, unknown);
        const MultiExpr value = -(eq - sym * coeff) / coeff;
        s.equations.erase(s.equations.begin() + static_cast<std::ptrdiff_t>(eq_index));
        for (auto& e : s.equations) e = substitute(e, unknown, value);
        s.branch.relations.push_back({unknown, value});
        s.solved.insert(unknown);
    }

    void finalize(State s) {
        auto& b = s.branch;
        for (const auto& u : sys_.unknowns) {
            if (s.solved.count(u) == 0) {
                b.free_unknowns.push_back(u);
                b.closed_form.insert_or_assign(u, MultiExpr::symbol(sys_.table, u));
            }
        }
        for (auto it = b.relations.rbegin(); it != b.relations.rend(); ++it) {
            MultiExpr v = it->value;
            std::map<std::string, MultiExpr> known;
            for (const auto& [name, val] : b.closed_form)
                if (v.mentions(name)) known.emplace(name, val);
            if (!known.empty()) v = substitute(v, known);
            b.closed_form.insert_or_assign(it->unknown, v);
        }
        std::string key;
        auto sorted_values = b.parameter_values;
        std::sort(sorted_values.begin(), sorted_values.end(),
                  [](const auto& x, const auto& y) { return x.parameter < y.parameter; });
        for (const auto& pv : sorted_values) key += pv.parameter + "=" + pv.value.to_sexpr() + ";";
        for (const auto& [u, v] : b.closed_form) key += u + ":" + v.to_sexpr() + ";";
        for (const auto& r : b.residual_constraints) key += "r" + r.to_sexpr() + ";";
        if (!keys_.insert(key).second) return;
        done_.push_back(std::move(b));
    }

    const ParamLinearSystem& sys_;
    std::vector<SolutionBranch> done_;
    std::set<std::string> keys_;
};

}  // namespace

SolutionDescription eliminate(const ParamLinearSystem& sys) {
    if (!sys.table) throw Error("linear system without symbol table");
    if (sys.equations.empty()) throw Error("linear system has no equations");
    SolutionDescription out;
    out.branches = Eliminator(sys).run();
    if (out.branches.empty()) throw InconsistentSystem("no branch of the linear system is consistent");
    return out;
}

}  // namespace fieldsym::exact
