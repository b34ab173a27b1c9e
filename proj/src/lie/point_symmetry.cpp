#include "fieldsym/lie/point_symmetry.hpp"

#include "fieldsym/su11/spectrum.hpp"

#include <algorithm>
#include <set>

namespace fieldsym::lie {

using exact::Fraction;
using exact::Polynomial;
using exact::SymbolKind;
using exact::SymbolTable;

namespace {

std::optional<mpq_class> numeric(const MultiExpr& e) {
    auto v = e.constant_value();
    if (v && v->is_real()) return v->re();
    return std::nullopt;
}

const char* const kSolutionSymbols[] = {"alpha", "alpha2", "delta"};

}  // namespace

RadialCase RadialCase::from_spec(const su11::ODESpec& o) { return {numeric(o.C), numeric(o.D), numeric(o.E_hat)}; }

Context::Context(const RadialCase& rc) : case_(rc) {
    auto t = SymbolTable::create();
    for (const char* c : {"x", "u", "up"}) t->declare(c, SymbolKind::coordinate);
    for (const char* p : {"C", "D", "E_hat", "kappa", "p", "q"}) t->declare(p, SymbolKind::parameter);
    for (int k = 0; k <= 9; ++k) t->declare("g" + std::to_string(k), SymbolKind::parameter);
    for (int k = 1; k <= 8; ++k) t->declare("a" + std::to_string(k), SymbolKind::parameter);
    t->declare_jet("xi", {"x", "u"}, 2);
    t->declare_jet("eta", {"x", "u"}, 2);
    t->declare_jet("beta", {"x"}, 5);
    t->declare_jet("gamma", {"x"}, 3);
    t->declare_jet("alpha_f", {"x"}, 3);
    t->declare_jet("delta_f", {"x"}, 3);
    for (const char* f : kSolutionSymbols) {
        t->declare(f, SymbolKind::function, {"x"});
        t->declare(std::string(f) + "_x", SymbolKind::function, {"x"});
    }
    for (const char* f : {"sin1", "cos1", "sin2", "cos2", "sin3", "cos3"}) t->declare(f, SymbolKind::function, {"x"});
    table_ = t;

    const MultiExpr minus_F = -F();
    for (const char* f : kSolutionSymbols) {
        const std::string fx = std::string(f) + "_x";
        t->set_derivative(f, "x", sym(fx).value());
        t->set_derivative(fx, "x", (minus_F * sym(f)).value());
    }
    for (const auto& [s, c, rate] : {std::tuple{"sin1", "cos1", 1}, {"sin2", "cos2", 1}, {"sin3", "cos3", 2}}) {
        t->set_derivative(s, "x", (sym(c) * GaussRational(rate)).value());
        t->set_derivative(c, "x", (sym(s) * GaussRational(-rate)).value());
        t->set_square_rule(c, (num(GaussRational(1)) - sym(s).pow(2)).value().numerator());
    }
}

MultiExpr Context::C() const { return case_.C ? num(GaussRational(*case_.C)) : sym("C"); }
MultiExpr Context::D() const { return case_.D ? num(GaussRational(*case_.D)) : sym("D"); }
MultiExpr Context::E_hat() const { return case_.E_hat ? num(GaussRational(*case_.E_hat)) : sym("E_hat"); }

MultiExpr Context::F() const {
    const MultiExpr x = sym("x");
    return C() / x.pow(2) + D() / x + E_hat();
}

MultiExpr Context::omega() const { return -F() * sym("u"); }

std::vector<std::string> Context::symbolic_parameters() const {
    std::vector<std::string> out;
    if (!case_.C) out.push_back("C");
    if (!case_.E_hat) out.push_back("E_hat");
    if (!case_.D) out.push_back("D");
    return out;
}

Jets Jets::generic(const Context& ctx) {
    auto s = [&](const char* n) { return ctx.sym(n); };
    return {s("xi"), s("xi_x"), s("xi_u"), s("xi_xx"), s("xi_xu"), s("xi_uu"),
            s("eta"), s("eta_x"), s("eta_u"), s("eta_xx"), s("eta_xu"), s("eta_uu")};
}

Jets Jets::of(const MultiExpr& xi, const MultiExpr& eta) {
    using exact::differentiate;
    const MultiExpr xi_x = differentiate(xi, "x");
    const MultiExpr xi_u = differentiate(xi, "u");
    const MultiExpr eta_x = differentiate(eta, "x");
    const MultiExpr eta_u = differentiate(eta, "u");
    return {xi, xi_x, xi_u, differentiate(xi_x, "x"), differentiate(xi_x, "u"), differentiate(xi_u, "u"),
            eta, eta_x, eta_u, differentiate(eta_x, "x"), differentiate(eta_x, "u"), differentiate(eta_u, "u")};
}

MultiExpr symmetry_condition(const MultiExpr& omega, const Jets& j) {
    using exact::differentiate;
    const MultiExpr up = MultiExpr::symbol(j.xi.table()->accepts(*omega.table()) ? j.xi.table() : omega.table(), "up");
    const GaussRational two(2);
    const GaussRational three(3);
    return omega * (j.eta_u - two * j.xi_x - three * up * j.xi_u) - differentiate(omega, "x") * j.xi -
           differentiate(omega, "u") * j.eta -
           differentiate(omega, "up") * (j.eta_x + up * (j.eta_u - j.xi_x) - up.pow(2) * j.xi_u) + j.eta_xx +
           up * (two * j.eta_xu - j.xi_xx) + up.pow(2) * (j.eta_uu - two * j.xi_xu) - up.pow(3) * j.xi_uu;
}

MultiExpr determining_equation(const Context& ctx, const MultiExpr& omega) {
    return symmetry_condition(omega, Jets::generic(ctx));
}

std::map<int, MultiExpr> split_determining(const MultiExpr& cond) { return exact::collect_powers(cond, "up"); }

namespace {

MultiExpr part(const std::map<int, MultiExpr>& m, int k, const TablePtr& t) {
    auto it = m.find(k);
    return it == m.end() ? MultiExpr(t, GaussRational(0)) : it->second;
}

bool is_beta_jet(const std::string& name, int& order) {
    if (name == "beta") {
        order = 0;
        return true;
    }
    if (name.rfind("beta_", 0) != 0) return false;
    const std::string tail = name.substr(5);
    if (tail.empty() || tail.find_first_not_of('x') != std::string::npos) return false;
    order = static_cast<int>(tail.size());
    return true;
}

std::string beta_jet(int order) { return order == 0 ? "beta" : "beta_" + std::string(static_cast<std::size_t>(order), 'x'); }

/// Antiderivative of sum c_k beta^(k) with constant c_k and k >= 1, plus kappa.
MultiExpr integrate_beta_combination(const Context& ctx, const MultiExpr& e) {
    MultiExpr out = ctx.sym("kappa");
    MultiExpr rest = e;
    for (const auto& name : e.free_symbols()) {
        int order = 0;
        if (!is_beta_jet(name, order)) continue;
        auto by = exact::collect_powers(rest, name);
        const MultiExpr c = part(by, 1, ctx.table());
        if (by.size() > 2 || !c.is_constant() || order == 0)
            throw ReductionResidue("up^1 equation is not an exact derivative in beta: " + e.to_string());
        out += c * ctx.sym(beta_jet(order - 1));
        rest = part(by, 0, ctx.table());
    }
    if (!rest.is_zero()) throw ReductionResidue("up^1 equation leaves " + rest.to_string());
    return out;
}

}  // namespace

AnsatzReduction ansatz_reduce(const Context& ctx) {
    const TablePtr& t = ctx.table();
    const MultiExpr u = ctx.sym("u");
    const MultiExpr omega = ctx.omega();
    const MultiExpr zero(t, GaussRational(0));
    AnsatzReduction r{determining_equation(ctx, omega), {}, zero, zero, zero, zero, zero};
    r.split = split_determining(r.condition);

    // Free alpha: the coefficient before the radial equation is imposed on alpha.
    {
        const MultiExpr xi = u * ctx.sym("alpha_f") + ctx.sym("beta");
        const MultiExpr eta = u.pow(2) * ctx.sym("alpha_f_x") + u * ctx.sym("gamma") + ctx.sym("delta_f");
        r.intermediate = part(split_determining(symmetry_condition(omega, Jets::of(xi, eta))), 1, t);
    }

    const MultiExpr xi = u * ctx.sym("alpha") + ctx.sym("beta");
    auto eta_with = [&](const MultiExpr& gamma) {
        return u.pow(2) * ctx.sym("alpha_x") + u * gamma + ctx.sym("delta_f");
    };
    auto split = split_determining(symmetry_condition(omega, Jets::of(xi, eta_with(ctx.sym("gamma")))));
    for (int k : {3, 2})
        if (!part(split, k, t).is_zero())
            throw ReductionResidue("up^" + std::to_string(k) + " equation survives the ansatz: " + part(split, k, t).to_string());
    r.up1_reduced = part(split, 1, t);

    auto by_gamma = exact::collect_powers(r.up1_reduced, "gamma_x");
    const MultiExpr g_coeff = part(by_gamma, 1, t);
    if (by_gamma.size() > 2 || !g_coeff.is_constant() || g_coeff.is_zero() || part(by_gamma, 0, t).mentions("gamma"))
        throw ReductionResidue("up^1 equation is not solvable for gamma': " + r.up1_reduced.to_string());
    const MultiExpr gamma_x = -part(by_gamma, 0, t) / g_coeff;
    r.gamma_value = integrate_beta_combination(ctx, gamma_x);

    auto rest = split_determining(symmetry_condition(omega, Jets::of(xi, eta_with(r.gamma_value))));
    for (const auto& [k, c] : rest)
        if (k != 0 && !c.is_zero()) throw ReductionResidue("up^" + std::to_string(k) + " survives after gamma is fixed");
    auto by_u = exact::collect_powers(part(rest, 0, t), "u");
    for (const auto& [k, c] : by_u)
        if (k != 0 && k != 1 && !c.is_zero())
            throw ReductionResidue("u^" + std::to_string(k) + " part does not vanish: " + c.to_string());
    r.delta_equation = part(by_u, 0, t);
    const MultiExpr delta_rule = substitute(r.delta_equation, "delta_f_xx", -ctx.F() * ctx.sym("delta_f"));
    if (!delta_rule.is_zero()) throw ReductionResidue("u^0 part is not the radial equation for delta: " + r.delta_equation.to_string());

    const MultiExpr beq = part(by_u, 1, t);
    const MultiExpr lead = part(exact::collect_powers(beq, "beta_xxx"), 1, t);
    if (!lead.is_constant() || lead.is_zero()) throw ReductionResidue("beta equation is not third order: " + beq.to_string());
    r.beta_equation = beq / lead;
    return r;
}

MultiExpr beta_equation_reference(const Context& ctx) {
    const MultiExpr x = ctx.sym("x");
    return ctx.sym("beta_xxx") + GaussRational(4) * ctx.F() * ctx.sym("beta_x") -
           (GaussRational(4) * ctx.C() / x.pow(3) + GaussRational(2) * ctx.D() / x.pow(2)) * ctx.sym("beta");
}

std::vector<std::string> ansatz_coefficients(int N) {
    if (N < 0 || N > 9) throw Error("ansatz degree must lie in [0, 9]");
    if (N == 1) return {"q", "p"};
    std::vector<std::string> out;
    for (int k = 0; k <= N; ++k) out.push_back("g" + std::to_string(k));
    return out;
}

namespace {

std::map<std::string, MultiExpr> beta_jet_values(const MultiExpr& beta) {
    std::map<std::string, MultiExpr> out;
    MultiExpr d = beta;
    for (int k = 0; k <= 5; ++k) {
        out.insert_or_assign(beta_jet(k), d);
        d = exact::differentiate(d, "x");
    }
    return out;
}

MultiExpr constrained(const MultiExpr& e, const std::map<std::string, MultiExpr>& values) {
    return values.empty() ? e : substitute(e, values);
}

}  // namespace

bool link_holds(const Context& ctx, int N, const std::map<std::string, MultiExpr>& constraints) {
    auto C = numeric(constrained(ctx.C(), constraints));
    if (!C) return false;
    auto r = exact::rational_sqrt(1 - 4 * *C);
    if (!r) return false;
    const mpq_class den = 2 * N + 1 - *r;
    if (sgn(den) <= 0) return false;
    const MultiExpr D = constrained(ctx.D(), constraints);
    const MultiExpr E = constrained(ctx.E_hat(), constraints);
    if (D.is_zero() || E.mentions("E_hat")) return false;
    if (auto d = numeric(D); d && sgn(*d) <= 0) return false;
    return (D.pow(2) + E * GaussRational(den * den)).is_zero();
}

std::vector<SymmetryFamily> solve_beta_ansatz(const Context& ctx, int N) {
    const auto names = ansatz_coefficients(N);
    const TablePtr& t = ctx.table();
    const MultiExpr beq = ansatz_reduce(ctx).beta_equation;
    const MultiExpr x = ctx.sym("x");
    MultiExpr beta(t, GaussRational(0));
    for (int k = 0; k <= N; ++k) beta += ctx.sym(names[static_cast<std::size_t>(k)]) / x.pow(k);
    const MultiExpr residual = substitute(beq, beta_jet_values(beta));

    exact::SolutionDescription desc;
    if (residual.is_zero()) {
        exact::SolutionBranch all;
        all.free_unknowns = names;
        for (const auto& n : names) all.closed_form.emplace(n, ctx.sym(n));
        desc.branches.push_back(all);
    } else {
        exact::ParamLinearSystem sys{t, names, ctx.symbolic_parameters(), {}};
        for (const auto& [k, c] : exact::collect_powers(residual, "x")) sys.equations.push_back(c);
        desc = exact::eliminate(sys);
    }

    std::vector<SymmetryFamily> out;
    for (const auto& b : desc.branches) {
        if (std::find(b.free_unknowns.begin(), b.free_unknowns.end(), names.back()) == b.free_unknowns.end()) continue;
        SymmetryFamily fam{N, names, b, {}, beta, false, MultiExpr(t, GaussRational(0))};
        for (const auto& pv : b.parameter_values) fam.constraints.insert_or_assign(pv.parameter, pv.value);
        fam.beta = substitute(beta, b.substitution());
        fam.back_substitution = constrained(substitute(beq, beta_jet_values(fam.beta)), fam.constraints);
        if (!fam.back_substitution.is_zero())
            throw Error("family fails back-substitution: " + fam.back_substitution.to_string());
        fam.link_consistent = link_holds(ctx, N, fam.constraints);
        out.push_back(std::move(fam));
    }
    if (out.empty()) throw OnlyTrivial("the degree-" + std::to_string(N) + " ansatz admits only lower-degree or zero beta");
    std::stable_sort(out.begin(), out.end(), [](const SymmetryFamily& a, const SymmetryFamily& b) {
        if (a.link_consistent != b.link_consistent) return a.link_consistent;
        return a.constraints.size() < b.constraints.size();
    });
    return out;
}

PointVectorField point_field(const Context& ctx, const MultiExpr& xi, const MultiExpr& eta) {
    (void)ctx;
    return {{"x", "u"}, {xi, eta}};
}

PointVectorField build_vector_field(const Context& ctx, const SymmetryFamily& fam, const FieldOptions& opt) {
    const MultiExpr u = ctx.sym("u");
    const MultiExpr zero = ctx.num(GaussRational(0));
    const MultiExpr a = opt.alpha ? ctx.sym(opt.alpha_symbol) : zero;
    const MultiExpr a_x = opt.alpha ? ctx.sym(opt.alpha_symbol + "_x") : zero;
    const MultiExpr xi = u * a + fam.beta;
    const MultiExpr eta = u.pow(2) * a_x +
                          u * (exact::differentiate(fam.beta, "x") / GaussRational(2) + (opt.kappa ? ctx.sym("kappa") : zero)) +
                          (opt.delta ? ctx.sym("delta") : zero);
    return point_field(ctx, xi, eta);
}

MultiExpr verify_point_symmetry(const Context& ctx, const PointVectorField& X,
                                const std::map<std::string, MultiExpr>& constraints) {
    const MultiExpr cond = symmetry_condition(ctx.omega(), Jets::of(X.component("x"), X.component("u")));
    return constrained(cond, constraints);
}

std::vector<PrintedCheck> compare_printed(const SymmetryFamily& fam,
                                          const std::vector<std::pair<std::string, MultiExpr>>& relations,
                                          const std::vector<std::pair<std::string, MultiExpr>>& parameters) {
    const auto S = fam.branch.substitution();
    std::vector<PrintedCheck> out;
    auto check = [&](const std::string& name, const MultiExpr& value, const std::string& verified) {
        const MultiExpr lhs = MultiExpr::symbol(value.table(), name);
        PrintedCheck c{name, name + " = " + value.to_string(), false, "", ""};
        try {
            const MultiExpr res = substitute(lhs - value, S);
            c.holds = res.is_zero();
            c.residual = res.to_string();
        } catch (const exact::DivisionByZero&) {
            c.residual = "undefined on this branch (division by zero)";
        }
        if (!c.holds) c.verified = verified;
        out.push_back(std::move(c));
    };
    for (const auto& [name, value] : relations) {
        std::string verified = name + " = ";
        auto rel = std::find_if(fam.branch.relations.begin(), fam.branch.relations.end(),
                                [&](const auto& r) { return r.unknown == name; });
        auto cf = fam.branch.closed_form.find(name);
        if (cf != fam.branch.closed_form.end()) verified += cf->second.to_string();
        if (rel != fam.branch.relations.end() && cf != fam.branch.closed_form.end() && !(rel->value == cf->second))
            verified += " (equivalently " + name + " = " + rel->value.to_string() + ")";
        check(name, value, verified);
    }
    for (const auto& [name, value] : parameters) {
        auto it = fam.constraints.find(name);
        check(name, value, name + " = " + (it == fam.constraints.end() ? std::string("free") : it->second.to_string()));
    }
    return out;
}

std::vector<std::pair<std::string, MultiExpr>> printed_relations(const Context& ctx, int N) {
    const MultiExpr D = ctx.D();
    const MultiExpr E = ctx.E_hat();
    auto g = [&](int k) { return ctx.sym("g" + std::to_string(k)); };
    switch (N) {
        case 1:
            return {{"q", GaussRational(2) * ctx.sym("p") * D}};
        case 2:
            return {{"g0", -(GaussRational(2) * E / D) * g(1)}, {"g1", GaussRational(2) * D * g(2)}};
        case 3: {
            const MultiExpr den = GaussRational(9) * E + GaussRational(5) * D.pow(2);
            return {{"g3", GaussRational(3) / (GaussRational(2) * D) * g(2)},
                    {"g2", GaussRational(12) * D / den * g(1)},
                    {"g1", GaussRational(5) / (GaussRational(32) * D * E / den + GaussRational(2) * D) * g(0)}};
        }
        default:
            return {};
    }
}

std::vector<std::pair<std::string, MultiExpr>> printed_parameters(const Context& ctx, int N) {
    const MultiExpr D = ctx.D();
    switch (N) {
        case 1:
            return {{"C", ctx.num(GaussRational::ratio(-3, 4))}, {"E_hat", -D.pow(2)}};
        case 2:
            return {{"C", ctx.num(GaussRational(-2))}, {"E_hat", -D.pow(2) / GaussRational(4)}};
        case 3:
            return {{"C", ctx.num(GaussRational::ratio(-15, 4))}};
        default:
            return {};
    }
}

PointVectorField printed_field_n1(const Context& ctx) {
    const MultiExpr u = ctx.sym("u");
    const MultiExpr x = ctx.sym("x");
    const MultiExpr p = ctx.sym("p");
    return point_field(ctx, u * ctx.sym("alpha") + p / x + GaussRational(2) * p * ctx.D(),
                       u.pow(2) * ctx.sym("alpha_x") - u * p / x.pow(2) + u * ctx.sym("kappa") + ctx.sym("delta"));
}

PointVectorField printed_field_n2(const Context& ctx) {
    const MultiExpr u = ctx.sym("u");
    const MultiExpr x = ctx.sym("x");
    const MultiExpr g0 = ctx.sym("g0");
    const MultiExpr D = ctx.D();
    const MultiExpr E = ctx.E_hat();
    const GaussRational two(2);
    const MultiExpr xi = u * ctx.sym("alpha") +
                         (GaussRational(1) / (GaussRational(4) * E * x.pow(2)) - two * E / (D * x)) * g0;
    const MultiExpr eta = u.pow(2) * ctx.sym("alpha_x") -
                          u * ((GaussRational(1) / (two * E * x.pow(3)) - two * E / (D * x.pow(2))) * g0 - ctx.sym("kappa")) +
                          ctx.sym("delta");
    return point_field(ctx, xi, eta);
}

PointVectorField printed_trig_field(const Context& ctx) {
    const MultiExpr u = ctx.sym("u");
    auto a = [&](int k) { return ctx.sym("a" + std::to_string(k)); };
    return point_field(ctx, a(1) * u * ctx.sym("sin1") + a(7) * ctx.sym("sin3") + a(6),
                       a(1) * u.pow(2) * ctx.sym("cos1") + u * (a(7) * ctx.sym("sin3") + a(5)) + a(3) * ctx.sym("sin2"));
}

PointVectorField corrected_trig_field(const Context& ctx) {
    const MultiExpr u = ctx.sym("u");
    auto a = [&](int k) { return ctx.sym("a" + std::to_string(k)); };
    return point_field(ctx, a(1) * u * ctx.sym("sin1") + a(7) * ctx.sym("sin3") + a(6),
                       a(1) * u.pow(2) * ctx.sym("cos1") + u * (a(7) * ctx.sym("cos3") + a(5)) + a(3) * ctx.sym("sin2"));
}

PointVectorField projective_field(const Context& ctx) {
    const MultiExpr x = ctx.sym("x");
    const MultiExpr u = ctx.sym("u");
    auto a = [&](int k) { return ctx.sym("a" + std::to_string(k)); };
    return point_field(ctx, a(1) + a(2) * x + a(3) * u + a(4) * x * u + a(5) * x.pow(2),
                       a(6) + a(7) * x + a(8) * u + a(5) * x * u + a(4) * u.pow(2));
}

FamilyMembers family_members(const Context& ctx, const SymmetryFamily& fam) {
    const MultiExpr u = ctx.sym("u");
    const MultiExpr zero = ctx.num(GaussRational(0));
    std::map<std::string, MultiExpr> unit;
    for (const auto& f : fam.branch.free_unknowns) unit.insert_or_assign(f, ctx.num(GaussRational(1)));
    const MultiExpr beta = substitute(fam.beta, unit);
    auto alpha_member = [&](const std::string& a) {
        return point_field(ctx, u * ctx.sym(a), u.pow(2) * ctx.sym(a + "_x"));
    };
    return {alpha_member("alpha"), alpha_member("alpha2"),
            point_field(ctx, beta, u * exact::differentiate(beta, "x") / GaussRational(2)),
            point_field(ctx, zero, u), point_field(ctx, zero, ctx.sym("delta"))};
}

std::vector<std::string> xi_keys(const Context& ctx, const MultiExpr& xi) {
    if (!xi.value().is_polynomial()) throw Error("xi-component has a non-monomial denominator: " + xi.to_string());
    const auto& t = *ctx.table();
    const int u_id = t.id("u");
    const int x_id = t.id("x");
    std::set<std::string> keys;
    for (const auto& [m, c] : xi.value().numerator().terms()) {
        std::string key = "u^" + std::to_string(m.exponent(u_id));
        for (const auto& [id, e] : m.factors()) {
            const std::string& name = t.info(id).name;
            std::string cls;
            if (name == "alpha" || name == "alpha2") cls = "alpha";
            else if (name == "alpha_x" || name == "alpha2_x") cls = "alpha'";
            else if (name == "delta") cls = "delta";
            else if (name == "delta_x") cls = "delta'";
            if (!cls.empty()) key += "*" + cls + (e == 1 ? "" : "^" + std::to_string(e));
        }
        key += "*x^" + std::to_string(m.exponent(x_id));
        keys.insert(key);
    }
    return {keys.begin(), keys.end()};
}

ClosureCertificate closure_certificate(const Context& ctx, const SymmetryFamily& fam, bool include_kappa) {
    const FamilyMembers m = family_members(ctx, fam);
    std::vector<std::pair<std::string, PointVectorField>> members{
        {"X_alpha", m.alpha}, {"X_alpha2", m.alpha2}, {"X_beta", m.beta}, {"X_delta", m.delta}};
    if (include_kappa) members.emplace_back("X_kappa", m.kappa);

    ClosureCertificate cert;
    cert.include_kappa = include_kappa;
    std::set<std::string> family;
    for (const auto& [name, X] : members)
        for (const auto& k : xi_keys(ctx, X.component("x"))) family.insert(k);
    cert.family_keys.assign(family.begin(), family.end());

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            BracketCheck b{members[i].first, members[j].first,
                           bracket(members[i].second, members[j].second).substituted(fam.constraints), {}, false};
            for (const auto& k : xi_keys(ctx, b.value.component("x")))
                if (family.count(k) == 0) b.outside_keys.push_back(k);
            const MultiExpr xi = b.value.component("x");
            auto by_u = exact::collect_powers(xi, "u");
            if (!xi.is_zero() && by_u.size() == 1 && by_u.count(1) != 0) {
                const MultiExpr f = by_u.at(1);
                const MultiExpr ode = exact::differentiate(exact::differentiate(f, "x"), "x") + ctx.F() * f;
                b.coefficient_solves_equation = constrained(ode, fam.constraints).is_zero();
            }
            if (!b.outside_keys.empty()) cert.non_closure = true;
            cert.brackets.push_back(std::move(b));
        }
    }
    return cert;
}

}  // namespace fieldsym::lie
