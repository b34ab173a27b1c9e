#include "fieldsym/su11/spectrum.hpp"

#include "fieldsym/exact/symbol_table.hpp"

namespace fieldsym::su11 {

using exact::Fraction;
using exact::Polynomial;
using exact::SymbolKind;
using exact::SymbolTable;

CommutatorViolation::CommutatorViolation(int k, std::string identity, LaurentPoly residual)
    : Error("commutator " + identity + " violated on s^" + std::to_string(k) + ": residual " + residual.to_string()),
      k_(k), identity_(std::move(identity)), residual_(std::move(residual)) {}

TablePtr physics_table(const std::optional<mpq_class>& omega_B_squared) {
    auto t = SymbolTable::create();
    for (const char* name : {"m", "hbar", "omega_B", "k_y", "k_z", "E", "E_hat", "n"})
        t->declare(name, SymbolKind::parameter);
    if (omega_B_squared) t->set_square_rule("omega_B", Polynomial(GaussRational(*omega_B_squared)));
    return t;
}

PhysicalParams PhysicalParams::symbolic(const TablePtr& table) {
    auto s = [&](const char* n) { return MultiExpr::symbol(table, n); };
    return {s("m"), s("hbar"), s("omega_B"), s("k_y"), s("k_z")};
}

PhysicalParams PhysicalParams::rational(const TablePtr& table, const mpq_class& m, const mpq_class& hbar,
                                        const mpq_class& omega_B, const mpq_class& k_y, const mpq_class& k_z) {
    auto c = [&](const mpq_class& v) { return MultiExpr(table, GaussRational(v)); };
    PhysicalParams p{c(m), c(hbar), c(omega_B), c(k_y), c(k_z)};
    p.validate();
    return p;
}

void PhysicalParams::validate() const {
    for (const auto& [name, v] : {std::pair<const char*, const MultiExpr*>{"m", &m}, {"hbar", &hbar}}) {
        auto c = v->constant_value();
        if (c && (!c->is_real() || sgn(c->re()) <= 0)) throw Error(std::string(name) + " must be positive");
    }
}

ODESpec ODESpec::rational(const mpq_class& C, const mpq_class& D, std::string label) {
    TablePtr t = physics_table();
    return {MultiExpr(t, GaussRational(C)), MultiExpr(t, GaussRational(D)), MultiExpr::symbol(t, "E_hat"),
            std::move(label), std::nullopt};
}

ODESpec ODESpec::kratzer(const mpq_class& A, const mpq_class& a) {
    return rational(A * a * a / 2, -A * a, "kratzer");
}

ODESpec build_radial(const PhysicalParams& p) {
    p.validate();
    const TablePtr& t = p.m.table();
    ODESpec o{GaussRational(-4) * p.m.pow(2) * p.omega_B.pow(2) / p.hbar.pow(2),
              GaussRational(-4) * p.k_y * p.m * p.omega_B / p.hbar,
              MultiExpr::symbol(t, "E_hat"),
              "radial",
              std::nullopt};
    o.E_hat_definition = GaussRational(2) * p.m * MultiExpr::symbol(t, "E") / p.hbar.pow(2) - (p.k_y.pow(2) + p.k_z.pow(2));
    return o;
}

OscillatorForm to_oscillator_form(const ODESpec& o) {
    return {(GaussRational(16) * o.C - GaussRational(3)) / GaussRational(4), GaussRational(4) * o.E_hat,
            GaussRational(4) * o.D};
}

OscillatorForm oscillator_form_by_substitution(const ODESpec& o) {
    auto t = o.C.table()->extend();
    t->declare("s", SymbolKind::coordinate);
    t->declare("h", SymbolKind::function, {"s"});  // h = s^(1/2)
    t->declare_jet("R", {"s"}, 2);
    const TablePtr tp = t;
    const MultiExpr s = MultiExpr::symbol(tp, "s");
    const MultiExpr h = MultiExpr::symbol(tp, "h");
    t->set_derivative("h", "s", (h / (GaussRational(2) * s)).value());
    t->set_square_rule("h", Polynomial::variable(t->id("s")));

    const MultiExpr u = h * MultiExpr::symbol(tp, "R");
    const MultiExpr dx_ds = GaussRational(2) * s;
    const MultiExpr u_x = differentiate(u, "s") / dx_ds;
    const MultiExpr u_xx = differentiate(u_x, "s") / dx_ds;
    const MultiExpr x = s.pow(2);
    const MultiExpr lhs = u_xx + (o.C.lift(tp) / x.pow(2) + o.D.lift(tp) / x + o.E_hat.lift(tp)) * u;
    const MultiExpr scaled = lhs * GaussRational(4) * s * h;

    auto by_rss = exact::collect_powers(scaled, "R_ss");
    if (by_rss.size() != 2 || by_rss.count(1) == 0 || !(by_rss.at(1) == MultiExpr(tp, GaussRational(1))))
        throw Error("substituted equation is not monic in R''");
    auto by_rs = exact::collect_powers(by_rss.at(0), "R_s");
    if (by_rs.count(1) != 0) throw Error("substituted equation keeps a first-derivative term");
    auto by_r = exact::collect_powers(by_rs.at(0), "R");
    if (by_r.size() != 1 || by_r.count(1) == 0) throw Error("substituted equation is not linear in R");
    const MultiExpr f = by_r.at(1);
    if (f.mentions("h")) throw Error("half-integer powers of s survive the substitution");
    auto powers = exact::collect_powers(f, "s");
    const MultiExpr zero(tp, GaussRational(0));
    auto get = [&](int k) { return powers.count(k) ? powers.at(k) : zero; };
    for (const auto& [k, c] : powers)
        if (k != -2 && k != 0 && k != 2) throw Error("unexpected power s^" + std::to_string(k));
    return {get(-2), get(2), get(0)};
}

namespace {

LaurentPoly times_power(const LaurentPoly& f, int k, const GaussRational& c) {
    return c * f.shifted(k);
}

}  // namespace

LaurentPoly apply_generator(Generator which, const Realization& r, const LaurentPoly& f) {
    switch (which) {
        case Generator::gamma1:
            return f.derivative().derivative() + times_power(f, -2, r.alpha) + times_power(f, 2, r.gamma1_quadratic);
        case Generator::gamma3:
            return f.derivative().derivative() + times_power(f, -2, r.alpha) + times_power(f, 2, r.gamma3_quadratic);
        case Generator::gamma2: {
            const GaussRational minus_half_i = GaussRational(mpq_class(0), mpq_class(-1, 2));
            return minus_half_i * (f.derivative().shifted(1) + GaussRational::ratio(1, 2) * f);
        }
    }
    throw Error("unknown generator");
}

LaurentPoly apply_generator(Generator which, const GaussRational& alpha, const LaurentPoly& f) {
    return apply_generator(which, Realization{alpha}, f);
}

CommutatorReport check_commutators(const Realization& r, int k_min, int k_max) {
    if (k_min > k_max) throw Error("empty k range");
    const GaussRational i = GaussRational::imaginary_unit();
    auto g = [&](Generator w, const LaurentPoly& f) { return apply_generator(w, r, f); };
    auto comm = [&](Generator a, Generator b, const LaurentPoly& f) { return g(a, g(b, f)) - g(b, g(a, f)); };
    CommutatorReport report{r.alpha, {}};
    for (int k = k_min; k <= k_max; ++k) {
        const LaurentPoly f = LaurentPoly::monomial("s", k);
        CommutatorResidual res{k,
                               comm(Generator::gamma1, Generator::gamma2, f) + i * g(Generator::gamma3, f),
                               comm(Generator::gamma2, Generator::gamma3, f) - i * g(Generator::gamma1, f),
                               comm(Generator::gamma3, Generator::gamma1, f) - i * g(Generator::gamma2, f)};
        if (!res.r12.is_zero()) throw CommutatorViolation(k, "[G1,G2] = -i G3", res.r12);
        if (!res.r23.is_zero()) throw CommutatorViolation(k, "[G2,G3] = i G1", res.r23);
        if (!res.r31.is_zero()) throw CommutatorViolation(k, "[G3,G1] = i G2", res.r31);
        report.residuals.push_back(std::move(res));
    }
    return report;
}

CommutatorReport check_commutators(const GaussRational& alpha, int k_min, int k_max) {
    return check_commutators(Realization{alpha}, k_min, k_max);
}

GaussRational casimir_scalar(const Realization& r, int k_min, int k_max) {
    if (k_min > k_max) throw Error("empty k range");
    auto g = [&](Generator w, const LaurentPoly& f) { return apply_generator(w, r, f); };
    std::optional<GaussRational> value;
    for (int k = k_min; k <= k_max; ++k) {
        const LaurentPoly f = LaurentPoly::monomial("s", k);
        const LaurentPoly c = g(Generator::gamma3, g(Generator::gamma3, f)) - g(Generator::gamma1, g(Generator::gamma1, f)) -
                              g(Generator::gamma2, g(Generator::gamma2, f));
        const GaussRational gamma = c.coefficient(k);
        if (!(c == gamma * f)) throw NotScalar("Casimir image of s^" + std::to_string(k) + " is " + c.to_string());
        if (value && *value != gamma)
            throw NotScalar("Casimir eigenvalue depends on k: " + value->to_string() + " vs " + gamma.to_string());
        value = gamma;
    }
    return *value;
}

GaussRational casimir_scalar(const GaussRational& alpha, int k_min, int k_max) {
    return casimir_scalar(Realization{alpha}, k_min, k_max);
}

LaurentPoly decomposition_residual(const GaussRational& a, const GaussRational& b, const GaussRational& c, int k) {
    const Realization r{a};
    const LaurentPoly f = LaurentPoly::monomial("s", k);
    const GaussRational half = GaussRational::ratio(1, 2);
    const LaurentPoly lhs = (half + GaussRational(8) * b) * apply_generator(Generator::gamma1, r, f) +
                            (half - GaussRational(8) * b) * apply_generator(Generator::gamma3, r, f) + c * f;
    const LaurentPoly rhs = f.derivative().derivative() + a * f.shifted(-2) + b * f.shifted(2) + c * f;
    return lhs - rhs;
}

TiltResult tilt_parameter(const mpq_class& b) {
    const mpq_class half(1, 2);
    const mpq_class den = half - 8 * b;
    if (sgn(den) == 0) throw DenominatorZero("tanh theta has a pole at b = 1/16");
    TiltResult r;
    r.tanh_theta = -(half + 8 * b) / den;
    r.tanh_theta.canonicalize();
    r.real_tilt = abs(r.tanh_theta) < 1;
    return r;
}

TiltResult tilt_parameter(const OscillatorForm& o) {
    auto b = o.b.constant_value();
    if (!b || !b->is_real()) throw Error("tilt parameter needs a rational b, got " + o.b.to_string());
    return tilt_parameter(b->re());
}

std::string to_string(Branch b) { return b == Branch::positive_root ? "positive_root" : "negative_root"; }

namespace {

mpq_class rational_value(const MultiExpr& e, const char* what) {
    auto v = e.constant_value();
    if (!v || !v->is_real()) throw Error(std::string(what) + " must be a rational number, got " + e.to_string());
    return v->re();
}

}  // namespace

QuadSurd eigenvalue_condition_residual(const ODESpec& o, const SpectrumEntry& e) {
    const mpq_class C = rational_value(o.C, "C");
    const mpq_class D = rational_value(o.D, "D");
    const mpq_class a = (16 * C - 3) / 4;
    const QuadSurd b = QuadSurd(mpq_class(4)) * e.E_hat;
    const QuadSurd c(mpq_class(4 * D));
    const QuadSurd root_a = QuadSurd::root(1 - 4 * a);
    auto sqrt_minus_b = (-b).sqrt_in_field();
    if (!sqrt_minus_b) throw Error("sqrt(-b) is not in the coefficient field for n = " + std::to_string(e.n));
    const QuadSurd sign_root = e.branch == Branch::positive_root ? root_a : -root_a;
    return QuadSurd(mpq_class(4 * e.n + 2)) + sign_root - c / *sqrt_minus_b;
}

SpectrumResult spectrum(const ODESpec& o, int n_max, Branch branch) {
    if (n_max < 0) throw Error("n_max must be a nonnegative integer");
    const mpq_class C = rational_value(o.C, "C");
    const mpq_class D = rational_value(o.D, "D");
    const mpq_class disc = 1 - 4 * C;
    SpectrumResult out;
    if (sgn(disc) < 0) throw Error("1 - 4C = " + exact::rational_string(disc) + " is negative");
    out.existence_condition.push_back({"1 - 4C >= 0", true, "1 - 4C = " + exact::rational_string(disc)});
    if (sgn(D) == 0) throw NoDiscreteSpectrum("D = 0: the eigenvalue condition has no solution");
    if (sgn(D) < 0)
        throw NoDiscreteSpectrum("D = " + exact::rational_string(D) +
                                 " < 0: c/sqrt(-b) cannot be positive (the spectrum depends on D^2 only; flip the sign of k_y)");
    out.existence_condition.push_back({"D > 0", true, "D = " + exact::rational_string(D)});
    out.root = sgn(disc) == 0 ? QuadSurd() : QuadSurd::root(disc);
    for (int n = 0; n <= n_max; ++n) {
        const QuadSurd k(mpq_class(2 * n + 1));
        const QuadSurd den = branch == Branch::positive_root ? k + out.root : k - out.root;
        if (den.sign() <= 0) {
            out.omitted.push_back(n);
            continue;
        }
        SpectrumEntry e{n, QuadSurd(mpq_class(-D * D)) / (den * den), branch};
        if (!eigenvalue_condition_residual(o, e).is_zero())
            throw Error("back-substitution failed for n = " + std::to_string(n));
        out.entries.push_back(std::move(e));
    }
    std::string omitted;
    for (int n : out.omitted) omitted += (omitted.empty() ? "" : ",") + std::to_string(n);
    out.existence_condition.push_back({"2n + 1 -+ sqrt(1 - 4C) > 0", out.omitted.empty(),
                                       omitted.empty() ? "all n admitted" : "omitted n = " + omitted});
    if (out.entries.empty())
        throw NoDiscreteSpectrum("sign constraints fail for every n <= " + std::to_string(n_max));
    return out;
}

SymbolicSpectrum spectrum_symbolic(const ODESpec& o, Branch branch) {
    auto t = o.C.table()->extend();
    t->declare("sqrt_disc", SymbolKind::parameter);
    if (!t->find("n")) t->declare("n", SymbolKind::parameter);
    const TablePtr tp = t;
    const MultiExpr radicand = GaussRational(1) - GaussRational(4) * o.C.lift(tp);
    if (!radicand.value().is_polynomial()) throw Error("1 - 4C must be a Laurent polynomial in the parameters");
    t->set_square_rule("sqrt_disc", radicand.value().numerator());
    const MultiExpr R = MultiExpr::symbol(tp, "sqrt_disc");
    const MultiExpr k = GaussRational(2) * MultiExpr::symbol(tp, "n") + GaussRational(1);
    const MultiExpr den = branch == Branch::positive_root ? k + R : k - R;
    return {tp, -(o.D.lift(tp).pow(2)) / den.pow(2), radicand};
}

MultiExpr physical_energy(const PhysicalParams& p, const MultiExpr& E_hat) {
    return p.hbar.pow(2) / (GaussRational(2) * p.m) * (E_hat + p.k_y.pow(2) + p.k_z.pow(2));
}

}  // namespace fieldsym::su11
