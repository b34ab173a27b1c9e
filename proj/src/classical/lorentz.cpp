#include "fieldsym/classical/lorentz.hpp"

#include "fieldsym/exact/matrix.hpp"
#include "fieldsym/exact/multi_expr.hpp"
#include "fieldsym/exact/symbol_table.hpp"

namespace fieldsym::classical {

using exact::differentiate;
using exact::SymbolKind;
using exact::SymbolTable;

const TablePtr& table() {
    static const TablePtr t = [] {
        auto tb = SymbolTable::create();
        tb->declare("t", SymbolKind::coordinate);
        for (int k = 1; k <= 3; ++k) tb->declare("q" + std::to_string(k), SymbolKind::coordinate);
        for (int k = 1; k <= 3; ++k) tb->declare("qd" + std::to_string(k), SymbolKind::coordinate);
        for (const char* p : {"Bcal", "lambda", "sigma", "rho"}) tb->declare(p, SymbolKind::parameter);
        for (int k = 1; k <= 8; ++k) tb->declare("a" + std::to_string(k), SymbolKind::parameter);
        return TablePtr(tb);
    }();
    return t;
}

MultiExpr sym(const std::string& name) { return MultiExpr::symbol(table(), name); }

namespace {

MultiExpr num(long v) { return MultiExpr(table(), GaussRational(v)); }

std::string velocity(const std::string& coord) { return "qd" + coord.substr(1); }

}  // namespace

std::string to_string(FieldKind k) {
    switch (k) {
        case FieldKind::zero_field: return "zero";
        case FieldKind::inverse_square: return "inverse-square";
        case FieldKind::linear: return "linear";
    }
    return "?";
}

FieldKind parse_field_kind(const std::string& s) {
    if (s == "zero") return FieldKind::zero_field;
    if (s == "inverse-square") return FieldKind::inverse_square;
    if (s == "linear") return FieldKind::linear;
    throw Error("unknown field case '" + s + "' (expected zero, inverse-square or linear)");
}

std::array<MultiExpr, 3> magnetic_field(const FieldCase& c) {
    switch (c.kind) {
        case FieldKind::zero_field:
            return {num(0), num(0), num(0)};
        case FieldKind::inverse_square:
            if (c.sign != 1 && c.sign != -1) throw Error("field sign must be +1 or -1");
            return {num(0), num(0), num(c.sign) * sym("Bcal") / sym("q1").pow(2)};
        case FieldKind::linear:
            return {sym("q1"), sym("q2"), sym("q3")};
    }
    throw Error("unknown field case");
}

std::vector<MultiExpr> lorentz_rhs(const std::array<MultiExpr, 3>& B) {
    const MultiExpr v1 = sym("qd1"), v2 = sym("qd2"), v3 = sym("qd3");
    return {v2 * B[2] - v3 * B[1], v3 * B[0] - v1 * B[2], v1 * B[1] - v2 * B[0]};
}

std::vector<MultiExpr> lorentz_rhs(const FieldCase& c) { return lorentz_rhs(magnetic_field(c)); }

std::vector<std::string> coordinates(int dimension) {
    if (dimension < 1 || dimension > 3) throw Error("dimension must lie in [1, 3]");
    std::vector<std::string> out{"t"};
    for (int k = 1; k <= dimension; ++k) out.push_back("q" + std::to_string(k));
    return out;
}

VectorField field(const std::vector<std::string>& coords, const std::vector<MultiExpr>& comps) {
    VectorField X(coords, comps);
    validate(X);
    return X;
}

void validate(const VectorField& X) {
    for (std::size_t i = 0; i < X.coords().size(); ++i) {
        const MultiExpr& c = X.component(i);
        for (int k = 1; k <= 3; ++k)
            if (c.mentions("qd" + std::to_string(k)))
                throw InvalidField("component along " + X.coords()[i] + " depends on a velocity");
        if (!c.value().numerator().all_real() || !c.value().denominator().all_real())
            throw InvalidField("component along " + X.coords()[i] + " has a non-real coefficient");
    }
}

std::vector<MultiExpr> classical_condition(const VectorField& X, const std::vector<MultiExpr>& omega) {
    const auto& coords = X.coords();
    if (coords.empty() || coords.front() != "t") throw Error("first coordinate of a classical field must be t");
    const std::size_t n = coords.size() - 1;
    if (omega.size() != n) throw Error("omega has " + std::to_string(omega.size()) + " entries for " + std::to_string(n) + " coordinates");

    auto dq = [&](const MultiExpr& f, std::size_t b) { return differentiate(f, coords[b + 1]); };
    auto dt = [](const MultiExpr& f) { return differentiate(f, "t"); };
    std::vector<MultiExpr> v;
    for (std::size_t b = 0; b < n; ++b) v.push_back(sym(velocity(coords[b + 1])));

    const MultiExpr& xi = X.component(0);
    const MultiExpr xi_t = dt(xi);
    MultiExpr xi_dot = xi_t;  // D_t xi
    for (std::size_t b = 0; b < n; ++b) xi_dot += v[b] * dq(xi, b);

    std::vector<MultiExpr> eta_dot;  // prolonged velocity components
    for (std::size_t b = 0; b < n; ++b) {
        const MultiExpr& eta = X.component(b + 1);
        MultiExpr e = dt(eta);
        for (std::size_t c = 0; c < n; ++c) e += v[c] * dq(eta, c);
        eta_dot.push_back(e - v[b] * xi_dot);
    }

    std::vector<MultiExpr> out;
    for (std::size_t a = 0; a < n; ++a) {
        const MultiExpr& w = omega[a];
        const MultiExpr& eta = X.component(a + 1);
        MultiExpr r = xi * dt(w);
        for (std::size_t b = 0; b < n; ++b) {
            r += X.component(b + 1) * dq(w, b);
            r += eta_dot[b] * differentiate(w, velocity(coords[b + 1]));
            r += omega[b] * (v[a] * dq(xi, b) - dq(eta, b));
            r -= GaussRational(2) * v[b] * dq(dt(eta), b);
            r += GaussRational(2) * v[a] * v[b] * dq(xi_t, b);
            for (std::size_t c = 0; c < n; ++c) {
                r += v[a] * v[b] * v[c] * dq(dq(xi, b), c);
                r -= v[c] * v[b] * dq(dq(eta, b), c);
            }
        }
        r += GaussRational(2) * w * xi_dot;
        r += v[a] * dt(xi_t);
        r -= dt(dt(eta));
        out.push_back(r);
    }
    return out;
}

bool GeneratorCheck::vanishes() const {
    for (const auto& r : residuals)
        if (!r.is_zero()) return false;
    return true;
}

bool StructureReport::abelian() const {
    for (const auto& row : constants)
        for (const auto& c : row)
            for (const auto& v : c)
                if (!v.is_zero()) return false;
    return true;
}

bool CaseReport::passed() const {
    for (const auto* group : {&printed, &controls, &additional})
        for (const auto& g : *group)
            if (!g.as_expected()) return false;
    return !structure || field_case.kind != FieldKind::inverse_square || structure->solvable;
}

VectorField projective_field(const std::string& coord) {
    const MultiExpr t = sym("t");
    const MultiExpr q = sym(coord);
    auto a = [](int k) { return sym("a" + std::to_string(k)); };
    return field({"t", coord}, {a(1) + a(2) * t + a(3) * q + a(4) * t * q + a(5) * t.pow(2),
                                a(6) + a(7) * t + a(8) * q + a(5) * t * q + a(4) * q.pow(2)});
}

std::vector<NamedGenerator> printed_generators(FieldKind k) {
    const auto c3 = coordinates(3);
    auto X = [&](const MultiExpr& xi, const MultiExpr& e1, const MultiExpr& e2, const MultiExpr& e3) {
        return field(c3, {xi, e1, e2, e3});
    };
    const MultiExpr z = num(0);
    const MultiExpr q1 = sym("q1"), q2 = sym("q2"), q3 = sym("q3");
    switch (k) {
        case FieldKind::zero_field: {
            std::vector<NamedGenerator> out;
            for (int a = 1; a <= 3; ++a) {
                const std::string coord = "q" + std::to_string(a);
                const VectorField general = projective_field(coord);
                for (int j = 1; j <= 8; ++j) {
                    std::map<std::string, MultiExpr> unit;
                    for (int i = 1; i <= 8; ++i) unit.insert_or_assign("a" + std::to_string(i), num(i == j ? 1 : 0));
                    out.push_back({"P" + std::to_string(j) + "[" + coord + "]", general.substituted(unit)});
                }
            }
            return out;
        }
        case FieldKind::inverse_square:
            return {{"X_xi", X(sym("lambda"), z, z, z)},
                    {"X_eta2", X(z, z, sym("sigma"), z)},
                    {"X_3", X(z, z, z, sym("rho"))},
                    {"X_eta3", X(z, z, z, q3)}};
        case FieldKind::linear:
            return {{"X_q1", X(z, z, q3, -q2)},
                    {"X_q2", X(z, -q3, z, q1)},
                    {"X_q3", X(z, q2, -q1, z)},
                    {"X_xi", X(num(1), z, z, z)},
                    {"X_5", X(sym("t"), -q1, -q2, -q3)}};
    }
    throw Error("unknown field case");
}

namespace {

GeneratorCheck check(const NamedGenerator& g, const std::string& variant, const std::vector<MultiExpr>& omega, bool expected) {
    return {g.name, variant, g.field, classical_condition(g.field, omega), expected};
}

std::vector<MultiExpr> omega_for(const VectorField& X, const std::vector<MultiExpr>& full) {
    // A field in fewer coordinates than the system sees the matching equations only.
    std::vector<MultiExpr> out;
    for (std::size_t i = 1; i < X.coords().size(); ++i)
        out.push_back(full.at(static_cast<std::size_t>(std::stoi(X.coords()[i].substr(1)) - 1)));
    return out;
}

}  // namespace

CaseReport verify_case(FieldKind k) {
    CaseReport rep;
    rep.field_case.kind = k;
    const auto c3 = coordinates(3);
    const MultiExpr z = num(0);
    const MultiExpr t = sym("t");

    if (k == FieldKind::zero_field) {
        const auto omega = lorentz_rhs(FieldCase{k, -1});
        for (const auto& g : printed_generators(k))
            rep.printed.push_back(check(g, g.field.coords()[1], omega_for(g.field, omega), true));
        for (int a = 1; a <= 3; ++a) {
            const std::string coord = "q" + std::to_string(a);
            const NamedGenerator general{"P[" + coord + "]", projective_field(coord)};
            rep.printed.push_back(check(general, coord, {z}, true));
            const NamedGenerator bad{"q^3 d/dq[" + coord + "]", field({"t", coord}, {z, sym(coord).pow(3)})};
            rep.controls.push_back(check(bad, coord, {z}, false));
        }
        return rep;
    }

    if (k == FieldKind::inverse_square) {
        for (int sign : {-1, 1}) {
            const auto omega = lorentz_rhs(FieldCase{k, sign});
            const std::string variant = sign < 0 ? "B_z = -Bcal/x^2" : "B_z = +Bcal/x^2";
            for (const auto& g : printed_generators(k)) rep.printed.push_back(check(g, variant, omega, true));
            rep.controls.push_back(check({"d/dq1", VectorField::basis(table(), c3, "q1")}, variant, omega, false));
            rep.controls.push_back(check({"t d/dt", field(c3, {t, z, z, z})}, variant, omega, false));
            rep.additional.push_back(
                check({"2t d/dt + q1 d/dq1 + q2 d/dq2", field(c3, {GaussRational(2) * t, sym("q1"), sym("q2"), z})}, variant, omega, true));
        }
        std::map<std::string, MultiExpr> unit{{"lambda", num(1)}, {"sigma", num(1)}, {"rho", num(1)}};
        std::vector<NamedGenerator> gens;
        for (const auto& g : printed_generators(k)) gens.push_back({g.name, g.field.substituted(unit)});
        rep.structure = structure_analysis(gens);
        return rep;
    }

    const auto omega = lorentz_rhs(FieldCase{k, -1});
    for (const auto& g : printed_generators(k)) rep.printed.push_back(check(g, "B = q", omega, true));
    rep.controls.push_back(check({"d/dq1", VectorField::basis(table(), c3, "q1")}, "B = q", omega, false));
    rep.structure = structure_analysis(printed_generators(k));
    return rep;
}

StructureReport structure_analysis(const std::vector<NamedGenerator>& generators) {
    StructureReport rep;
    const std::size_t n = generators.size();
    std::vector<VectorField> basis;
    for (const auto& g : generators) {
        rep.names.push_back(g.name);
        basis.push_back(g.field);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<VectorField> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(basis[j]);
        if (basis[i].is_zero() || (!others.empty() && span_coefficients(others, basis[i])))
            throw Error("generator " + generators[i].name + " is linearly dependent on the others");
    }

    rep.constants.assign(n, std::vector<std::vector<GaussRational>>(n, std::vector<GaussRational>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const VectorField b = bracket(basis[i], basis[j]);
            auto c = exact::span_coefficients(basis, b);
            if (!c) throw NotClosed(generators[i].name, generators[j].name, b.to_string());
            rep.constants[i][j] = *c;
            for (std::size_t k = 0; k < n; ++k) rep.constants[j][i][k] = -(*c)[k];
        }
    }

    // Derived series in coefficient space.
    exact::Matrix current;
    for (std::size_t i = 0; i < n; ++i) {
        exact::Vector e(n);
        e[i] = GaussRational(1);
        current.push_back(e);
    }
    rep.derived_dimensions.push_back(n);
    while (!current.empty()) {
        exact::Matrix next;
        for (std::size_t p = 0; p < current.size(); ++p) {
            for (std::size_t q = p + 1; q < current.size(); ++q) {
                exact::Vector v(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const GaussRational w = current[p][i] * current[q][j];
                        if (w.is_zero()) continue;
                        for (std::size_t k = 0; k < n; ++k) v[k] += w * rep.constants[i][j][k];
                    }
                next.push_back(v);
            }
        }
        exact::row_reduce(next);
        std::erase_if(next, [](const exact::Vector& row) {
            return std::all_of(row.begin(), row.end(), [](const GaussRational& x) { return x.is_zero(); });
        });
        if (next.size() == current.size()) {
            rep.derived_dimensions.push_back(next.size());  // stabilized: g^(k+1) = g^(k)
            break;
        }
        current = std::move(next);
        rep.derived_dimensions.push_back(current.size());
    }
    rep.solvable = current.empty();
    return rep;
}

}  // namespace fieldsym::classical
