#pragma once

#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/linear_system.hpp"
#include "fieldsym/exact/vector_field.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fieldsym::su11 {
struct ODESpec;
}

namespace fieldsym::lie {

using exact::GaussRational;
using exact::MultiExpr;
using exact::TablePtr;
using exact::VectorField;

/// Vector field xi d/dx + eta d/du.
using PointVectorField = VectorField;

class ReductionResidue : public Error {
public:
    using Error::Error;
};

class OnlyTrivial : public Error {
public:
    using Error::Error;
};

/// Coefficients of u'' + (C/x^2 + D/x + E_hat) u = 0; unset entries stay symbolic.
struct RadialCase {
    std::optional<mpq_class> C, D, E_hat;

    static RadialCase symbolic() { return {}; }
    static RadialCase free_field() { return {mpq_class(0), mpq_class(0), mpq_class(1)}; }
    /// Numeric coefficients are kept, anything else becomes symbolic.
    static RadialCase from_spec(const su11::ODESpec& o);
};

/// Symbols and rules for one radial case.
///   coordinates x, u, up (= u')
///   parameters  C, D, E_hat, kappa, p, q, g0..g9, a1..a8
///   xi, eta     free jets in (x, u) to order 2
///   beta        free jet in x to order 5; gamma, alpha_f, delta_f free jets to order 3
///   alpha, alpha2, delta   solutions of the radial equation: f' = f_x, f_x' = -F f
///   sin1/cos1 (x + a2), sin2/cos2 (x + a4), sin3/cos3 (2x + a8) with sin^2 + cos^2 = 1
class Context {
public:
    explicit Context(const RadialCase& rc = RadialCase::symbolic());

    const TablePtr& table() const noexcept { return table_; }
    const RadialCase& radial_case() const noexcept { return case_; }
    MultiExpr sym(const std::string& name) const { return MultiExpr::symbol(table_, name); }
    MultiExpr num(const GaussRational& v) const { return {table_, v}; }
    MultiExpr C() const;
    MultiExpr D() const;
    MultiExpr E_hat() const;
    /// C/x^2 + D/x + E_hat.
    MultiExpr F() const;
    /// -F u.
    MultiExpr omega() const;
    /// Symbolic parameters among C, E_hat, D, in that preference order.
    std::vector<std::string> symbolic_parameters() const;

private:
    RadialCase case_;
    TablePtr table_;
};

/// Second-order jet of (xi, eta).
struct Jets {
    MultiExpr xi, xi_x, xi_u, xi_xx, xi_xu, xi_uu;
    MultiExpr eta, eta_x, eta_u, eta_xx, eta_xu, eta_uu;

    static Jets generic(const Context& ctx);
    static Jets of(const MultiExpr& xi, const MultiExpr& eta);
};

/// Symmetry condition of u'' = omega(x, u, up) with generic xi, eta jets.
MultiExpr determining_equation(const Context& ctx, const MultiExpr& omega);
/// The same condition evaluated on given jets.
MultiExpr symmetry_condition(const MultiExpr& omega, const Jets& j);
/// Powers of up -> coefficient equation.
std::map<int, MultiExpr> split_determining(const MultiExpr& cond);

struct AnsatzReduction {
    MultiExpr condition;                   ///< generic determining equation for omega = -F u
    std::map<int, MultiExpr> split;        ///< its up-power split
    MultiExpr intermediate;                ///< up^1 coefficient with a free alpha (alpha_f jets)
    MultiExpr up1_reduced;                 ///< up^1 coefficient with alpha bound to the radial equation
    MultiExpr gamma_value;                 ///< gamma = beta'/2 + kappa
    MultiExpr beta_equation;               ///< normalized to leading coefficient 1 in beta_xxx
    MultiExpr delta_equation;              ///< u^0 part before applying the rule for delta
};

/// Reduces the condition under xi = u alpha + beta, eta = u^2 alpha' + u gamma + delta.
/// Throws ReductionResidue when a part expected to vanish does not.
AnsatzReduction ansatz_reduce(const Context& ctx);

/// beta''' + 4 F beta' - (4C/x^3 + 2D/x^2) beta in beta jets.
MultiExpr beta_equation_reference(const Context& ctx);

struct SymmetryFamily {
    int N = 0;
    std::vector<std::string> coefficients;  ///< names of g0..gN (q, p for N = 1)
    exact::SolutionBranch branch;
    std::map<std::string, MultiExpr> constraints;  ///< parameter values
    MultiExpr beta;                                ///< in the free coefficients
    bool link_consistent = false;                  ///< matches the negative-root condition at n = N
    MultiExpr back_substitution;                   ///< beta equation on beta; always zero
};

/// Coefficient names of the degree-N ansatz.
std::vector<std::string> ansatz_coefficients(int N);

/// All nontrivial families of the degree-N Laurent ansatz, link-consistent branches first.
/// Throws OnlyTrivial when every branch forces beta to a lower degree or zero.
std::vector<SymmetryFamily> solve_beta_ansatz(const Context& ctx, int N);

/// D^2 + E_hat (2N + 1 - sqrt(1 - 4C))^2 == 0 under the constraints, with a positive denominator.
bool link_holds(const Context& ctx, int N, const std::map<std::string, MultiExpr>& constraints);

struct FieldOptions {
    bool alpha = true;
    bool kappa = true;
    bool delta = true;
    std::string alpha_symbol = "alpha";
};

/// X = (u alpha + beta) d/dx + (u^2 alpha' + u (beta'/2 + kappa) + delta) d/du.
PointVectorField build_vector_field(const Context& ctx, const SymmetryFamily& fam, const FieldOptions& opt = {});
PointVectorField point_field(const Context& ctx, const MultiExpr& xi, const MultiExpr& eta);

/// Determining equation on X for omega = -F u, then `constraints` substituted.
MultiExpr verify_point_symmetry(const Context& ctx, const PointVectorField& X,
                                const std::map<std::string, MultiExpr>& constraints = {});

struct PrintedCheck {
    std::string label;
    std::string printed;
    bool holds = false;
    std::string residual;
    std::string verified;  ///< oracle form when the printed item fails
};

/// Checks printed relations (unknown = value) and parameter values against a family.
std::vector<PrintedCheck> compare_printed(const SymmetryFamily& fam,
                                          const std::vector<std::pair<std::string, MultiExpr>>& relations,
                                          const std::vector<std::pair<std::string, MultiExpr>>& parameters);

/// Published relations of the three ansatz cases, transcribed.
std::vector<std::pair<std::string, MultiExpr>> printed_relations(const Context& ctx, int N);
std::vector<std::pair<std::string, MultiExpr>> printed_parameters(const Context& ctx, int N);

/// Published vector fields: the N = 1 and N = 2 fields and the free-field family, transcribed.
PointVectorField printed_field_n1(const Context& ctx);
PointVectorField printed_field_n2(const Context& ctx);
PointVectorField printed_trig_field(const Context& ctx);
/// The free-field family with the u-coefficient of eta taken as a7 cos(2x + a8) + a5.
PointVectorField corrected_trig_field(const Context& ctx);
/// General projective generator of u'' = 0.
PointVectorField projective_field(const Context& ctx);

/// Members of the N = 1 family used for closure tests.
struct FamilyMembers {
    PointVectorField alpha;   ///< u alpha d/dx + u^2 alpha' d/du
    PointVectorField alpha2;  ///< the same with a second solution alpha2
    PointVectorField beta;    ///< beta d/dx + u beta'/2 d/du, free coefficient set to 1
    PointVectorField kappa;   ///< u d/du
    PointVectorField delta;   ///< delta d/du
};
FamilyMembers family_members(const Context& ctx, const SymmetryFamily& fam);

struct BracketCheck {
    std::string left, right;
    PointVectorField value;
    std::vector<std::string> outside_keys;  ///< xi-structure keys absent from the family span
    /// xi = u f(x) with f a solution of the constrained radial equation.
    bool coefficient_solves_equation = false;
};

struct ClosureCertificate {
    bool include_kappa = false;
    std::vector<std::string> family_keys;
    std::vector<BracketCheck> brackets;
    bool non_closure = false;
};

/// Structural closure test: a bracket leaves the family when its xi-component carries a
/// (u-power, solution symbol, x-degree) key that no member's xi-component carries.
ClosureCertificate closure_certificate(const Context& ctx, const SymmetryFamily& fam, bool include_kappa);

/// Structure keys of a xi-component, e.g. "u*alpha*x^-2".
std::vector<std::string> xi_keys(const Context& ctx, const MultiExpr& xi);

}  // namespace fieldsym::lie
