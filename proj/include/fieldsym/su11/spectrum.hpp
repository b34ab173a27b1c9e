#pragma once

#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/laurent_poly.hpp"
#include "fieldsym/exact/multi_expr.hpp"
#include "fieldsym/exact/quad_surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fieldsym::su11 {

using exact::GaussRational;
using exact::LaurentPoly;
using exact::MultiExpr;
using exact::QuadSurd;
using exact::TablePtr;

class CommutatorViolation : public Error {
public:
    CommutatorViolation(int k, std::string identity, LaurentPoly residual);
    int k() const noexcept { return k_; }
    const std::string& identity() const noexcept { return identity_; }
    const LaurentPoly& residual() const noexcept { return residual_; }

private:
    int k_;
    std::string identity_;
    LaurentPoly residual_;
};

class NotScalar : public Error {
public:
    using Error::Error;
};

class DenominatorZero : public Error {
public:
    using Error::Error;
};

class NoDiscreteSpectrum : public Error {
public:
    using Error::Error;
};

/// Symbols m, hbar, omega_B, k_y, k_z, E, E_hat, n. With `omega_B_squared` the ring also carries
/// omega_B^2 = value, which admits irrational field strengths such as sqrt(3)/4.
TablePtr physics_table(const std::optional<mpq_class>& omega_B_squared = std::nullopt);

struct PhysicalParams {
    MultiExpr m, hbar, omega_B, k_y, k_z;

    static PhysicalParams symbolic(const TablePtr& table);
    static PhysicalParams rational(const TablePtr& table, const mpq_class& m, const mpq_class& hbar,
                                   const mpq_class& omega_B, const mpq_class& k_y, const mpq_class& k_z);
    /// Throws when a numeric m or hbar is not positive.
    void validate() const;
};

/// u'' + (C/x^2 + D/x + E_hat) u = 0.
struct ODESpec {
    MultiExpr C, D, E_hat;
    std::string label;
    /// E_hat in terms of the physical energy, when built from PhysicalParams.
    std::optional<MultiExpr> E_hat_definition;

    /// Rational C, D with symbolic E_hat in a fresh physics table.
    static ODESpec rational(const mpq_class& C, const mpq_class& D, std::string label = "radial");
    /// V = A (a/x - a^2/(2x^2)) in units hbar^2/2m = 1: C = A a^2/2, D = -A a.
    static ODESpec kratzer(const mpq_class& A, const mpq_class& a);
};

/// R'' + (a/s^2 + b s^2 + c) R = 0.
struct OscillatorForm {
    MultiExpr a, b, c;
};

ODESpec build_radial(const PhysicalParams& p);
OscillatorForm to_oscillator_form(const ODESpec& o);

/// Independent route: substitutes x = s^2, u = s^(1/2) R into the radial equation and reads the
/// coefficients of the R equation (multiplied through by 4 s^(3/2)).
OscillatorForm oscillator_form_by_substitution(const ODESpec& o);

enum class Generator { gamma1, gamma2, gamma3 };

/// Generator coefficients; the defaults give the su(1,1) realization.
struct Realization {
    GaussRational alpha;
    GaussRational gamma1_quadratic = GaussRational::ratio(1, 16);
    GaussRational gamma3_quadratic = GaussRational::ratio(-1, 16);
};

LaurentPoly apply_generator(Generator which, const Realization& r, const LaurentPoly& f);
LaurentPoly apply_generator(Generator which, const GaussRational& alpha, const LaurentPoly& f);

struct CommutatorResidual {
    int k;
    LaurentPoly r12, r23, r31;  ///< [G1,G2]+iG3, [G2,G3]-iG1, [G3,G1]-iG2 applied to s^k
};

struct CommutatorReport {
    GaussRational alpha;
    std::vector<CommutatorResidual> residuals;
};

/// Throws CommutatorViolation on the first nonzero residual.
CommutatorReport check_commutators(const Realization& r, int k_min, int k_max);
CommutatorReport check_commutators(const GaussRational& alpha, int k_min, int k_max);

/// Scalar by which G3^2 - G1^2 - G2^2 acts on s^k, confirmed for k in [k_min, k_max].
GaussRational casimir_scalar(const Realization& r, int k_min = -6, int k_max = 6);
GaussRational casimir_scalar(const GaussRational& alpha, int k_min = -6, int k_max = 6);

/// (1/2 + 8b) G1 + (1/2 - 8b) G3 + c - (d^2 + a/s^2 + b s^2 + c) applied to s^k, realized with
/// alpha = a. Zero for every k.
LaurentPoly decomposition_residual(const GaussRational& a, const GaussRational& b, const GaussRational& c, int k);

struct TiltResult {
    mpq_class tanh_theta;
    /// |tanh theta| < 1.
    bool real_tilt = false;
};

/// tanh theta = -(1/2 + 8b)/(1/2 - 8b). Throws DenominatorZero at b = 1/16.
TiltResult tilt_parameter(const OscillatorForm& o);
TiltResult tilt_parameter(const mpq_class& b);

enum class Branch { positive_root, negative_root };
std::string to_string(Branch b);

struct SpectrumEntry {
    int n = 0;
    QuadSurd E_hat;
    Branch branch = Branch::positive_root;
};

struct ExistenceCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;
    std::vector<ExistenceCheck> existence_condition;
    std::vector<int> omitted;
    /// sqrt(1 - 4C).
    QuadSurd root;
};

/// E_hat_n = -D^2 / (2n + 1 +- sqrt(1 - 4C))^2 for n = 0..n_max. Needs numeric C and D.
SpectrumResult spectrum(const ODESpec& o, int n_max, Branch branch);

/// 4n + 2 +- sqrt(1 - 4a) - c/sqrt(-b) with a, b, c from the oscillator map; zero for every entry.
QuadSurd eigenvalue_condition_residual(const ODESpec& o, const SpectrumEntry& e);

/// The spectrum with symbolic C, D and n: E_hat = -D^2/(2n + 1 +- R)^2 where R^2 = 1 - 4C is a ring
/// relation on the symbol "sqrt_disc" of the returned table.
struct SymbolicSpectrum {
    TablePtr table;
    MultiExpr E_hat;
    MultiExpr radicand;
};
SymbolicSpectrum spectrum_symbolic(const ODESpec& o, Branch branch);

/// E = (hbar^2/2m)(E_hat + k_y^2 + k_z^2).
MultiExpr physical_energy(const PhysicalParams& p, const MultiExpr& E_hat);

}  // namespace fieldsym::su11
