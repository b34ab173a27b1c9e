#pragma once

#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/vector_field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fieldsym::classical {

using exact::GaussRational;
using exact::MultiExpr;
using exact::TablePtr;
using exact::VectorField;

class NotClosed : public Error {
public:
    NotClosed(std::string left, std::string right, std::string value)
        : Error("[" + left + ", " + right + "] = " + value + " leaves the span"),
          left(std::move(left)), right(std::move(right)), value(std::move(value)) {}
    std::string left, right, value;
};

/// Point field with a velocity dependence or a complex coefficient.
class InvalidField : public Error {
public:
    using Error::Error;
};

/// Coordinates t, q1..q3, velocities qd1..qd3, the field strength Bcal, the constants
/// lambda, sigma, rho and a1..a8. Shared by every classical computation.
const TablePtr& table();
MultiExpr sym(const std::string& name);

enum class FieldKind { zero_field, inverse_square, linear };
std::string to_string(FieldKind k);
FieldKind parse_field_kind(const std::string& s);

struct FieldCase {
    FieldKind kind = FieldKind::inverse_square;
    /// Sign of B_z = sign * Bcal / x^2; only the inverse-square case reads it.
    int sign = -1;
};

std::array<MultiExpr, 3> magnetic_field(const FieldCase& c);

/// omega^a = eps^{abc} qd^b B^c (unit charge-to-mass ratio).
std::vector<MultiExpr> lorentz_rhs(const std::array<MultiExpr, 3>& B);
std::vector<MultiExpr> lorentz_rhs(const FieldCase& c);

/// {"t", q...}; the velocity of coordinate "qK" is "qdK".
std::vector<std::string> coordinates(int dimension);
VectorField field(const std::vector<std::string>& coords, const std::vector<MultiExpr>& comps);

/// Throws InvalidField when X depends on a velocity or has a non-real coefficient.
void validate(const VectorField& X);

/// Residual of the point symmetry condition for qdd^a = omega^a, one entry per coordinate of X
/// after t. omega.size() must equal that count.
std::vector<MultiExpr> classical_condition(const VectorField& X, const std::vector<MultiExpr>& omega);

struct NamedGenerator {
    std::string name;
    VectorField field;
};

struct GeneratorCheck {
    std::string name;
    std::string variant;            ///< field variant, e.g. the B_z sign or the coordinate
    VectorField field;
    std::vector<MultiExpr> residuals;
    bool expected = true;           ///< whether the field is claimed to be a symmetry
    bool vanishes() const;
    bool as_expected() const { return vanishes() == expected; }
};

struct StructureReport {
    std::vector<std::string> names;
    /// constants[i][j][k]: [X_i, X_j] = sum_k c_k X_k, for i < j.
    std::vector<std::vector<std::vector<GaussRational>>> constants;
    std::vector<std::size_t> derived_dimensions;  ///< dim g, dim g', dim g'', ...
    bool solvable = false;
    bool abelian() const;
};

struct CaseReport {
    FieldCase field_case;
    std::vector<GeneratorCheck> printed;      ///< claimed generators
    std::vector<GeneratorCheck> controls;     ///< fields that must fail
    std::vector<GeneratorCheck> additional;   ///< symmetries beyond the claimed set
    std::optional<StructureReport> structure;
    bool passed() const;
};

std::vector<NamedGenerator> printed_generators(FieldKind k);
/// The general eight-parameter projective field of qdd = 0 in coordinate `coord`.
VectorField projective_field(const std::string& coord);

CaseReport verify_case(FieldKind k);

/// Structure constants and derived series. Throws NotClosed when a bracket leaves the span and
/// Error when the generators are linearly dependent.
StructureReport structure_analysis(const std::vector<NamedGenerator>& generators);

}  // namespace fieldsym::classical
