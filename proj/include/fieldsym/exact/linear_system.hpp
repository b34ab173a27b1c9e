#pragma once

#include "fieldsym/exact/multi_expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace fieldsym::exact {

/// Equations (each "= 0") linear in `unknowns`, with coefficients rational in `parameters`.
/// Parameter order is the preference order used when a constraint is solved for a parameter.
struct ParamLinearSystem {
    TablePtr table;
    std::vector<std::string> unknowns;
    std::vector<std::string> parameters;
    std::vector<MultiExpr> equations;
};

struct ParameterValue {
    std::string parameter;
    MultiExpr value;
};

struct Relation {
    std::string unknown;
    MultiExpr value;  ///< in terms of later unknowns
};

/// One consistent case of the elimination.
struct SolutionBranch {
    std::vector<ParameterValue> parameter_values;
    std::vector<MultiExpr> nonzero_conditions;
    /// Parameter-only equations (= 0) that could not be solved for a parameter.
    std::vector<MultiExpr> residual_constraints;
    std::vector<Relation> relations;
    std::vector<std::string> free_unknowns;
    /// Every unknown in terms of the free unknowns.
    std::map<std::string, MultiExpr> closed_form;

    /// Parameter values and closed forms, ready for `substitute`.
    std::map<std::string, MultiExpr> substitution() const;
    bool is_trivial() const { return free_unknowns.empty(); }
};

struct SolutionDescription {
    std::vector<SolutionBranch> branches;
};

/// Fraction-free elimination in unknown order, branching on pivots that may vanish. Throws
/// NotLinear for products of unknowns and InconsistentSystem when no branch survives.
SolutionDescription eliminate(const ParamLinearSystem& sys);

}  // namespace fieldsym::exact
