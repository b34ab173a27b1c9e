#pragma once

#include "fieldsym/exact/fraction.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fieldsym::exact {

enum class SymbolKind {
    coordinate,  ///< independent variable (x, u, u', t, q^a, ...)
    parameter,   ///< constant symbol (C, D, kappa, g0, ...)
    function,    ///< formal function of some coordinates, differentiated through rules
};

struct SymbolInfo {
    std::string name;
    SymbolKind kind = SymbolKind::parameter;
    std::set<int> depends_on;
    /// d(symbol)/d(var) for each var in depends_on that has a rule.
    std::map<int, Fraction> derivatives;
    /// symbol^2 -> polynomial, applied during canonicalization.
    std::optional<Polynomial> square_rule;
};

/// Declares the symbols an expression may mention together with derivative rules for formal
/// functions and quadratic ring relations. Extend before mutating once expressions exist:
/// `extend()` freezes the parent and returns a child sharing every existing symbol id.
class SymbolTable {
public:
    static std::shared_ptr<SymbolTable> create();
    std::shared_ptr<SymbolTable> extend() const;

    int declare(const std::string& name, SymbolKind kind, const std::vector<std::string>& depends_on = {});
    void set_derivative(const std::string& symbol, const std::string& var, const Fraction& value);
    void set_square_rule(const std::string& symbol, const Polynomial& value);

    /// Declares name, name_v, name_vv, ... up to `order`, chaining derivative rules. The top-order
    /// symbols have no rule, so differentiating them raises MissingDerivativeRule.
    void declare_jet(const std::string& name, const std::vector<std::string>& vars, int order);
    static std::string jet_name(const std::string& base, const std::vector<std::string>& derivs);

    std::optional<int> find(const std::string& name) const;
    int id(const std::string& name) const;
    const SymbolInfo& info(int id) const { return symbols_.at(static_cast<std::size_t>(id)); }
    const std::string& name(int id) const { return info(id).name; }
    std::size_t size() const noexcept { return symbols_.size(); }

    /// True when expressions of `other` are valid here (same table or an ancestor).
    bool accepts(const SymbolTable& other) const;

    Polynomial reduce(const Polynomial& p) const;
    Fraction reduce(const Fraction& f) const;
    bool has_relations() const noexcept { return !relation_ids_.empty(); }

private:
    SymbolTable();
    void require_mutable() const;

    std::uint64_t uid_;
    std::vector<std::uint64_t> ancestors_;
    std::vector<SymbolInfo> symbols_;
    std::map<std::string, int> by_name_;
    std::vector<int> relation_ids_;
    mutable bool frozen_ = false;
};

using TablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace fieldsym::exact
