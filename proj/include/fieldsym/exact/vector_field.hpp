#pragma once

#include "fieldsym/exact/multi_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fieldsym::exact {

/// sum_i comps[i] * d/d coords[i], components in a shared symbol table.
class VectorField {
public:
    VectorField(std::vector<std::string> coords, std::vector<MultiExpr> comps);
    static VectorField zero(const TablePtr& table, const std::vector<std::string>& coords);
    /// d/d coord.
    static VectorField basis(const TablePtr& table, const std::vector<std::string>& coords, const std::string& coord);

    const std::vector<std::string>& coords() const noexcept { return coords_; }
    const std::vector<MultiExpr>& components() const noexcept { return comps_; }
    const MultiExpr& component(std::size_t k) const { return comps_.at(k); }
    const MultiExpr& component(const std::string& coord) const;
    const TablePtr& table() const { return comps_.front().table(); }

    /// X(f) = sum_i comps[i] * df/d coords[i].
    MultiExpr apply(const MultiExpr& f) const;

    bool is_zero() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const MultiExpr& c) const;
    friend bool operator==(const VectorField& a, const VectorField& b) { return (a - b).is_zero(); }

    /// Applies `substitute` componentwise.
    VectorField substituted(const std::map<std::string, MultiExpr>& values) const;

    std::string to_string() const;
    /// (field (x <expr>) (u <expr>)) with components in s-expression form.
    std::string to_sexpr() const;

private:
    void check_compatible(const VectorField& o) const;

    std::vector<std::string> coords_;
    std::vector<MultiExpr> comps_;
};

/// [X, Y] = X(Y) - Y(X) componentwise.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Constant coefficients c with sum c_k basis[k] = target, if any exist.
std::optional<std::vector<GaussRational>> span_coefficients(const std::vector<VectorField>& basis,
                                                            const VectorField& target);

}  // namespace fieldsym::exact
