#include "fieldsym/exact/vector_field.hpp"

#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/matrix.hpp"

#include <algorithm>

namespace fieldsym::exact {

VectorField::VectorField(std::vector<std::string> coords, std::vector<MultiExpr> comps)
    : coords_(std::move(coords)), comps_(std::move(comps)) {
    if (coords_.empty() || coords_.size() != comps_.size()) throw Error("vector field needs one component per coordinate");
    TablePtr deepest = comps_.front().table();
    for (const auto& c : comps_)
        if (c.table()->accepts(*deepest)) deepest = c.table();
    for (auto& c : comps_)
        if (c.table() != deepest) c = c.lift(deepest);
    for (const auto& c : coords_) (void)table()->id(c);
}

VectorField VectorField::zero(const TablePtr& table, const std::vector<std::string>& coords) {
    return {coords, std::vector<MultiExpr>(coords.size(), MultiExpr(table, GaussRational(0)))};
}

VectorField VectorField::basis(const TablePtr& table, const std::vector<std::string>& coords, const std::string& coord) {
    VectorField v = zero(table, coords);
    auto it = std::find(coords.begin(), coords.end(), coord);
    if (it == coords.end()) throw UnknownVariable(coord);
    v.comps_[static_cast<std::size_t>(it - coords.begin())] = MultiExpr(table, GaussRational(1));
    return v;
}

const MultiExpr& VectorField::component(const std::string& coord) const {
    auto it = std::find(coords_.begin(), coords_.end(), coord);
    if (it == coords_.end()) throw UnknownVariable(coord);
    return comps_[static_cast<std::size_t>(it - coords_.begin())];
}

MultiExpr VectorField::apply(const MultiExpr& f) const {
    MultiExpr out(table(), GaussRational(0));
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (comps_[k].is_zero()) continue;
        out += comps_[k] * differentiate(f, coords_[k]);
    }
    return out;
}

bool VectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const MultiExpr& c) { return c.is_zero(); });
}

void VectorField::check_compatible(const VectorField& o) const {
    if (o.coords_ != coords_) throw Error("vector fields over different coordinates");
}

VectorField VectorField::operator+(const VectorField& o) const {
    check_compatible(o);
    VectorField r = *this;
    for (std::size_t k = 0; k < comps_.size(); ++k) r.comps_[k] += o.comps_[k];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    check_compatible(o);
    VectorField r = *this;
    for (std::size_t k = 0; k < comps_.size(); ++k) r.comps_[k] -= o.comps_[k];
    return r;
}

VectorField VectorField::operator*(const MultiExpr& c) const {
    VectorField r = *this;
    for (auto& comp : r.comps_) comp *= c;
    return r;
}

VectorField VectorField::substituted(const std::map<std::string, MultiExpr>& values) const {
    std::vector<MultiExpr> comps;
    for (const auto& c : comps_) comps.push_back(substitute(c, values));
    return {coords_, comps};
}

std::string VectorField::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (comps_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + comps_[k].to_string() + ")*d/d" + coords_[k];
    }
    return out.empty() ? "0" : out;
}

std::string VectorField::to_sexpr() const {
    std::string out = "(field";
    for (std::size_t k = 0; k < coords_.size(); ++k) out += " (" + coords_[k] + " " + comps_[k].to_sexpr() + ")";
    return out + ")";
}

VectorField bracket(const VectorField& x, const VectorField& y) {
    if (x.coords() != y.coords()) throw Error("vector fields over different coordinates");
    std::vector<MultiExpr> comps;
    for (std::size_t k = 0; k < x.coords().size(); ++k)
        comps.push_back(x.apply(y.component(k)) - y.apply(x.component(k)));
    return {x.coords(), comps};
}

std::optional<std::vector<GaussRational>> span_coefficients(const std::vector<VectorField>& basis,
                                                            const VectorField& target) {
    // Rows: (component, monomial) pairs after clearing each component's denominators.
    const std::size_t n = basis.size();
    Matrix rows;
    Vector rhs;
    for (std::size_t k = 0; k < target.coords().size(); ++k) {
        MultiExpr den = target.component(k).denominator();
        for (const auto& b : basis) den *= b.component(k).denominator();
        std::map<Monomial, std::vector<GaussRational>, MonomialLess> table;
        auto add = [&](const MultiExpr& e, std::size_t col) {
            const MultiExpr cleared = e * den;
            if (!cleared.value().is_polynomial()) throw Error("could not clear denominators");
            for (const auto& [m, c] : cleared.value().numerator().terms()) {
                auto& row = table[m];
                row.resize(n + 1);
                row[col] = c;
            }
        };
        for (std::size_t j = 0; j < n; ++j) add(basis[j].component(k), j);
        add(target.component(k), n);
        for (auto& [m, row] : table) {
            rhs.push_back(row[n]);
            row.pop_back();
            rows.push_back(row);
        }
    }
    if (rows.empty()) return std::vector<GaussRational>(n);
    return solve(rows, rhs);
}

}  // namespace fieldsym::exact
