#include "fieldsym/exact/matrix.hpp"

namespace fieldsym::exact {

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const GaussRational inv = GaussRational(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const GaussRational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    const std::size_t n = a.empty() ? 0 : a.front().size();
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    const auto pivots = row_reduce(aug);
    Vector x(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == n) return std::nullopt;
        x[pivots[k]] = aug[k][n];
    }
    return x;
}

}  // namespace fieldsym::exact
