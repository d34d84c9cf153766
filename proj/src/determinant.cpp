#include "tpnlie/determinant.hpp"

namespace tpnlie {

namespace {

Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det(ring);
    std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1, Polynomial(ring)));
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Polynomial term = m[0][j] * cofactor_det(minor, ring);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m, const Ring& ring) {
    const std::size_t n = m.size();
    Polynomial prev = Polynomial::constant(ring, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return Polynomial(ring);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Polynomial(ring);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw StructuralError("determinant of an empty matrix");
    Ring ring;
    for (const auto& row : m) {
        if (row.size() != n) throw StructuralError("determinant requires a square matrix");
        for (const auto& entry : row) {
            if (!ring)
                ring = entry.ring();
            else
                require_same_ring(ring, entry.ring());
        }
    }
    if (n <= 4) return cofactor_det(m, ring);
    return bareiss_det(m, ring);
}

} // namespace tpnlie
