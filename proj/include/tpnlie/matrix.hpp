#ifndef TPNLIE_MATRIX_HPP
#define TPNLIE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "tpnlie/rational.hpp"

namespace tpnlie {

// Dense exact matrix; rows of equal width. Construction from a row list keeps
// the given row order (elimination pivoting is deterministic on top of it).
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, std::vector<Rational>(cols, Rational(0))) {}
    explicit Mat(std::vector<std::vector<Rational>> rows);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }
    const std::vector<Rational>& row(std::size_t i) const { return rows_.at(i); }
    Rational& at(std::size_t i, std::size_t j) { return rows_.at(i).at(j); }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    void append_row(std::vector<Rational> r);
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

// Exact rank via fraction-free (Bareiss) elimination. Pivot selection is the
// first nonzero entry in a row-major scan; with integer input every
// intermediate value stays integral.
std::size_t rank(const Mat& m);

// Reduced row echelon form: pivots 1, pivot columns cleared, zero rows
// dropped, rows ordered by pivot column. Canonical for row-space equality.
Mat rref(const Mat& m);

} // namespace tpnlie

#endif
