#include "tpnlie/matrix.hpp"

#include "tpnlie/errors.hpp"

namespace tpnlie {

Mat::Mat(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) cols_ = rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw StructuralError("matrix rows must have uniform width");
}

void Mat::append_row(std::vector<Rational> r) {
    if (rows_.empty())
        cols_ = r.size();
    else if (r.size() != cols_)
        throw StructuralError("matrix rows must have uniform width");
    rows_.push_back(std::move(r));
}

std::size_t rank(const Mat& m) {
    auto a = m.rows();
    const std::size_t nrows = a.size();
    const std::size_t ncols = m.col_count();
    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == nrows) continue;
        if (pivot != r) std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j)
                a[i][j] = (a[i][j] * a[r][col] - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

Mat rref(const Mat& m) {
    auto a = m.rows();
    const std::size_t nrows = a.size();
    const std::size_t ncols = m.col_count();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == nrows) continue;
        if (pivot != r) std::swap(a[pivot], a[r]);
        Rational inv = a[r][col];
        for (std::size_t j = col; j < ncols; ++j) a[r][j] /= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    Mat out(0, ncols);
    for (auto& row : a) out.append_row(std::move(row));
    return out;
}

} // namespace tpnlie
