#include "tpnlie/subspace.hpp"

#include "tpnlie/errors.hpp"

namespace tpnlie {

Subspace::Subspace(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& spanning)
    : ambient_(ambient_dim) {
    Mat m(0, ambient_dim);
    for (const auto& v : spanning) {
        if (v.size() != ambient_dim) throw StructuralError("spanning vector has wrong dimension");
        m.append_row(v);
    }
    basis_ = rref(m);
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<std::vector<Rational>> rows(ambient_dim,
                                            std::vector<Rational>(ambient_dim, Rational(0)));
    for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
    return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw StructuralError("vector has wrong dimension");
    std::vector<Rational> r = v;
    for (std::size_t i = 0; i < basis_.row_count(); ++i) {
        const auto& row = basis_.row(i);
        std::size_t pivot = 0;
        while (pivot < ambient_ && row[pivot] == 0) ++pivot;
        if (pivot == ambient_ || r[pivot] == 0) continue;
        Rational f = r[pivot]; // pivot entry of an rref row is 1
        for (std::size_t j = pivot; j < ambient_; ++j) r[j] -= f * row[j];
    }
    for (const auto& q : r)
        if (q != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis_.row_count(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows();
}

Subspace Subspace::join(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw StructuralError("subspaces in different ambient spaces");
    std::vector<std::vector<Rational>> rows = basis_.rows();
    for (const auto& r : other.basis_.rows()) rows.push_back(r);
    return Subspace(ambient_, rows);
}

Subspace Subspace::join_vector(const std::vector<Rational>& v) const {
    std::vector<std::vector<Rational>> rows = basis_.rows();
    rows.push_back(v);
    return Subspace(ambient_, rows);
}

} // namespace tpnlie
