#ifndef TPNLIE_SUBSPACE_HPP
#define TPNLIE_SUBSPACE_HPP

#include <vector>

#include "tpnlie/matrix.hpp"

namespace tpnlie {

// Linear subspace of Q^d held as a reduced row echelon basis, so equality and
// membership are representation independent.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
    Subspace(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& spanning);

    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.row_count(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    const Mat& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

    // Smallest subspace containing both.
    Subspace join(const Subspace& other) const;
    Subspace join_vector(const std::vector<Rational>& v) const;

private:
    std::size_t ambient_;
    Mat basis_; // rref, zero rows dropped
};

} // namespace tpnlie

#endif
