#ifndef TPNLIE_FD_TABLE_HPP
#define TPNLIE_FD_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpnlie/rational.hpp"

namespace tpnlie {

using Vec = std::vector<Rational>;

// Dense structure-constant tables for a finite-dimensional algebra: an n-ary
// bracket table plus an optional symmetric binary product table. The dense
// layout can represent broken (non-skew) tables on purpose, so validation is a
// real check rather than a construction invariant.
class FdTable {
public:
    FdTable(std::size_t dimension, std::size_t arity, bool with_product = false);

    std::size_t dimension() const { return dim_; }
    std::size_t arity() const { return arity_; }
    bool has_product() const { return product_.has_value(); }

    // Basis-tuple accessors (indices 0-based).
    const Vec& bracket_entry(const std::vector<std::size_t>& idx) const;
    void set_bracket_entry(const std::vector<std::size_t>& idx, Vec value);
    const Vec& product_entry(std::size_t i, std::size_t j) const;
    void set_product_entry(std::size_t i, std::size_t j, Vec value); // sets both orders

    // Sets the whole skew orbit of idx: every permutation gets the signed value.
    void set_bracket_skew(const std::vector<std::size_t>& idx, const Vec& value);

    // Multilinear extension of the basis tables to coordinate vectors.
    Vec bracket(const std::vector<Vec>& args) const;
    Vec product(const Vec& a, const Vec& b) const;

    // Filippov vector-product algebra on n+1 basis vectors (arity n):
    // for ascending indices with omitted index i, the bracket is (-1)^i e_i.
    static FdTable vector_product(std::size_t arity, bool with_zero_product = false);

    // Blocks side by side; brackets and products across blocks vanish.
    static FdTable direct_sum(const FdTable& a, const FdTable& b);

private:
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;

    std::size_t dim_;
    std::size_t arity_;
    std::vector<Vec> bracket_;                 // dim^arity entries
    std::optional<std::vector<Vec>> product_;  // dim^2 entries
};

// JSON document format:
//   { "dimension": d, "arity": n,
//     "bracket": [ { "args": [i_1,...,i_n], "value": { "k": "rational" } }, ... ],
//     "product": [ { "args": [i,j], "value": {...} }, ... ] }
// Omitted tuples are zero. Listing the same args twice with different values
// is rejected. Tuples not listed are completed from the listed ones by
// skew-symmetry (bracket) or symmetry (product); explicitly listed tuples are
// taken literally, which is how deliberately broken fixtures are written.
FdTable load_fd_table(const std::string& json_text);
FdTable load_fd_table_file(const std::string& path);

// Multilinear basis-table extension (spec-level wrapper).
Vec structure_constant_bracket(const FdTable& table, const std::vector<Vec>& args);

} // namespace tpnlie

#endif
