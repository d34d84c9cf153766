#ifndef TPNLIE_FD_ALGEBRA_HPP
#define TPNLIE_FD_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "tpnlie/fd_table.hpp"
#include "tpnlie/subspace.hpp"

namespace tpnlie {

// Exhaustive basis-tuple validation of a structure-constant algebra.
struct FdValidation {
    bool skew_symmetric = false;
    bool jacobi = false;
    bool has_product = false;
    bool product_commutative = false;  // meaningful only when has_product
    bool product_associative = false;
    bool transposed_leibniz = false;
    std::vector<std::string> failures;

    bool valid() const {
        return skew_symmetric && jacobi &&
               (!has_product || (product_commutative && product_associative && transposed_leibniz));
    }
};

FdValidation validate(const FdTable& a);

// Span of all basis-tuple bracket values.
Subspace derived_space(const FdTable& a);

// [s, A, ..., A] inside s, checked on spanning tuples.
bool is_ideal(const FdTable& a, const Subspace& s);

// Nonzero proper s with [s,A,...,A] and [A s, A,...,A] inside s. Needs the
// product table. The zero subspace is rejected along with the full space.
bool is_quasi_ideal(const FdTable& a, const Subspace& s);

// Least bracket-closed subspace containing s (fixed point of span growth).
Subspace ideal_closure(const FdTable& a, const Subspace& s);

// NotSimple comes with a witness: a proper ideal (nonzero whenever one
// exists). ProbablySimple only says no witness was found.
struct ProbeResult {
    enum class Kind { NotSimple, ProbablySimple };
    Kind kind = Kind::ProbablySimple;
    std::optional<Subspace> witness;
    unsigned trials = 0;
};

ProbeResult simplicity_probe(const FdTable& a, unsigned trials, std::uint64_t seed);

// Subspace file format: { "rows": [ ["1","0",...], ... ] } of rational strings.
Subspace load_subspace(const std::string& json_text, std::size_t ambient_dim);
std::string subspace_to_json(const Subspace& s, int indent = -1);

} // namespace tpnlie

#endif
