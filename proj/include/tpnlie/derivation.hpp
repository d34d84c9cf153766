#ifndef TPNLIE_DERIVATION_HPP
#define TPNLIE_DERIVATION_HPP

#include <vector>

#include "tpnlie/polynomial.hpp"

namespace tpnlie {

// Formal derivation sum_j c_j * d/dx_j of a polynomial ring, given by one
// coefficient polynomial per ring variable.
class Derivation {
public:
    Derivation(Ring ring, std::vector<Polynomial> coefficients);

    // The coordinate partial d/dx_{var_index}.
    static Derivation partial(const Ring& ring, std::size_t var_index);
    // x_{var_index} * d/dx_{var_index}.
    static Derivation euler(const Ring& ring, std::size_t var_index);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }

    Polynomial apply(const Polynomial& p) const;

    // Exact commutator test: [D,E] = 0 iff D(e_k) = E(d_k) for every variable,
    // where d_k, e_k are the coefficient polynomials.
    bool commutes_with(const Derivation& other) const;

private:
    Ring ring_;
    std::vector<Polynomial> coeffs_;
};

inline Polynomial apply_derivation(const Derivation& d, const Polynomial& p) {
    return d.apply(p);
}

inline bool derivations_commute(const Derivation& d, const Derivation& e) {
    return d.commutes_with(e);
}

} // namespace tpnlie

#endif
