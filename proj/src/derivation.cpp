#include "tpnlie/derivation.hpp"

namespace tpnlie {

Derivation::Derivation(Ring ring, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != ring_->size())
        throw StructuralError("derivation needs one coefficient per ring variable");
    for (const auto& c : coeffs_) require_same_ring(ring_, c.ring());
}

Derivation Derivation::partial(const Ring& ring, std::size_t var_index) {
    if (var_index >= ring->size()) throw StructuralError("variable index out of range");
    std::vector<Polynomial> coeffs(ring->size(), Polynomial(ring));
    coeffs[var_index] = Polynomial::constant(ring, 1);
    return Derivation(ring, std::move(coeffs));
}

Derivation Derivation::euler(const Ring& ring, std::size_t var_index) {
    if (var_index >= ring->size()) throw StructuralError("variable index out of range");
    std::vector<Polynomial> coeffs(ring->size(), Polynomial(ring));
    coeffs[var_index] = Polynomial::variable(ring, var_index);
    return Derivation(ring, std::move(coeffs));
}

Polynomial Derivation::apply(const Polynomial& p) const {
    require_same_ring(ring_, p.ring());
    Polynomial r(ring_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        r += coeffs_[j] * partial_derivative(p, j);
    }
    return r;
}

bool Derivation::commutes_with(const Derivation& other) const {
    require_same_ring(ring_, other.ring_);
    for (std::size_t k = 0; k < ring_->size(); ++k) {
        if (apply(other.coeffs_[k]) != other.apply(coeffs_[k])) return false;
    }
    return true;
}

} // namespace tpnlie
