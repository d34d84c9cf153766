#ifndef TPNLIE_MODEL_HPP
#define TPNLIE_MODEL_HPP

#include <vector>

#include "tpnlie/derivation.hpp"

namespace tpnlie {

// A unital polynomial ring together with an ordered list of pairwise
// commuting derivations; the construction rejects non-commuting pairs.
class PolynomialModel {
public:
    PolynomialModel(Ring ring, std::vector<Derivation> derivations);

    const Ring& ring() const { return ring_; }
    const std::vector<Derivation>& derivations() const { return derivs_; }
    Polynomial unit() const { return Polynomial::constant(ring_, 1); }

    // Coordinate partials on x1..xk (k = nvars derivations).
    static PolynomialModel with_partials(const Ring& ring, std::size_t count);

private:
    Ring ring_;
    std::vector<Derivation> derivs_;
};

} // namespace tpnlie

#endif
