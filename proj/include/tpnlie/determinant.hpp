#ifndef TPNLIE_DETERMINANT_HPP
#define TPNLIE_DETERMINANT_HPP

#include <vector>

#include "tpnlie/polynomial.hpp"

namespace tpnlie {

// Exact determinant over the polynomial ring. Cofactor expansion up to 4x4,
// fraction-free Bareiss elimination beyond; every division there is exact.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

} // namespace tpnlie

#endif
