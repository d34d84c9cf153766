#ifndef TPNLIE_RING_HPP
#define TPNLIE_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "tpnlie/errors.hpp"

namespace tpnlie {

// Ambient variable list of a polynomial ring over the rationals. Rings are
// immutable and shared; two rings are compatible when their variable lists
// coincide.
class RingData {
public:
    explicit RingData(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& names() const { return vars_; }

private:
    std::vector<std::string> vars_;
};

using Ring = std::shared_ptr<const RingData>;

inline Ring make_ring(std::vector<std::string> vars) {
    return std::make_shared<RingData>(std::move(vars));
}

// Default CLI ring: variables x1..xk.
inline Ring make_ring(std::size_t nvars) {
    std::vector<std::string> vars;
    vars.reserve(nvars);
    for (std::size_t i = 1; i <= nvars; ++i) vars.push_back("x" + std::to_string(i));
    return make_ring(std::move(vars));
}

inline bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (!same_ring(a, b)) throw RingMismatchError("operands live in different rings");
}

} // namespace tpnlie

#endif
