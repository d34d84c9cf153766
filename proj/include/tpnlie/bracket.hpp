#ifndef TPNLIE_BRACKET_HPP
#define TPNLIE_BRACKET_HPP

#include <memory>
#include <vector>

#include "tpnlie/determinant.hpp"
#include "tpnlie/model.hpp"

namespace tpnlie {

enum class BracketKind { Jacobian, W, Mu };

// An n-ary multilinear skew-symmetric bracket over a polynomial model.
//
//   Jacobian: det of (D_i applied to u_j), needs n derivations.
//   W:        det with first row u_1..u_n and rows D_i(u_j) below,
//             needs n-1 derivations.
//   Mu:       (n+1)-ary bracket induced by an inner n-ary bracket and a
//             distinguished derivation D:
//             mu(a_1..a_{n+1}) = sum_i (-1)^{i-1} D(a_i) [a_1..^a_i..a_{n+1}].
class Bracket {
public:
    static Bracket jacobian(PolynomialModel model);
    static Bracket w(PolynomialModel model);
    static Bracket mu(Derivation d, Bracket inner);

    BracketKind kind() const { return kind_; }
    std::size_t arity() const { return arity_; }
    const Ring& ring() const { return ring_; }
    const PolynomialModel& model() const;

    Polynomial eval(const std::vector<Polynomial>& args) const;

private:
    Bracket() = default;

    BracketKind kind_ = BracketKind::Jacobian;
    std::size_t arity_ = 0;
    Ring ring_;
    std::shared_ptr<const PolynomialModel> model_;
    // Mu only:
    std::shared_ptr<const Derivation> outer_derivation_;
    std::shared_ptr<const Bracket> inner_;
};

// Spec-level convenience wrappers.
Polynomial jacobian_bracket(const PolynomialModel& model, const std::vector<Polynomial>& args);
Polynomial w_bracket(const PolynomialModel& model, const std::vector<Polynomial>& args);
Polynomial mu_bracket(const Derivation& d, const Bracket& inner,
                      const std::vector<Polynomial>& args);

} // namespace tpnlie

#endif
