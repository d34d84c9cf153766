#include "tpnlie/bracket.hpp"

namespace tpnlie {

PolynomialModel::PolynomialModel(Ring ring, std::vector<Derivation> derivations)
    : ring_(std::move(ring)), derivs_(std::move(derivations)) {
    for (const auto& d : derivs_) require_same_ring(ring_, d.ring());
    for (std::size_t i = 0; i < derivs_.size(); ++i)
        for (std::size_t j = i + 1; j < derivs_.size(); ++j)
            if (!derivs_[i].commutes_with(derivs_[j]))
                throw StructuralError("model derivations must pairwise commute");
}

PolynomialModel PolynomialModel::with_partials(const Ring& ring, std::size_t count) {
    if (count > ring->size())
        throw StructuralError("not enough ring variables for the requested partials");
    std::vector<Derivation> ds;
    ds.reserve(count);
    for (std::size_t i = 0; i < count; ++i) ds.push_back(Derivation::partial(ring, i));
    return PolynomialModel(ring, std::move(ds));
}

Bracket Bracket::jacobian(PolynomialModel model) {
    if (model.derivations().size() < 2)
        throw StructuralError("Jacobian bracket needs at least two derivations");
    Bracket b;
    b.kind_ = BracketKind::Jacobian;
    b.arity_ = model.derivations().size();
    b.ring_ = model.ring();
    b.model_ = std::make_shared<PolynomialModel>(std::move(model));
    return b;
}

Bracket Bracket::w(PolynomialModel model) {
    if (model.derivations().empty())
        throw StructuralError("W bracket needs at least one derivation");
    Bracket b;
    b.kind_ = BracketKind::W;
    b.arity_ = model.derivations().size() + 1;
    b.ring_ = model.ring();
    b.model_ = std::make_shared<PolynomialModel>(std::move(model));
    return b;
}

Bracket Bracket::mu(Derivation d, Bracket inner) {
    require_same_ring(d.ring(), inner.ring());
    Bracket b;
    b.kind_ = BracketKind::Mu;
    b.arity_ = inner.arity() + 1;
    b.ring_ = inner.ring();
    b.outer_derivation_ = std::make_shared<Derivation>(std::move(d));
    b.inner_ = std::make_shared<Bracket>(std::move(inner));
    return b;
}

const PolynomialModel& Bracket::model() const {
    if (!model_) throw StructuralError("mu bracket has no model of its own");
    return *model_;
}

Polynomial Bracket::eval(const std::vector<Polynomial>& args) const {
    if (args.size() != arity_)
        throw ArityError("bracket expects " + std::to_string(arity_) + " arguments, got " +
                         std::to_string(args.size()));
    for (const auto& a : args) require_same_ring(ring_, a.ring());

    const std::size_t n = arity_;
    switch (kind_) {
    case BracketKind::Jacobian: {
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(ring_)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = model_->derivations()[i].apply(args[j]);
        return determinant(m);
    }
    case BracketKind::W: {
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(ring_)));
        m[0] = args;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = model_->derivations()[i - 1].apply(args[j]);
        return determinant(m);
    }
    case BracketKind::Mu: {
        Polynomial sum(ring_);
        std::vector<Polynomial> rest(args.begin() + 1, args.end());
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial term = outer_derivation_->apply(args[i]) * inner_->eval(rest);
            if (i % 2 == 0)
                sum += term;
            else
                sum -= term;
            if (i + 1 < n) rest[i] = args[i]; // slide the omitted slot right
        }
        return sum;
    }
    }
    throw StructuralError("unreachable bracket kind");
}

Polynomial jacobian_bracket(const PolynomialModel& model, const std::vector<Polynomial>& args) {
    return Bracket::jacobian(model).eval(args);
}

Polynomial w_bracket(const PolynomialModel& model, const std::vector<Polynomial>& args) {
    return Bracket::w(model).eval(args);
}

Polynomial mu_bracket(const Derivation& d, const Bracket& inner,
                      const std::vector<Polynomial>& args) {
    return Bracket::mu(d, inner).eval(args);
}

} // namespace tpnlie
