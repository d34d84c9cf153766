#include "tpnlie/identities.hpp"

#include <array>

#include <json.hpp>

#include "tpnlie/errors.hpp"

namespace tpnlie {

namespace {

constexpr std::array<const char*, 13> kIdentityNames = {
    "jacobi",          "jac-leibniz",     "transposed-leibniz", "bracket-h",
    "alternating-sum", "unit-pair",       "unit-pair-h",        "unital-expansion",
    "unit-leibniz",    "strong",          "prop41",             "mu-transposed-leibniz",
    "mu-jacobi",
};

std::vector<Polynomial> without(const std::vector<Polynomial>& v, std::size_t i) {
    std::vector<Polynomial> out;
    out.reserve(v.size() - 1);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i) out.push_back(v[k]);
    return out;
}

std::vector<Polynomial> with_slot(const std::vector<Polynomial>& v, std::size_t i,
                                  const Polynomial& p) {
    std::vector<Polynomial> out = v;
    out[i] = p;
    return out;
}

std::vector<Polynomial> prepend(const Polynomial& p, const std::vector<Polynomial>& v) {
    std::vector<Polynomial> out;
    out.reserve(v.size() + 1);
    out.push_back(p);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Polynomial> concat(const std::vector<Polynomial>& a,
                               const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

DefectReport make_report(IdentityId id, std::vector<Polynomial> tuple, Polynomial defect) {
    DefectReport r;
    r.identity = id;
    r.tuple = std::move(tuple);
    r.holds = defect.is_zero();
    r.defect = std::move(defect);
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

void enumerate_monomials(std::size_t nvars, unsigned max_degree, std::size_t var,
                         Monomial& current, std::vector<Monomial>& out) {
    if (var == nvars) {
        out.push_back(current);
        return;
    }
    unsigned used = static_cast<unsigned>(current.degree());
    for (unsigned e = 0; e + used <= max_degree; ++e) {
        current.exps[var] = e;
        enumerate_monomials(nvars, max_degree, var + 1, current, out);
    }
    current.exps[var] = 0;
}

} // namespace

std::string identity_name(IdentityId id) {
    return kIdentityNames.at(static_cast<std::size_t>(id));
}

IdentityId identity_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kIdentityNames.size(); ++i)
        if (name == kIdentityNames[i]) return static_cast<IdentityId>(i);
    throw ParseError("unknown identity '" + name + "'");
}

std::vector<IdentityId> core_identities() {
    return {IdentityId::Jacobi,          IdentityId::TransposedLeibniz,
            IdentityId::BracketH,        IdentityId::AlternatingSum,
            IdentityId::UnitPair,        IdentityId::UnitPairH,
            IdentityId::UnitalExpansion, IdentityId::UnitLeibniz,
            IdentityId::Strong,          IdentityId::Prop41};
}

Sampler::Sampler(Ring ring, std::uint64_t seed, unsigned max_degree, int coeff_bound)
    : ring_(std::move(ring)), seed_(seed), max_degree_(max_degree), coeff_bound_(coeff_bound),
      gen_(seed) {
    if (coeff_bound_ < 1) throw StructuralError("coefficient bound must be positive");
    Monomial scratch;
    scratch.exps.assign(ring_->size(), 0);
    enumerate_monomials(ring_->size(), max_degree_, 0, scratch, monomials_);
}

Polynomial Sampler::sample() {
    Polynomial p(ring_);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(coeff_bound_) + 1;
    for (const auto& m : monomials_) {
        std::int64_t c = static_cast<std::int64_t>(gen_() % span) - coeff_bound_;
        if (c != 0) p.add_term(m, Rational(c));
    }
    return p;
}

std::vector<Polynomial> Sampler::sample_tuple(std::size_t count) {
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample());
    return out;
}

Sampler Sampler::substream(IdentityId id) const {
    std::uint64_t mixed = splitmix64(seed_ ^ ((static_cast<std::uint64_t>(id) + 1) *
                                              0x9E3779B97F4A7C15ull));
    return Sampler(ring_, mixed, max_degree_, coeff_bound_);
}

DefectReport check_generalized_jacobi(const Bracket& b, const std::vector<Polynomial>& x,
                                      const std::vector<Polynomial>& y) {
    const std::size_t n = b.arity();
    if (x.size() != n || y.size() != n - 1) throw ArityError("jacobi check needs n and n-1 args");
    Polynomial lhs = b.eval(prepend(b.eval(x), y));
    Polynomial rhs(b.ring());
    for (std::size_t i = 0; i < n; ++i)
        rhs += b.eval(with_slot(x, i, b.eval(prepend(x[i], y))));
    IdentityId id = b.kind() == BracketKind::Mu ? IdentityId::MuJacobi : IdentityId::Jacobi;
    return make_report(id, concat(x, y), lhs - rhs);
}

DefectReport check_jac_leibniz(const Bracket& b, const std::vector<Polynomial>& u) {
    const std::size_t n = b.arity();
    if (u.size() != n + 1) throw ArityError("leibniz check needs n+1 args");
    std::vector<Polynomial> rest(u.begin() + 2, u.end());
    Polynomial defect = b.eval(prepend(u[0] * u[1], rest));
    defect -= u[0] * b.eval(prepend(u[1], rest));
    defect -= u[1] * b.eval(prepend(u[0], rest));
    return make_report(IdentityId::JacLeibniz, u, std::move(defect));
}

DefectReport check_transposed_leibniz(const Bracket& b, const Polynomial& h,
                                      const std::vector<Polynomial>& a) {
    const std::size_t n = b.arity();
    if (a.size() != n) throw ArityError("transposed leibniz check needs n args");
    Polynomial defect = Rational(static_cast<long>(n)) * h * b.eval(a);
    for (std::size_t i = 0; i < n; ++i) defect -= b.eval(with_slot(a, i, h * a[i]));
    IdentityId id = b.kind() == BracketKind::Mu ? IdentityId::MuTransposedLeibniz
                                                : IdentityId::TransposedLeibniz;
    return make_report(id, prepend(h, a), std::move(defect));
}

DefectReport check_bracket_h(const Bracket& b, const Polynomial& h,
                             const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
    const std::size_t n = b.arity();
    if (x.size() != n || y.size() != n - 1)
        throw ArityError("bracket-h check needs n and n-1 args");
    Polynomial defect = b.eval(prepend(b.eval(x) * h, y));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial term = b.eval(prepend(b.eval(prepend(x[i], y)) * h, without(x, i)));
        if (i % 2 == 0)
            defect -= term;
        else
            defect += term;
    }
    return make_report(IdentityId::BracketH, prepend(h, concat(x, y)), std::move(defect));
}

DefectReport check_alternating_sum(const Bracket& b, const std::vector<Polynomial>& x) {
    const std::size_t n = b.arity();
    if (x.size() != n + 1) throw ArityError("alternating sum check needs n+1 args");
    Polynomial defect(b.ring());
    for (std::size_t i = 0; i <= n; ++i) {
        Polynomial term = x[i] * b.eval(without(x, i));
        if (i % 2 == 0)
            defect += term;
        else
            defect -= term;
    }
    return make_report(IdentityId::AlternatingSum, x, std::move(defect));
}

DefectReport check_unit_pair(const Bracket& b, const std::vector<Polynomial>& a) {
    const std::size_t n = b.arity();
    if (a.size() != n + 1) throw ArityError("unit pair check needs n+1 args");
    const Polynomial one = Polynomial::constant(b.ring(), 1);
    Polynomial defect(b.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // slots a_1..a_n with a_j dropped and a_{n+1} standing in for a_i
            std::vector<Polynomial> slots;
            slots.reserve(n);
            slots.push_back(one);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                slots.push_back(k == i ? a[n] : a[k]);
            }
            Polynomial term = a[i] * a[j] * b.eval(slots);
            if (j % 2 == 0)
                defect += term;
            else
                defect -= term;
        }
    }
    return make_report(IdentityId::UnitPair, a, std::move(defect));
}

DefectReport check_unit_pair_h(const Bracket& b, const std::vector<Polynomial>& a) {
    const std::size_t n = b.arity();
    if (a.size() != n + 1) throw ArityError("unit pair check needs n+1 args");
    const Polynomial one = Polynomial::constant(b.ring(), 1);
    Polynomial defect(b.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Polynomial> slots;
            slots.reserve(n);
            slots.push_back(one);
            slots.push_back(a[n]);
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) slots.push_back(a[k]);
            // the j sign is taken at a_j's position once slot i is vacated
            std::size_t pos_j = j < i ? j : j - 1;
            Polynomial term = a[i] * a[j] * b.eval(slots);
            if ((i + pos_j) % 2 == 0)
                defect += term;
            else
                defect -= term;
        }
    }
    return make_report(IdentityId::UnitPairH, a, std::move(defect));
}

DefectReport check_unital_expansion(const Bracket& b, const std::vector<Polynomial>& u) {
    const std::size_t n = b.arity();
    if (u.size() != n) throw ArityError("unital expansion check needs n args");
    const Polynomial one = Polynomial::constant(b.ring(), 1);
    Polynomial defect = b.eval(u);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial term = u[i] * b.eval(prepend(one, without(u, i)));
        if (i % 2 == 0)
            defect -= term;
        else
            defect += term;
    }
    return make_report(IdentityId::UnitalExpansion, u, std::move(defect));
}

DefectReport check_unit_leibniz(const Bracket& b, const std::vector<Polynomial>& u) {
    const std::size_t n = b.arity();
    if (u.size() != n) throw ArityError("unit leibniz check needs n args");
    const Polynomial one = Polynomial::constant(b.ring(), 1);
    std::vector<Polynomial> rest(u.begin() + 2, u.end());
    Polynomial defect = b.eval(prepend(one, prepend(u[0] * u[1], rest)));
    defect -= u[0] * b.eval(prepend(one, prepend(u[1], rest)));
    defect -= u[1] * b.eval(prepend(one, prepend(u[0], rest)));
    return make_report(IdentityId::UnitLeibniz, u, std::move(defect));
}

DefectReport check_strong(const Bracket& b, const Polynomial& h, const Polynomial& y1,
                          const Polynomial& y2, const std::vector<Polynomial>& x) {
    const std::size_t n = b.arity();
    if (x.size() != n - 1) throw ArityError("strong check needs n-1 plain args");
    Polynomial defect = y1 * b.eval(prepend(h * y2, x));
    defect -= y2 * b.eval(prepend(h * y1, x));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Polynomial term = h * x[i] * b.eval(prepend(y1, prepend(y2, without(x, i))));
        if (i % 2 == 0)
            defect += term;
        else
            defect -= term;
    }
    std::vector<Polynomial> tuple = prepend(h, prepend(y1, prepend(y2, x)));
    return make_report(IdentityId::Strong, std::move(tuple), std::move(defect));
}

DefectReport check_prop41(const Bracket& b, const Polynomial& h,
                          const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
    const std::size_t n = b.arity();
    if (x.size() != n || y.size() != n - 1) throw ArityError("prop41 check needs n and n-1 args");
    Polynomial lhs(b.ring());
    Polynomial inner_x = b.eval(x);
    for (std::size_t j = 0; j + 1 < n; ++j)
        lhs += b.eval(prepend(inner_x, with_slot(y, j, y[j] * h)));
    Polynomial rhs(b.ring());
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial inner_i = b.eval(prepend(x[i], y));
        std::vector<Polynomial> others = without(x, i);
        Polynomial sum_i(b.ring());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::size_t pos_j = j < i ? j : j - 1;
            sum_i += b.eval(prepend(inner_i, with_slot(others, pos_j, others[pos_j] * h)));
        }
        if (i % 2 == 0)
            rhs += sum_i;
        else
            rhs -= sum_i;
    }
    return make_report(IdentityId::Prop41, prepend(h, concat(x, y)), lhs - rhs);
}

std::size_t identity_tuple_size(IdentityId id, std::size_t arity) {
    const std::size_t n = arity;
    switch (id) {
    case IdentityId::Jacobi:
    case IdentityId::MuJacobi:
        return 2 * n - 1;
    case IdentityId::JacLeibniz:
    case IdentityId::AlternatingSum:
    case IdentityId::UnitPair:
    case IdentityId::UnitPairH:
        return n + 1;
    case IdentityId::TransposedLeibniz:
    case IdentityId::MuTransposedLeibniz:
        return n + 1;
    case IdentityId::BracketH:
    case IdentityId::Prop41:
        return 2 * n;
    case IdentityId::UnitalExpansion:
    case IdentityId::UnitLeibniz:
        return n;
    case IdentityId::Strong:
        return n + 2;
    }
    throw StructuralError("unreachable identity id");
}

DefectReport run_identity(IdentityId id, const Bracket& b, Sampler& sampler) {
    require_same_ring(b.ring(), sampler.ring());
    const std::size_t n = b.arity();
    switch (id) {
    case IdentityId::Jacobi:
    case IdentityId::MuJacobi: {
        auto x = sampler.sample_tuple(n);
        auto y = sampler.sample_tuple(n - 1);
        return check_generalized_jacobi(b, x, y);
    }
    case IdentityId::JacLeibniz:
        return check_jac_leibniz(b, sampler.sample_tuple(n + 1));
    case IdentityId::TransposedLeibniz:
    case IdentityId::MuTransposedLeibniz: {
        Polynomial h = sampler.sample();
        return check_transposed_leibniz(b, h, sampler.sample_tuple(n));
    }
    case IdentityId::BracketH: {
        Polynomial h = sampler.sample();
        auto x = sampler.sample_tuple(n);
        auto y = sampler.sample_tuple(n - 1);
        return check_bracket_h(b, h, x, y);
    }
    case IdentityId::AlternatingSum:
        return check_alternating_sum(b, sampler.sample_tuple(n + 1));
    case IdentityId::UnitPair:
        return check_unit_pair(b, sampler.sample_tuple(n + 1));
    case IdentityId::UnitPairH:
        return check_unit_pair_h(b, sampler.sample_tuple(n + 1));
    case IdentityId::UnitalExpansion:
        return check_unital_expansion(b, sampler.sample_tuple(n));
    case IdentityId::UnitLeibniz:
        return check_unit_leibniz(b, sampler.sample_tuple(n));
    case IdentityId::Strong: {
        Polynomial h = sampler.sample();
        Polynomial y1 = sampler.sample();
        Polynomial y2 = sampler.sample();
        return check_strong(b, h, y1, y2, sampler.sample_tuple(n - 1));
    }
    case IdentityId::Prop41: {
        Polynomial h = sampler.sample();
        auto x = sampler.sample_tuple(n);
        auto y = sampler.sample_tuple(n - 1);
        return check_prop41(b, h, x, y);
    }
    }
    throw StructuralError("unreachable identity id");
}

std::vector<DefectReport> verify_suite(const Bracket& b, const std::vector<IdentityId>& ids,
                                       const Sampler& sampler, unsigned trials) {
    if (trials < 1) throw StructuralError("trials must be at least 1");
    std::vector<DefectReport> reports;
    reports.reserve(ids.size() * trials);
    for (IdentityId id : ids) {
        Sampler sub = sampler.substream(id);
        for (unsigned t = 0; t < trials; ++t) reports.push_back(run_identity(id, b, sub));
    }
    return reports;
}

std::vector<DefectReport> check_mu_axioms(const Derivation& d, const Bracket& inner,
                                          const Sampler& sampler, unsigned trials) {
    Bracket mu = Bracket::mu(d, inner);
    return verify_suite(mu, {IdentityId::MuJacobi, IdentityId::MuTransposedLeibniz}, sampler,
                        trials);
}

std::string reports_to_json(const std::vector<DefectReport>& reports, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::map<IdentityId, unsigned> trial_counter;
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["identity"] = identity_name(r.identity);
        obj["trial"] = trial_counter[r.identity]++;
        obj["holds"] = r.holds;
        obj["defect"] = to_string(r.defect);
        arr.push_back(std::move(obj));
    }
    return arr.dump(indent);
}

} // namespace tpnlie
