#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tpnlie/identities.hpp"

using namespace tpnlie;

namespace {

Bracket w_model(std::size_t n, std::size_t vars) {
    Ring ring = make_ring(vars);
    return Bracket::w(PolynomialModel::with_partials(ring, n - 1));
}

Bracket jac_model(std::size_t n) {
    Ring ring = make_ring(n);
    return Bracket::jacobian(PolynomialModel::with_partials(ring, n));
}

bool all_hold(const std::vector<DefectReport>& reports) {
    for (const auto& r : reports)
        if (!r.holds) return false;
    return true;
}

} // namespace

TEST_CASE("identity names round trip") {
    for (int i = 0; i <= static_cast<int>(IdentityId::MuJacobi); ++i) {
        auto id = static_cast<IdentityId>(i);
        CHECK(identity_from_name(identity_name(id)) == id);
    }
    CHECK_THROWS_AS(identity_from_name("unknown"), ParseError);
    CHECK(core_identities().size() == 10);
}

TEST_CASE("transposed Leibniz with unit factor holds for any skew bracket") {
    auto b = jac_model(2);
    Sampler s(b.ring(), 1, 3, 4);
    auto a = s.sample_tuple(2);
    CHECK(check_transposed_leibniz(b, Polynomial::constant(b.ring(), 1), a).holds);
}

TEST_CASE("transposed Leibniz separates the W and jacobian models") {
    auto w = w_model(2, 1);
    Polynomial h = parse_polynomial(w.ring(), "x1");
    CHECK(check_transposed_leibniz(w, h, {parse_polynomial(w.ring(), "x1"),
                                          parse_polynomial(w.ring(), "x1^2")})
              .holds);

    auto jac = jac_model(2);
    auto reports = verify_suite(jac, {IdentityId::TransposedLeibniz}, Sampler(jac.ring(), 42), 50);
    CHECK_FALSE(all_hold(reports));
}

TEST_CASE("jacobian model passes its own identities but not the unital expansion") {
    auto jac = jac_model(2);
    Sampler s(jac.ring(), 42);
    CHECK(all_hold(verify_suite(jac, {IdentityId::Jacobi, IdentityId::JacLeibniz}, s, 25)));

    // with a constant first slot the jacobian vanishes, so the expansion
    // defect collapses to the bracket itself
    Sampler t(jac.ring(), 7);
    for (int k = 0; k < 10; ++k) {
        auto u = t.sample_tuple(2);
        auto rep = check_unital_expansion(jac, u);
        CHECK(rep.defect == jac.eval(u));
    }
}

TEST_CASE("jacobi defect vanishes on repeated arguments") {
    for (auto& b : {w_model(3, 2), jac_model(2)}) {
        Sampler s(b.ring(), 27);
        auto x = s.sample_tuple(b.arity());
        x[1] = x[0];
        auto y = s.sample_tuple(b.arity() - 1);
        CHECK(check_generalized_jacobi(b, x, y).holds);
    }
}

TEST_CASE("unital expansion is trivial when an argument is the unit") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 33);
    auto u = s.sample_tuple(3);
    u[1] = Polynomial::constant(w.ring(), 1);
    CHECK(check_unital_expansion(w, u).holds);
}

TEST_CASE("strong check vanishes on symmetric arguments") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 5);
    Polynomial h = s.sample(), y = s.sample();
    auto x = s.sample_tuple(2);
    CHECK(check_strong(w, h, y, y, x).holds);
}

TEST_CASE("bracket-h edge cases") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 9);
    auto x = s.sample_tuple(3);
    auto y = s.sample_tuple(2);
    CHECK(check_bracket_h(w, Polynomial(w.ring()), x, y).holds); // h = 0
    x[1] = x[0];
    CHECK(check_bracket_h(w, s.sample(), x, y).holds); // repeated bracket argument
}

TEST_CASE("alternating sum on the cubic chain") {
    auto w = w_model(2, 1);
    auto P = [&](const char* t) { return parse_polynomial(w.ring(), t); };
    CHECK(check_alternating_sum(w, {P("x1"), P("x1^2"), P("x1^3")}).holds);
    Sampler s(w.ring(), 11);
    auto x = s.sample_tuple(3);
    x[2] = x[0];
    CHECK(check_alternating_sum(w, x).holds);
}

TEST_CASE("unit pair identities hold for any skew bracket") {
    for (auto& b : {w_model(3, 2), jac_model(2), jac_model(3)}) {
        Sampler s(b.ring(), 13);
        for (int t = 0; t < 10; ++t) {
            auto a = s.sample_tuple(b.arity() + 1);
            CHECK(check_unit_pair(b, a).holds);
            CHECK(check_unit_pair_h(b, a).holds);
        }
        auto same = std::vector<Polynomial>(b.arity() + 1, Sampler(b.ring(), 3).sample());
        CHECK(check_unit_pair(b, same).holds);
        CHECK(check_unit_pair_h(b, same).holds);
    }
}

TEST_CASE("unit leibniz edge cases") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 15);
    auto u = s.sample_tuple(3);
    u[0] = Polynomial::constant(w.ring(), 1);
    CHECK(check_unit_leibniz(w, u).holds);
    auto v = s.sample_tuple(3);
    v[1] = v[0];
    CHECK(check_unit_leibniz(w, v).holds);
}

TEST_CASE("prop41 edge cases") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 19);
    auto x = s.sample_tuple(3);
    auto y = s.sample_tuple(2);
    CHECK(check_prop41(w, Polynomial(w.ring()), x, y).holds);
    y[1] = y[0];
    CHECK(check_prop41(w, s.sample(), x, y).holds);
}

TEST_CASE("full W suite holds for n = 2 and n = 3") {
    for (auto [n, vars] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 2}}) {
        auto w = w_model(n, vars);
        auto reports = verify_suite(w, core_identities(), Sampler(w.ring(), 42), 10);
        CHECK(all_hold(reports));
    }
}

TEST_CASE("identity implications hold jointly on sampled W tuples") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 21);
    for (int t = 0; t < 10; ++t) {
        Polynomial h = s.sample();
        auto x = s.sample_tuple(3);
        auto y = s.sample_tuple(2);
        bool leibniz = check_transposed_leibniz(w, h, x).holds;
        REQUIRE(leibniz);
        CHECK(check_bracket_h(w, h, x, y).holds);
        CHECK(check_alternating_sum(w, s.sample_tuple(4)).holds);
    }
}

TEST_CASE("mu axioms hold over a strong base") {
    Ring ring = make_ring(1);
    auto inner = Bracket::w(PolynomialModel::with_partials(ring, 1));
    auto d = Derivation::partial(ring, 0);
    auto reports = check_mu_axioms(d, inner, Sampler(ring, 42), 25);
    CHECK(reports.size() == 50);
    CHECK(all_hold(reports));
}

TEST_CASE("mu axioms are trivial for a zero inner bracket") {
    // derivations with zero coefficients give an identically zero W bracket
    Ring ring = make_ring(1);
    Derivation zero_d(ring, {Polynomial(ring)});
    auto inner = Bracket::w(PolynomialModel(ring, {zero_d}));
    Sampler probe(ring, 3);
    CHECK(inner.eval(probe.sample_tuple(2)).is_zero());
    auto reports = check_mu_axioms(Derivation::partial(ring, 0), inner, Sampler(ring, 1), 5);
    CHECK(all_hold(reports));
}

TEST_CASE("constant-only sampling makes every defect vanish") {
    auto w = w_model(3, 2);
    Sampler s(w.ring(), 42, 0, 5);
    auto reports = verify_suite(w, core_identities(), s, 1);
    CHECK(all_hold(reports));
}

TEST_CASE("suite runs are reproducible byte for byte") {
    auto w = w_model(3, 2);
    auto ids = std::vector<IdentityId>{IdentityId::Jacobi, IdentityId::Strong};
    auto a = verify_suite(w, ids, Sampler(w.ring(), 42), 5);
    auto b = verify_suite(w, ids, Sampler(w.ring(), 42), 5);
    CHECK(reports_to_json(a) == reports_to_json(b));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].tuple == b[i].tuple);
    // a different seed draws different tuples even if every defect is zero
    auto c = verify_suite(w, ids, Sampler(w.ring(), 43), 5);
    CHECK(a[0].tuple != c[0].tuple);
}

TEST_CASE("report serialization shape") {
    auto w = w_model(2, 1);
    auto reports = verify_suite(w, {IdentityId::Jacobi}, Sampler(w.ring(), 42), 2);
    std::string json = reports_to_json(reports);
    CHECK(json.find("\"identity\":\"jacobi\"") != std::string::npos);
    CHECK(json.find("\"trial\":1") != std::string::npos);
    CHECK(json.find("\"holds\":true") != std::string::npos);
    CHECK(json.find("\"defect\":\"0\"") != std::string::npos);
}
