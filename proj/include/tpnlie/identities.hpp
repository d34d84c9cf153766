#ifndef TPNLIE_IDENTITIES_HPP
#define TPNLIE_IDENTITIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tpnlie/bracket.hpp"

namespace tpnlie {

// One tag per defect formula. The numbered tags follow the usual numbering of
// the identity catalog for these algebras; Strong is the extra compatibility
// identity, Prop41 the mixed double-sum consequence, and the Mu tags re-run
// Jacobi / the transposed Leibniz rule against the derivation-induced bracket.
enum class IdentityId {
    Jacobi,             // (1)
    JacLeibniz,         // (2)
    TransposedLeibniz,  // (3)
    BracketH,           // (4)
    AlternatingSum,     // (5)
    UnitPair,           // (6)
    UnitPairH,          // (7)
    UnitalExpansion,    // (8)
    UnitLeibniz,        // (9)
    Strong,
    Prop41,
    MuTransposedLeibniz,
    MuJacobi,
};

std::string identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name); // throws ParseError
std::vector<IdentityId> core_identities();              // the ten non-Mu, non-JacLeibniz tags

struct DefectReport {
    IdentityId identity;
    std::vector<Polynomial> tuple;
    Polynomial defect;
    bool holds = false; // defect == 0
};

// Deterministic tuple source: dense integer-coefficient polynomials of total
// degree <= max_degree with coefficients in [-coeff_bound, coeff_bound].
// Identical seeds produce identical streams; raw engine words are reduced by
// hand so the stream does not depend on library distribution internals.
class Sampler {
public:
    Sampler(Ring ring, std::uint64_t seed, unsigned max_degree = 3, int coeff_bound = 5);

    Polynomial sample();
    std::vector<Polynomial> sample_tuple(std::size_t count);

    const Ring& ring() const { return ring_; }
    std::uint64_t seed() const { return seed_; }
    unsigned max_degree() const { return max_degree_; }
    int coeff_bound() const { return coeff_bound_; }

    // Independent substream for one identity of a suite run.
    Sampler substream(IdentityId id) const;

private:
    Ring ring_;
    std::uint64_t seed_;
    unsigned max_degree_;
    int coeff_bound_;
    std::mt19937_64 gen_;
    std::vector<Monomial> monomials_; // fixed enumeration order
};

// Defect evaluators. Each returns the exact polynomial difference of the two
// sides of the identity on the given tuple; holds iff the defect is zero.
// These expand both sides from bracket evaluations only and share no
// simplification with the bracket constructions themselves.
DefectReport check_generalized_jacobi(const Bracket& b, const std::vector<Polynomial>& x,
                                      const std::vector<Polynomial>& y);
DefectReport check_jac_leibniz(const Bracket& b, const std::vector<Polynomial>& u);
DefectReport check_transposed_leibniz(const Bracket& b, const Polynomial& h,
                                      const std::vector<Polynomial>& a);
DefectReport check_bracket_h(const Bracket& b, const Polynomial& h,
                             const std::vector<Polynomial>& x, const std::vector<Polynomial>& y);
DefectReport check_alternating_sum(const Bracket& b, const std::vector<Polynomial>& x);
DefectReport check_unit_pair(const Bracket& b, const std::vector<Polynomial>& a);
DefectReport check_unit_pair_h(const Bracket& b, const std::vector<Polynomial>& a);
DefectReport check_unital_expansion(const Bracket& b, const std::vector<Polynomial>& u);
DefectReport check_unit_leibniz(const Bracket& b, const std::vector<Polynomial>& u);
DefectReport check_strong(const Bracket& b, const Polynomial& h, const Polynomial& y1,
                          const Polynomial& y2, const std::vector<Polynomial>& x);
DefectReport check_prop41(const Bracket& b, const Polynomial& h,
                          const std::vector<Polynomial>& x, const std::vector<Polynomial>& y);

// Number of sampled elements one trial of an identity consumes for a bracket
// of the given arity.
std::size_t identity_tuple_size(IdentityId id, std::size_t arity);

// Runs one sampled trial of the identity. For the Mu tags the bracket must
// already be the Mu bracket.
DefectReport run_identity(IdentityId id, const Bracket& b, Sampler& sampler);

// trials sampled tuples per identity, each identity on its own substream, in
// the order given. Deterministic for a fixed seed.
std::vector<DefectReport> verify_suite(const Bracket& b, const std::vector<IdentityId>& ids,
                                       const Sampler& sampler, unsigned trials);

// Builds mu = (d, inner) and runs MuJacobi and MuTransposedLeibniz on it.
std::vector<DefectReport> check_mu_axioms(const Derivation& d, const Bracket& inner,
                                          const Sampler& sampler, unsigned trials);

// JSON array of {"identity", "trial", "holds", "defect"}; trial numbering is
// per identity in report order.
std::string reports_to_json(const std::vector<DefectReport>& reports, int indent = -1);

} // namespace tpnlie

#endif
