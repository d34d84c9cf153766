#ifndef TPNLIE_POLYNOMIAL_HPP
#define TPNLIE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tpnlie/rational.hpp"
#include "tpnlie/ring.hpp"

namespace tpnlie {

// Exponent vector; its length always equals the ambient ring's variable count.
struct Monomial {
    std::vector<std::uint32_t> exps;

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Graded lexicographic, highest first, so map iteration starts at the leading
// term. Deterministic iteration keeps printing and reports stable.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree();
        auto db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

// Sparse multivariate polynomial over the rationals. Terms never store a zero
// coefficient; two polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, const Rational& constant);

    static Polynomial variable(const Ring& ring, std::size_t var_index);
    static Polynomial constant(const Ring& ring, const Rational& value) {
        return Polynomial(ring, value);
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t total_degree() const; // zero polynomial reports 0

    // Adds coeff * monomial, pruning the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    Ring ring_;
    TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);

Polynomial pow(const Polynomial& p, unsigned e);

// Formal partial derivative with respect to the ring's var_index-th variable.
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

// Quotient p / d assuming exact divisibility; throws StructuralError otherwise.
// Only needed by the fraction-free determinant path.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

// Text format: rational coefficients, '*' products, '^' powers,
// e.g. "3*x1^2*x2 - 1/2". to_string and parse_polynomial round-trip.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(const Ring& ring, const std::string& text);

} // namespace tpnlie

#endif
