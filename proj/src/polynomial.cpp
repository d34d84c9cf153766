#include "tpnlie/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace tpnlie {

Polynomial::Polynomial(Ring ring, const Rational& constant) : ring_(std::move(ring)) {
    if (constant != 0) {
        Monomial one;
        one.exps.assign(ring_->size(), 0);
        terms_.emplace(std::move(one), constant);
    }
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t var_index) {
    if (var_index >= ring->size()) throw StructuralError("variable index out of range");
    Polynomial p(ring);
    Monomial m;
    m.exps.assign(ring->size(), 0);
    m.exps[var_index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

std::uint64_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    return terms_ == o.terms_;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring(), b.ring());
    Polynomial r(a.ring());
    Monomial prod;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            prod.exps.resize(ma.exps.size());
            for (std::size_t i = 0; i < ma.exps.size(); ++i)
                prod.exps[i] = ma.exps[i] + mb.exps[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(Polynomial a, const Rational& c) {
    a *= c;
    return a;
}

Polynomial operator*(const Rational& c, Polynomial a) {
    a *= c;
    return a;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(p.ring(), 1);
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
    if (var_index >= p.ring()->size()) throw StructuralError("variable index out of range");
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m.exps[var_index] == 0) continue;
        Monomial d = m;
        Rational coeff = c * Rational(d.exps[var_index]);
        d.exps[var_index] -= 1;
        r.add_term(d, coeff);
    }
    return r;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    require_same_ring(p.ring(), d.ring());
    if (d.is_zero()) throw StructuralError("division by the zero polynomial");
    Polynomial rem = p;
    Polynomial quot(p.ring());
    const auto& [dm, dc] = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        Monomial q;
        q.exps.resize(rm.exps.size());
        for (std::size_t i = 0; i < rm.exps.size(); ++i) {
            if (rm.exps[i] < dm.exps[i]) throw StructuralError("inexact polynomial division");
            q.exps[i] = rm.exps[i] - dm.exps[i];
        }
        Rational qc = rc / dc;
        quot.add_term(q, qc);
        Polynomial t(p.ring());
        t.add_term(q, qc);
        rem -= t * d;
    }
    return quot;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.degree() > 0;
        if (!has_vars || a != 1) out << to_string(a);
        bool printed = !has_vars || a != 1;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (printed) out << "*";
            out << p.ring()->name(i);
            if (m.exps[i] > 1) out << "^" << m.exps[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" + text + "'");
    }

    Integer integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(text.substr(start, pos - start));
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected variable name");
        return text.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    Lexer lex{text};
    Polynomial result(ring);
    if (lex.eof()) lex.fail("empty polynomial");

    bool first_term = true;
    while (!lex.eof()) {
        Rational sign(1);
        if (lex.consume('-'))
            sign = -1;
        else if (lex.consume('+')) {
            if (first_term) lex.fail("unexpected leading '+'");
        } else if (!first_term) {
            lex.fail("expected '+' or '-'");
        }
        first_term = false;

        Rational coeff(1);
        Monomial mono;
        mono.exps.assign(ring->size(), 0);
        bool saw_factor = false;
        bool saw_coeff = false;
        for (;;) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (saw_coeff) lex.fail("repeated numeric coefficient");
                Integer num = lex.integer();
                Integer den = 1;
                if (lex.consume('/')) {
                    den = lex.integer();
                    if (den == 0) lex.fail("zero denominator");
                }
                coeff *= Rational(num, den);
                saw_coeff = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lex.identifier();
                std::size_t idx = ring->size();
                for (std::size_t i = 0; i < ring->size(); ++i)
                    if (ring->name(i) == name) {
                        idx = i;
                        break;
                    }
                if (idx == ring->size()) lex.fail("unknown variable '" + name + "'");
                std::uint64_t e = 1;
                if (lex.consume('^')) e = static_cast<std::uint64_t>(lex.integer());
                mono.exps[idx] += static_cast<std::uint32_t>(e);
            } else {
                lex.fail("expected coefficient or variable");
            }
            saw_factor = true;
            if (!lex.consume('*')) break;
        }
        if (!saw_factor) lex.fail("empty term");
        result.add_term(mono, sign * coeff);
    }
    return result;
}

} // namespace tpnlie
