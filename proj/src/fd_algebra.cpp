#include "tpnlie/fd_algebra.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

#include "tpnlie/errors.hpp"

namespace tpnlie {

namespace {

bool is_zero_vec(const Vec& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

// Iterates all length-n tuples over {0..dim-1}; returns false when exhausted.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t dim) {
    std::size_t k = idx.size();
    while (k > 0) {
        --k;
        if (++idx[k] < dim) return true;
        idx[k] = 0;
        if (k == 0) return false;
    }
    return false;
}

// Bracket with a coordinate vector in slot 0 and basis elements elsewhere.
Vec bracket_vec_first(const FdTable& a, const Vec& v, const std::vector<std::size_t>& rest) {
    const std::size_t d = a.dimension();
    Vec out(d, Rational(0));
    std::vector<std::size_t> idx(a.arity());
    std::copy(rest.begin(), rest.end(), idx.begin() + 1);
    for (std::size_t k = 0; k < d; ++k) {
        if (v[k] == 0) continue;
        idx[0] = k;
        const Vec& entry = a.bracket_entry(idx);
        for (std::size_t t = 0; t < d; ++t)
            if (entry[t] != 0) out[t] += v[k] * entry[t];
    }
    return out;
}

std::string tuple_str(const std::vector<std::size_t>& idx) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
    out << ")";
    return out.str();
}

} // namespace

FdValidation validate(const FdTable& a) {
    FdValidation report;
    const std::size_t d = a.dimension();
    const std::size_t n = a.arity();

    // Skew-symmetry: adjacent transpositions generate the full sign action.
    report.skew_symmetric = true;
    {
        std::vector<std::size_t> idx(n, 0);
        do {
            const Vec& v = a.bracket_entry(idx);
            for (std::size_t s = 0; s + 1 < n && report.skew_symmetric; ++s) {
                std::vector<std::size_t> swapped = idx;
                std::swap(swapped[s], swapped[s + 1]);
                const Vec& w = a.bracket_entry(swapped);
                for (std::size_t t = 0; t < d; ++t)
                    if (w[t] != -v[t]) {
                        report.skew_symmetric = false;
                        report.failures.push_back("skew-symmetry fails at " + tuple_str(idx));
                        break;
                    }
            }
        } while (next_tuple(idx, d) && report.skew_symmetric);
    }

    // Generalized Jacobi on every basis (2n-1)-tuple.
    report.jacobi = true;
    {
        std::vector<std::size_t> tup(2 * n - 1, 0);
        do {
            std::vector<std::size_t> x(tup.begin(), tup.begin() + n);
            std::vector<std::size_t> y(tup.begin() + n, tup.end());
            Vec lhs = bracket_vec_first(a, a.bracket_entry(x), y);
            Vec rhs(d, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::size_t> inner(1 + y.size());
                inner[0] = x[i];
                std::copy(y.begin(), y.end(), inner.begin() + 1);
                const Vec& val = a.bracket_entry(inner);
                // substitute the value back into slot i of x, multilinearly
                std::vector<std::size_t> outer = x;
                for (std::size_t k = 0; k < d; ++k) {
                    if (val[k] == 0) continue;
                    outer[i] = k;
                    const Vec& entry = a.bracket_entry(outer);
                    for (std::size_t t = 0; t < d; ++t)
                        if (entry[t] != 0) rhs[t] += val[k] * entry[t];
                }
            }
            if (lhs != rhs) {
                report.jacobi = false;
                report.failures.push_back("jacobi fails at " + tuple_str(tup));
                break;
            }
        } while (next_tuple(tup, d));
    }

    report.has_product = a.has_product();
    if (report.has_product) {
        report.product_commutative = true;
        for (std::size_t i = 0; i < d && report.product_commutative; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (a.product_entry(i, j) != a.product_entry(j, i)) {
                    report.product_commutative = false;
                    report.failures.push_back("product not commutative at (" + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
                    break;
                }

        report.product_associative = true;
        {
            std::vector<std::size_t> t3(3, 0);
            do {
                Vec ek(d, Rational(0));
                ek[t3[2]] = 1;
                Vec ei(d, Rational(0));
                ei[t3[0]] = 1;
                Vec left = a.product(a.product_entry(t3[0], t3[1]), ek);
                Vec right = a.product(ei, a.product_entry(t3[1], t3[2]));
                if (left != right) {
                    report.product_associative = false;
                    report.failures.push_back("product not associative at " + tuple_str(t3));
                    break;
                }
            } while (next_tuple(t3, d));
        }

        // n h [a_1..a_n] = sum_i [a_1.., h a_i, .., a_n] on basis tuples.
        report.transposed_leibniz = true;
        {
            std::vector<std::size_t> tup(n + 1, 0);
            do {
                const std::size_t h = tup[0];
                std::vector<std::size_t> args(tup.begin() + 1, tup.end());
                Vec hv(d, Rational(0));
                hv[h] = 1;
                Vec lhs = a.product(hv, a.bracket_entry(args));
                for (auto& q : lhs) q *= Rational(static_cast<long>(n));
                Vec rhs(d, Rational(0));
                for (std::size_t i = 0; i < n; ++i) {
                    const Vec& prod = a.product_entry(h, args[i]);
                    std::vector<std::size_t> idx = args;
                    for (std::size_t k = 0; k < d; ++k) {
                        if (prod[k] == 0) continue;
                        idx[i] = k;
                        const Vec& entry = a.bracket_entry(idx);
                        for (std::size_t t = 0; t < d; ++t)
                            if (entry[t] != 0) rhs[t] += prod[k] * entry[t];
                        idx[i] = args[i];
                    }
                }
                if (lhs != rhs) {
                    report.transposed_leibniz = false;
                    report.failures.push_back("transposed Leibniz fails at " + tuple_str(tup));
                    break;
                }
            } while (next_tuple(tup, d));
        }
    }
    return report;
}

Subspace derived_space(const FdTable& a) {
    const std::size_t d = a.dimension();
    std::vector<std::vector<Rational>> values;
    std::vector<std::size_t> idx(a.arity(), 0);
    do {
        const Vec& v = a.bracket_entry(idx);
        if (!is_zero_vec(v)) values.push_back(v);
    } while (next_tuple(idx, d));
    return Subspace(d, values);
}

bool is_ideal(const FdTable& a, const Subspace& s) {
    if (s.ambient_dim() != a.dimension()) throw StructuralError("subspace dimension mismatch");
    for (std::size_t r = 0; r < s.basis().row_count(); ++r) {
        const auto& v = s.basis().row(r);
        std::vector<std::size_t> tuple(a.arity() - 1, 0);
        do {
            if (!s.contains(bracket_vec_first(a, v, tuple))) return false;
        } while (next_tuple(tuple, a.dimension()));
    }
    return true;
}

bool is_quasi_ideal(const FdTable& a, const Subspace& s) {
    if (s.ambient_dim() != a.dimension()) throw StructuralError("subspace dimension mismatch");
    if (!a.has_product()) throw StructuralError("quasi-ideal check needs the product table");
    if (s.is_zero() || s.is_full()) return false;
    if (!is_ideal(a, s)) return false;
    // [A s, A, ..., A] inside s on spanning products e_i * v.
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        Vec ei(a.dimension(), Rational(0));
        ei[i] = 1;
        for (std::size_t r = 0; r < s.basis().row_count(); ++r) {
            Vec u = a.product(ei, s.basis().row(r));
            if (is_zero_vec(u)) continue;
            std::vector<std::size_t> tuple(a.arity() - 1, 0);
            do {
                if (!s.contains(bracket_vec_first(a, u, tuple))) return false;
            } while (next_tuple(tuple, a.dimension()));
        }
    }
    return true;
}

Subspace ideal_closure(const FdTable& a, const Subspace& s) {
    if (s.ambient_dim() != a.dimension()) throw StructuralError("subspace dimension mismatch");
    Subspace current = s;
    for (;;) {
        Subspace next = current;
        for (std::size_t r = 0; r < current.basis().row_count(); ++r) {
            const auto& v = current.basis().row(r);
            std::vector<std::size_t> tuple(a.arity() - 1, 0);
            do {
                Vec w = bracket_vec_first(a, v, tuple);
                if (!is_zero_vec(w)) next = next.join_vector(w);
            } while (next_tuple(tuple, a.dimension()));
        }
        if (next.dim() == current.dim()) return next;
        current = next;
    }
}

ProbeResult simplicity_probe(const FdTable& a, unsigned trials, std::uint64_t seed) {
    const std::size_t d = a.dimension();
    ProbeResult result;
    result.trials = trials;

    // Basis-vector closures first: they yield the smallest certificates
    // (e.g. a dead line in a direct sum) rather than the whole derived space.
    std::optional<Subspace> smallest;
    for (std::size_t i = 0; i < d; ++i) {
        Vec ei(d, Rational(0));
        ei[i] = 1;
        Subspace closure = ideal_closure(a, Subspace(d, {ei}));
        if (!closure.is_full() && (!smallest || closure.dim() < smallest->dim()))
            smallest = std::move(closure);
    }
    if (smallest) {
        result.kind = ProbeResult::Kind::NotSimple;
        result.witness = std::move(smallest);
        return result;
    }

    Subspace derived = derived_space(a);
    if (!derived.is_full()) {
        result.kind = ProbeResult::Kind::NotSimple;
        result.witness = std::move(derived);
        return result;
    }

    std::mt19937_64 gen(seed);
    for (unsigned t = 0; t < trials; ++t) {
        Vec v(d, Rational(0));
        do {
            for (auto& q : v) q = Rational(static_cast<std::int64_t>(gen() % 7) - 3);
        } while (is_zero_vec(v));
        Subspace closure = ideal_closure(a, Subspace(d, {v}));
        if (!closure.is_full()) {
            result.kind = ProbeResult::Kind::NotSimple;
            result.witness = std::move(closure);
            return result;
        }
    }
    result.kind = ProbeResult::Kind::ProbablySimple;
    return result;
}

Subspace load_subspace(const std::string& json_text, std::size_t ambient_dim) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw ParseError("subspace document must contain a 'rows' array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : doc["rows"]) {
        if (!r.is_array() || r.size() != ambient_dim)
            throw ParseError("subspace rows must have length " + std::to_string(ambient_dim));
        std::vector<Rational> row;
        row.reserve(ambient_dim);
        for (const auto& entry : r) {
            if (!entry.is_string()) throw ParseError("subspace entries must be rational strings");
            row.push_back(parse_rational(entry.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    return Subspace(ambient_dim, rows);
}

std::string subspace_to_json(const Subspace& s, int indent) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.basis().row_count(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& q : s.basis().row(i)) row.push_back(to_string(q));
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json j;
    j["rows"] = std::move(rows);
    return j.dump(indent);
}

} // namespace tpnlie
