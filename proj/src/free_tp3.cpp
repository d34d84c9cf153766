#include "tpnlie/free_tp3.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tpnlie/errors.hpp"

namespace tpnlie {
namespace free_tp3 {

namespace {

std::vector<std::array<int, 5>> all_permutations() {
    std::array<int, 5> p{1, 2, 3, 4, 5};
    std::vector<std::array<int, 5>> out;
    out.reserve(120);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// size-descending, then by sorted label sequence; distinct label sets make
// this a strict order on any multilinear term's slots
bool slot_before(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

std::vector<int> term_key(const BracketTerm& t) {
    std::vector<int> key;
    key.reserve(10);
    key.insert(key.end(), t.outer.begin(), t.outer.end());
    for (const auto& s : t.slots) {
        key.push_back(0);
        key.insert(key.end(), s.begin(), s.end());
    }
    return key;
}

struct BasisData {
    std::vector<FreeMonomial> monomials;
    std::map<std::vector<int>, std::size_t> index;
    std::array<std::size_t, 4> counts{};
};

Shape classify(const BracketTerm& t) {
    std::array<std::size_t, 3> sz{t.slots[0].size(), t.slots[1].size(), t.slots[2].size()};
    if (t.outer.size() == 2 && sz == std::array<std::size_t, 3>{1, 1, 1}) return Shape::A;
    if (t.outer.size() == 1 && sz == std::array<std::size_t, 3>{2, 1, 1}) return Shape::B;
    if (t.outer.empty() && sz == std::array<std::size_t, 3>{2, 2, 1}) return Shape::C;
    if (t.outer.empty() && sz == std::array<std::size_t, 3>{3, 1, 1}) return Shape::D;
    throw StructuralError("term does not match a degree-5 single-bracket shape");
}

const BasisData& basis_data() {
    static const BasisData data = [] {
        BasisData d;
        const auto perms = all_permutations();
        auto emit = [&](Shape shape, BracketTerm term) {
            d.index.emplace(term_key(term), d.monomials.size());
            d.counts[static_cast<std::size_t>(shape)] += 1;
            d.monomials.push_back(FreeMonomial{shape, std::move(term)});
        };
        for (const auto& s : perms)
            if (s[0] < s[1] && s[2] < s[3] && s[3] < s[4])
                emit(Shape::A, BracketTerm{{s[0], s[1]}, {{{s[2]}, {s[3]}, {s[4]}}}});
        for (const auto& s : perms)
            if (s[1] < s[2] && s[3] < s[4])
                emit(Shape::B, BracketTerm{{s[0]}, {{{s[1], s[2]}, {s[3]}, {s[4]}}}});
        for (const auto& s : perms)
            if (s[0] < s[1] && s[0] < s[2] && s[2] < s[3])
                emit(Shape::C, BracketTerm{{}, {{{s[0], s[1]}, {s[2], s[3]}, {s[4]}}}});
        for (const auto& s : perms)
            if (s[0] < s[1] && s[1] < s[2] && s[3] < s[4])
                emit(Shape::D, BracketTerm{{}, {{{s[0], s[1], s[2]}, {s[3]}, {s[4]}}}});
        return d;
    }();
    return data;
}

} // namespace

const std::vector<FreeMonomial>& basis() { return basis_data().monomials; }

std::array<std::size_t, 4> shape_counts() { return basis_data().counts; }

CanonicalForm canonicalize(const BracketTerm& raw) {
    BracketTerm t = raw;
    std::vector<int> labels = t.outer;
    for (const auto& s : t.slots) {
        if (s.empty()) throw StructuralError("bracket slot must not be empty");
        labels.insert(labels.end(), s.begin(), s.end());
    }
    std::sort(labels.begin(), labels.end());
    if (labels != std::vector<int>{1, 2, 3, 4, 5})
        throw StructuralError("term must use labels 1..5 exactly once");

    std::sort(t.outer.begin(), t.outer.end());
    for (auto& s : t.slots) std::sort(s.begin(), s.end());

    int sign = 1;
    for (std::size_t i = 0; i + 1 < t.slots.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < t.slots.size(); ++j)
            if (slot_before(t.slots[j], t.slots[best])) best = j;
        if (best != i) {
            std::swap(t.slots[i], t.slots[best]);
            sign = -sign;
        }
    }

    const auto& idx = basis_data().index;
    auto it = idx.find(term_key(t));
    if (it == idx.end()) throw StructuralError("term is not a basis monomial");
    return CanonicalForm{sign, it->second};
}

std::string to_string(const FreeMonomial& m) {
    std::ostringstream out;
    for (int l : m.term.outer) out << "a" << l;
    if (!m.term.outer.empty()) out << ".";
    out << "[";
    for (std::size_t s = 0; s < 3; ++s) {
        if (s) out << ",";
        for (int l : m.term.slots[s]) out << "a" << l;
    }
    out << "]";
    return out.str();
}

std::vector<Rational> expand_T_consequence(int family, const std::array<int, 5>& sigma) {
    if (family < 1 || family > 3) throw StructuralError("family must be 1, 2, or 3");
    std::vector<int> h;
    std::array<std::vector<int>, 3> b{{{sigma[1]}, {sigma[2]}, {sigma[3]}}};
    std::vector<int> outer;
    switch (family) {
    case 1:
        h = {sigma[0]};
        outer = {sigma[4]};
        break;
    case 2:
        h = {sigma[0], sigma[4]};
        break;
    case 3:
        h = {sigma[0]};
        b[0] = {sigma[1], sigma[4]};
        break;
    }

    std::vector<Rational> row(basis().size(), Rational(0));
    auto accumulate = [&](const BracketTerm& term, int coeff) {
        CanonicalForm c = canonicalize(term);
        row[c.index] += Rational(coeff * c.sign);
    };

    BracketTerm lead;
    lead.outer = outer;
    lead.outer.insert(lead.outer.end(), h.begin(), h.end());
    lead.slots = b;
    accumulate(lead, 3);

    for (std::size_t k = 0; k < 3; ++k) {
        BracketTerm t;
        t.outer = outer;
        t.slots = b;
        t.slots[k].insert(t.slots[k].end(), h.begin(), h.end());
        accumulate(t, -1);
    }
    return row;
}

std::vector<Rational> expand_S() {
    std::vector<Rational> row(basis().size(), Rational(0));
    auto accumulate = [&](const BracketTerm& term, int coeff) {
        CanonicalForm c = canonicalize(term);
        row[c.index] += Rational(coeff * c.sign);
    };
    // y1 [h y2, x1, x2] - y2 [h y1, x1, x2] + h x1 [y1, y2, x2] - h x2 [y1, y2, x1]
    accumulate(BracketTerm{{2}, {{{1, 3}, {4}, {5}}}}, 1);
    accumulate(BracketTerm{{3}, {{{1, 2}, {4}, {5}}}}, -1);
    accumulate(BracketTerm{{1, 4}, {{{2}, {3}, {5}}}}, 1);
    accumulate(BracketTerm{{1, 5}, {{{2}, {3}, {4}}}}, -1);
    return row;
}

Mat build_matrix_C() {
    Mat m(0, basis().size());
    for (int family = 1; family <= 3; ++family)
        for (const auto& sigma : all_permutations()) m.append_row(expand_T_consequence(family, sigma));
    return m;
}

Mat dedup_up_to_sign(const Mat& m) {
    Mat out(0, m.col_count());
    std::vector<std::vector<Rational>> seen;
    for (const auto& row : m.rows()) {
        std::vector<Rational> norm = row;
        for (const auto& q : norm) {
            if (q == 0) continue;
            if (q < 0)
                for (auto& v : norm) v = -v;
            break;
        }
        if (std::find(seen.begin(), seen.end(), norm) != seen.end()) continue;
        seen.push_back(norm);
        out.append_row(row);
    }
    return out;
}

StrongReport strong_membership_report(bool use_dedup) {
    StrongReport r;
    r.num_monomials = basis().size();
    r.shape_count = shape_counts();

    Mat raw = build_matrix_C();
    Mat dedup = dedup_up_to_sign(raw);
    r.raw_rows = raw.row_count();
    r.dedup_rows = dedup.row_count();
    r.used_dedup = use_dedup;

    const Mat& c = use_dedup ? dedup : raw;
    r.rank_c = rank(c);

    std::vector<Rational> s = expand_S();
    r.s_single_bracket_only = true; // expand_S lands every term in the basis
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) r.s_row.emplace(i, s[i]);

    Mat c_prime = c;
    c_prime.append_row(std::move(s));
    r.rank_c_prime = rank(c_prime);
    r.member = r.rank_c_prime == r.rank_c;
    return r;
}

std::string report_to_json(const StrongReport& r, int indent) {
    nlohmann::ordered_json j;
    j["num_monomials"] = r.num_monomials;
    j["shape_counts"] = {{"A", r.shape_count[0]},
                         {"B", r.shape_count[1]},
                         {"C", r.shape_count[2]},
                         {"D", r.shape_count[3]}};
    j["raw_rows"] = r.raw_rows;
    j["dedup_rows"] = r.dedup_rows;
    j["used_dedup"] = r.used_dedup;
    j["rank_C"] = r.rank_c;
    j["rank_C_prime"] = r.rank_c_prime;
    j["strong_identity_member"] = r.member;
    j["s_single_bracket_only"] = r.s_single_bracket_only;
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (const auto& [idx, coeff] : r.s_row) s[std::to_string(idx)] = tpnlie::to_string(coeff);
    j["s_row"] = std::move(s);
    return j.dump(indent);
}

std::string report_to_text(const StrongReport& r) {
    std::ostringstream out;
    out << "monomials: " << r.num_monomials << " (A " << r.shape_count[0] << ", B "
        << r.shape_count[1] << ", C " << r.shape_count[2] << ", D " << r.shape_count[3] << ")\n";
    out << "rows: raw " << r.raw_rows << ", dedup " << r.dedup_rows << ", rank over "
        << (r.used_dedup ? "dedup" : "raw") << " rows\n";
    out << "rank(C)  = " << r.rank_c << "\n";
    out << "rank(C') = " << r.rank_c_prime << "\n";
    out << "S row entries:";
    for (const auto& [idx, coeff] : r.s_row)
        out << " [" << idx << "] " << (coeff > 0 ? "+" : "") << tpnlie::to_string(coeff) << " "
            << to_string(basis()[idx]);
    out << "\n";
    out << "S in rowspace(C): " << (r.member ? "yes" : "no") << "\n";
    out << "strong condition: " << (r.member ? "HOLDS" : "FAILS") << "\n";
    return out.str();
}

} // namespace free_tp3
} // namespace tpnlie
