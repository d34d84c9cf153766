#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tpnlie/free_tp3.hpp"

using namespace tpnlie;
using namespace tpnlie::free_tp3;

namespace {

const Mat& raw_matrix() {
    static const Mat m = build_matrix_C();
    return m;
}

std::size_t idx_of(const BracketTerm& canonical_term) {
    CanonicalForm c = canonicalize(canonical_term);
    REQUIRE(c.sign == 1);
    return c.index;
}

bool rows_equal_up_to_sign(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    bool plain = true, negated = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) plain = false;
        if (a[i] != -b[i]) negated = false;
        if (!plain && !negated) return false;
    }
    return plain || negated;
}

// quadratic pairwise scan, independent of the set-based implementation
std::size_t dedup_count_oracle(const Mat& m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        bool duplicate = false;
        for (std::size_t j = 0; j < i && !duplicate; ++j)
            duplicate = rows_equal_up_to_sign(m.row(i), m.row(j));
        if (!duplicate) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("basis enumeration") {
    const auto& b = basis();
    CHECK(b.size() == 65);
    auto counts = shape_counts();
    CHECK(counts[0] == 10);
    CHECK(counts[1] == 30);
    CHECK(counts[2] == 15);
    CHECK(counts[3] == 10);
    // block order A, B, C, D
    CHECK(b[0].shape == Shape::A);
    CHECK(b[9].shape == Shape::A);
    CHECK(b[10].shape == Shape::B);
    CHECK(b[39].shape == Shape::B);
    CHECK(b[40].shape == Shape::C);
    CHECK(b[54].shape == Shape::C);
    CHECK(b[55].shape == Shape::D);
    CHECK(b[64].shape == Shape::D);
    CHECK(b[0].term == BracketTerm{{1, 2}, {{{3}, {4}, {5}}}});
    CHECK(to_string(b[0]) == "a1a2.[a3,a4,a5]");
}

TEST_CASE("canonicalize examples") {
    // a5 . [a1 a3, a4, a2] needs one transposition of the plain slots
    auto r1 = canonicalize(BracketTerm{{5}, {{{1, 3}, {4}, {2}}}});
    CHECK(r1.sign == -1);
    CHECK(r1.index == idx_of(BracketTerm{{5}, {{{1, 3}, {2}, {4}}}}));

    // [a3 a4, a1 a2, a5] is one transposition of the pair slots
    auto r2 = canonicalize(BracketTerm{{}, {{{3, 4}, {1, 2}, {5}}}});
    CHECK(r2.sign == -1);
    CHECK(r2.index == idx_of(BracketTerm{{}, {{{1, 2}, {3, 4}, {5}}}}));

    // product reordering carries no sign
    auto r3 = canonicalize(BracketTerm{{3, 1}, {{{2}, {4}, {5}}}});
    CHECK(r3.sign == 1);
    CHECK(r3.index == idx_of(BracketTerm{{1, 3}, {{{2}, {4}, {5}}}}));
}

TEST_CASE("canonicalize rejects malformed terms") {
    CHECK_THROWS_AS(canonicalize(BracketTerm{{1, 1}, {{{2}, {3}, {4}}}}), StructuralError);
    CHECK_THROWS_AS(canonicalize(BracketTerm{{6}, {{{1, 2}, {3}, {4}}}}), StructuralError);
    CHECK_THROWS_AS(canonicalize(BracketTerm{{1, 2}, {{{3, 4, 5}, {}, {}}}}), StructuralError);
}

TEST_CASE("canonicalize is idempotent on the basis") {
    for (std::size_t i = 0; i < basis().size(); ++i) {
        CanonicalForm c = canonicalize(basis()[i].term);
        CHECK(c.sign == 1);
        CHECK(c.index == i);
    }
}

TEST_CASE("sign coherence under transpositions") {
    for (const auto& m : basis()) {
        // swapping any two bracket slots flips the sign only
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                BracketTerm t = m.term;
                std::swap(t.slots[i], t.slots[j]);
                CanonicalForm c = canonicalize(t);
                CHECK(c.sign == -1);
                CHECK(c.index == canonicalize(m.term).index);
            }
        // swapping labels inside a product group changes nothing
        auto check_group_swap = [&](BracketTerm t, std::vector<int>& group) {
            if (group.size() < 2) return;
            std::swap(group[0], group[1]);
            CanonicalForm c = canonicalize(t);
            CHECK(c.sign == 1);
            CHECK(c.index == canonicalize(m.term).index);
        };
        {
            BracketTerm t = m.term;
            check_group_swap(t, t.outer);
        }
        for (std::size_t s = 0; s < 3; ++s) {
            BracketTerm t = m.term;
            check_group_swap(t, t.slots[s]);
        }
    }
}

TEST_CASE("consequence expansion, family 1 identity permutation") {
    auto row = expand_T_consequence(1, {1, 2, 3, 4, 5});
    // sorting a1a3 out of the middle slot costs one transposition, so that
    // entry lands with a plus sign; a1a4 moves two slots and keeps its minus
    std::map<std::size_t, Rational> expect = {
        {idx_of(BracketTerm{{1, 5}, {{{2}, {3}, {4}}}}), Rational(3)},
        {idx_of(BracketTerm{{5}, {{{1, 2}, {3}, {4}}}}), Rational(-1)},
        {idx_of(BracketTerm{{5}, {{{1, 3}, {2}, {4}}}}), Rational(1)},
        {idx_of(BracketTerm{{5}, {{{1, 4}, {2}, {3}}}}), Rational(-1)},
    };
    for (std::size_t i = 0; i < row.size(); ++i) {
        auto it = expect.find(i);
        CHECK(row[i] == (it == expect.end() ? Rational(0) : it->second));
    }
}

TEST_CASE("consequence expansion, family 2 identity permutation") {
    auto row = expand_T_consequence(2, {1, 2, 3, 4, 5});
    std::map<std::size_t, Rational> expect = {
        {idx_of(BracketTerm{{1, 5}, {{{2}, {3}, {4}}}}), Rational(3)},
        {idx_of(BracketTerm{{}, {{{1, 2, 5}, {3}, {4}}}}), Rational(-1)},
        {idx_of(BracketTerm{{}, {{{1, 3, 5}, {2}, {4}}}}), Rational(1)},
        {idx_of(BracketTerm{{}, {{{1, 4, 5}, {2}, {3}}}}), Rational(-1)},
    };
    for (std::size_t i = 0; i < row.size(); ++i) {
        auto it = expect.find(i);
        CHECK(row[i] == (it == expect.end() ? Rational(0) : it->second));
    }
}

TEST_CASE("consequence expansion, family 3 identity permutation") {
    auto row = expand_T_consequence(3, {1, 2, 3, 4, 5});
    // hand expansion of T(a1, a2 a5, a3, a4); two terms re-sort into C shapes
    std::map<std::size_t, Rational> expect = {
        {idx_of(BracketTerm{{1}, {{{2, 5}, {3}, {4}}}}), Rational(3)},
        {idx_of(BracketTerm{{}, {{{1, 2, 5}, {3}, {4}}}}), Rational(-1)},
        {idx_of(BracketTerm{{}, {{{1, 3}, {2, 5}, {4}}}}), Rational(1)},
        {idx_of(BracketTerm{{}, {{{1, 4}, {2, 5}, {3}}}}), Rational(-1)},
    };
    for (std::size_t i = 0; i < row.size(); ++i) {
        auto it = expect.find(i);
        CHECK(row[i] == (it == expect.end() ? Rational(0) : it->second));
    }
}

TEST_CASE("every consequence row has absolute coefficient sum 6") {
    for (const auto& row : raw_matrix().rows()) {
        Rational sum(0);
        for (const auto& q : row) sum += q < 0 ? -q : q;
        CHECK(sum == 6);
    }
}

TEST_CASE("matrix entries stay in {0, +-1, +-3}") {
    bool ok = true;
    for (const auto& row : raw_matrix().rows())
        for (const auto& q : row)
            ok = ok && (q == 0 || q == 1 || q == -1 || q == 3 || q == -3);
    CHECK(ok);
}

TEST_CASE("matrix dimensions and dedup") {
    const Mat& raw = raw_matrix();
    CHECK(raw.row_count() == 360);
    CHECK(raw.col_count() == 65);
    Mat dedup = dedup_up_to_sign(raw);
    CHECK(dedup.row_count() == dedup_count_oracle(raw));
    CHECK(dedup.row_count() == 60);
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat(0, 0)) == 0);
    Mat prop({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
    CHECK(rank(prop) == 1);
    Mat id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(rank(id3) == 3);
    Mat mixed({{Rational(1), Rational(2), Rational(3)},
               {Rational(0), Rational(0), Rational(1)},
               {Rational(1), Rational(2), Rational(4)}});
    CHECK(rank(mixed) == 2);
}

TEST_CASE("consequence matrix ranks") {
    const Mat& raw = raw_matrix();
    CHECK(rank(raw) == 46);
    Mat dedup = dedup_up_to_sign(raw);
    CHECK(rank(dedup) == 46);
}

TEST_CASE("strong row expansion") {
    auto s = expand_S();
    std::size_t nonzero = 0;
    for (const auto& q : s) nonzero += q != 0;
    CHECK(nonzero == 4);
    CHECK(s[idx_of(BracketTerm{{2}, {{{1, 3}, {4}, {5}}}})] == 1);
    CHECK(s[idx_of(BracketTerm{{3}, {{{1, 2}, {4}, {5}}}})] == -1);
    CHECK(s[idx_of(BracketTerm{{1, 4}, {{{2}, {3}, {5}}}})] == 1);
    CHECK(s[idx_of(BracketTerm{{1, 5}, {{{2}, {3}, {4}}}})] == -1);
    // no triple products or pair-pair brackets appear
    for (std::size_t i = 0; i < s.size(); ++i) {
        Shape shape = basis()[i].shape;
        if (shape == Shape::C || shape == Shape::D) CHECK(s[i] == 0);
    }
}

TEST_CASE("membership is decided by rank growth") {
    const Mat& raw = raw_matrix();
    // a row already in the row space leaves the rank alone
    Mat extended = raw;
    std::vector<Rational> combo(raw.col_count(), Rational(0));
    for (std::size_t j = 0; j < raw.col_count(); ++j)
        combo[j] = raw.at(0, j) * 2 - raw.at(7, j) * 3;
    extended.append_row(combo);
    CHECK(rank(extended) == 46);

    Mat with_s = raw;
    with_s.append_row(expand_S());
    CHECK(rank(with_s) == 47);
}

TEST_CASE("strong membership report") {
    for (bool dedup : {false, true}) {
        auto r = strong_membership_report(dedup);
        CHECK(r.num_monomials == 65);
        CHECK(r.shape_count == std::array<std::size_t, 4>{10, 30, 15, 10});
        CHECK(r.raw_rows == 360);
        CHECK(r.dedup_rows == 60);
        CHECK(r.used_dedup == dedup);
        CHECK(r.rank_c == 46);
        CHECK(r.rank_c_prime == 47);
        CHECK_FALSE(r.member);
        CHECK(r.s_single_bracket_only);
        CHECK(r.s_row.size() == 4);
    }
}

TEST_CASE("report serialization carries the contract fields") {
    auto r = strong_membership_report(false);
    std::string json = report_to_json(r);
    for (const char* key : {"\"num_monomials\":65", "\"raw_rows\":360", "\"dedup_rows\":60",
                            "\"rank_C\":46", "\"rank_C_prime\":47",
                            "\"strong_identity_member\":false", "\"s_single_bracket_only\":true",
                            "\"s_row\":{"})
        CHECK(json.find(key) != std::string::npos);
    std::string text = report_to_text(r);
    CHECK(text.find("strong condition: FAILS") != std::string::npos);
}
