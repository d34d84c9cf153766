#ifndef TPNLIE_FREE_TP3_HPP
#define TPNLIE_FREE_TP3_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tpnlie/matrix.hpp"

namespace tpnlie {
namespace free_tp3 {

// Degree-5 multilinear monomials of the free commutative/3-bracket algebra
// that contain exactly one bracket. Labels 1..5 each appear once, distributed
// over an outer product and the bracket's three slots:
//   A: a.a.[a,a,a]   B: a.[aa,a,a]   C: [aa,aa,a]   D: [aaa,a,a]
enum class Shape { A, B, C, D };

struct BracketTerm {
    std::vector<int> outer;
    std::array<std::vector<int>, 3> slots;

    bool operator==(const BracketTerm& o) const { return outer == o.outer && slots == o.slots; }
};

struct FreeMonomial {
    Shape shape;
    BracketTerm term; // canonical: groups sorted, slots in canonical order
};

struct CanonicalForm {
    int sign; // +1 or -1; multilinear labels never collapse to 0
    std::size_t index;
};

// The 65 canonical monomials in block order A, B, C, D; within a block the
// defining label tuples run in lexicographic order.
const std::vector<FreeMonomial>& basis();
std::array<std::size_t, 4> shape_counts();

// Sorts a raw term into canonical form. Product reorderings are free; moving
// bracket slots contributes the permutation sign. Throws StructuralError if
// the labels are not exactly 1..5 once each or a slot is empty.
CanonicalForm canonicalize(const BracketTerm& raw);

std::string to_string(const FreeMonomial& m);

// One row of the consequence matrix: the expansion of
//   T(h,b1,b2,b3) = 3 h [b1,b2,b3] - [h b1,b2,b3] - [b1,h b2,b3] - [b1,b2,h b3]
// under the family's substitution with arguments permuted by sigma.
//   family 1: T(s1,s2,s3,s4) * s5
//   family 2: T(s1 s5, s2, s3, s4)
//   family 3: T(s1, s2 s5, s3, s4)
std::vector<Rational> expand_T_consequence(int family, const std::array<int, 5>& sigma);

// The strong-condition polynomial S(a1..a5) with h=a1, y1=a2, y2=a3,
// x1=a4, x2=a5, expanded over the basis.
std::vector<Rational> expand_S();

// All 3 x 120 consequence rows, family-major, sigma in lexicographic order.
Mat build_matrix_C();

// Drops rows that duplicate an earlier row up to overall sign; this leaves
// the row space unchanged.
Mat dedup_up_to_sign(const Mat& m);

struct StrongReport {
    std::size_t num_monomials = 0;
    std::array<std::size_t, 4> shape_count{};
    std::size_t raw_rows = 0;
    std::size_t dedup_rows = 0;
    bool used_dedup = false;
    std::size_t rank_c = 0;
    std::size_t rank_c_prime = 0;
    bool member = false;                 // S lies in the row space of C
    bool s_single_bracket_only = false;  // S expands inside the 65 monomials
    std::map<std::size_t, Rational> s_row;
};

// Appends the S row to C (or its dedup) and compares exact ranks.
StrongReport strong_membership_report(bool use_dedup = false);

std::string report_to_json(const StrongReport& r, int indent = -1);
std::string report_to_text(const StrongReport& r);

} // namespace free_tp3
} // namespace tpnlie

#endif
