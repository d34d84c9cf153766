#ifndef TPNLIE_RATIONAL_HPP
#define TPNLIE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "tpnlie/errors.hpp"

namespace tpnlie {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the invariant the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "n" or "n/d" with an optional leading sign. Throws ParseError on
// anything else, including a zero denominator.
inline Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational { throw ParseError("invalid rational '" + text + "'"); };
    auto read_int = [&](bool sign_ok) -> Integer {
        std::size_t start = pos;
        if (sign_ok && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) fail();
        return Integer(text.substr(start, pos - start));
    };
    Integer num = read_int(true);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den == 0) fail();
    }
    if (pos != text.size()) fail();
    return Rational(num, den);
}

} // namespace tpnlie

#endif
