#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace chainopt {

/// Arbitrary-precision integer (GMP-backed).
using Int = boost::multiprecision::mpz_int;

/// Exact rational number (GMP-backed, always stored in lowest terms).
using Rational = boost::multiprecision::mpq_rational;

/// Error type thrown on contract violations and malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest integer <= q.
inline Int rational_floor(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d;
    if (n % d != 0 && n < 0) quot -= 1;
    return quot;
}

/// Smallest integer >= q.
inline Int rational_ceil(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d;
    if (n % d != 0 && n > 0) quot += 1;
    return quot;
}

/// Renders q as "p" or "p/q"; the inverse of parse_rational.
inline std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Parses "p" or "p/q" with optional sign. Throws Error on malformed input
/// or zero denominator.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw Error("cannot parse rational '" + text + "'");
    }
}

}  // namespace chainopt
