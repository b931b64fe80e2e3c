// Exact rational scalar type and parsing of "p/q" literals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "p/q", optional leading '-'. Decimal notation is rejected:
// exactness is part of the interface contract.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos)
        throw std::invalid_argument("rational: write '" + text + "' as p/q (exactness contract)");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational: malformed '" + text + "'");
    }
}

inline std::string rational_str(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace cit
