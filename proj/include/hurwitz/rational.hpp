#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" or "p/q" in lowest terms (cpp_rational keeps
/// itself canonical, q > 0).
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses "p" or "p/q". Accepts an optional leading '-' on the numerator.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { fail("SyntaxError", "not a rational: '" + text + "'"); };
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) bad();
            return Rational(Integer(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) bad();
        Integer d(den);
        if (d <= 0) fail("SyntaxError", "denominator must be positive: '" + text + "'");
        return Rational(Integer(num), d);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rational();  // unreachable
}

}  // namespace hurwitz
