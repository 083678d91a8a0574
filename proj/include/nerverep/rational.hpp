#pragma once

#include <cstddef>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace nerverep {

/// Exact rational scalar. GMP keeps every value reduced with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// A point of R^m with exact coordinates.
using Point = std::vector<Rational>;

class ParseError : public std::runtime_error
{
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse "p/q", "-p/q" or an integer. Decimal notation is rejected.
inline Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw ParseError("not a rational literal: '" + s + "'");
    std::string num = m[1].str();
    if (num.front() == '+')
        num.erase(0, 1);
    Integer n(num);
    Integer d(1);
    if (m[2].matched) {
        d = Integer(m[2].str());
        if (d == 0)
            throw ParseError("zero denominator in '" + s + "'");
    }
    return Rational(n, d);
}

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
inline std::string format_rational(const Rational& q)
{
    return q.str();
}

inline std::string format_point(const Point& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ", ";
        out += format_rational(p[i]);
    }
    return out + ")";
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace nerverep
