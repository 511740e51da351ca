#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace erelax {

// All arithmetic in the decision path is exact. Rational is GMP-backed and
// always canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class MalformedRational : public std::runtime_error {
public:
    explicit MalformedRational(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
// boost's string constructor does not reduce to lowest terms, so we go
// through the (num, den) constructor, which does.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw MalformedRational("empty rational");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos)
            throw MalformedRational("malformed rational: " + s);
        Integer d(den);
        if (d == 0) throw MalformedRational("zero denominator: " + s);
        return Rational(Integer(num), d);
    } catch (const MalformedRational&) {
        throw;
    } catch (const std::exception&) {
        throw MalformedRational("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::vector<std::string> to_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

// Smallest integer >= r.
inline Integer ceil_rational(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

inline Integer floor_rational(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;
    return q;
}

}  // namespace erelax
