#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace berele {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational stores lowest terms with a positive
// denominator, which is exactly the canonical form we rely on everywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Rational(num, den);
}

/// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q". Throws std::domain_error on malformed input.
inline Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("rational: cannot parse '" + s + "'");
    }
}

/// base^e for integer e; negative exponents invert (error on base 0).
inline Rational pow_rational(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return pow_rational(1 / base, -e);
    }
    Rational result = 1;
    Rational b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

// Evaluation context for the q-deformed quantities. q = 0 is admitted so the
// classic algorithm is the literal q=0 run of the q-algorithm.
struct QContext {
    Rational q;

    explicit QContext(Rational q_value) : q(std::move(q_value)) {
        if (q < 0 || q >= 1)
            throw std::domain_error("QContext: q must satisfy 0 <= q < 1");
    }

    /// q^e for e >= 0 (with q^0 = 1, also at q = 0).
    Rational qpow(long long e) const {
        if (e < 0) throw std::domain_error("QContext::qpow: negative exponent");
        return pow_rational(q, e);
    }
};

}  // namespace berele
