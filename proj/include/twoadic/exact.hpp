#pragma once

// Arbitrary-precision integers and rationals (GMP) plus their 2-adic
// valuations.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twoadic {

using ExactInt = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using ExactRational = mpq_class;

/// 2-adic valuation of a nonzero integer.
inline long nu2(const ExactInt& x) {
    if (sgn(x) == 0) throw std::domain_error("nu2: the valuation of 0 is undefined");
    return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

/// nu(numerator) - nu(denominator) of a nonzero rational.
inline long nu2(const ExactRational& q) {
    if (sgn(q) == 0) throw std::domain_error("nu2: the valuation of 0 is undefined");
    return nu2(ExactInt(q.get_num())) - nu2(ExactInt(q.get_den()));
}

/// Pole order at 2: max(0, -nu(q)); a zero value has pole order 0.
inline long pole_order(const ExactRational& q) {
    if (sgn(q) == 0) return 0;
    const long v = nu2(q);
    return v < 0 ? -v : 0;
}

/// C(top, bottom) for any integer top via the falling factorial.
ExactInt binomial(std::int64_t top, std::uint64_t bottom);

/// Exact decimal / "p/q" rendering.
inline std::string to_string(const ExactInt& x) { return x.get_str(); }
inline std::string to_string(const ExactRational& q) { return q.get_str(); }

}  // namespace twoadic
