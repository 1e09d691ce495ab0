#ifndef WCQSYM_RATIONAL_HPP
#define WCQSYM_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wcqsym
{

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational &q)
{
    return sgn(q) == 0;
}

inline bool is_zero(const Integer &z)
{
    return sgn(z) == 0;
}

inline Integer factorial(std::uint32_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Integer powers with negative exponents allowed (base must then be nonzero).
inline Rational power(const Rational &base, std::int64_t e)
{
    Rational r = 1;
    Rational b = base;
    if (e < 0) {
        b = 1 / b;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

// Strict parse of "a" or "a/b" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(const std::string &text);

} // namespace wcqsym

#endif
