#ifndef QGR_RATIONAL_HPP
#define QGR_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "qgr/errors.hpp"

namespace qgr {

// Exact scalars. BigInt/BigRat are always stored canonicalized
// (positive denominator, reduced to lowest terms).
using BigInt = mpz_class;
using BigRat = mpq_class;

using Complex = std::complex<double>;

inline BigRat make_rat(long num, long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "123", "-4/7", with optional surrounding whitespace.
BigRat parse_rat(const std::string& text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Renders as "num" or "num/den".
inline std::string to_string(const BigRat& v) { return v.get_str(); }

inline double to_double(const BigRat& v) { return mpq_get_d(v.get_mpq_t()); }

BigRat pow_rat(const BigRat& base, long exp);

BigInt pow_int(const BigInt& base, unsigned long exp);

BigInt factorial(unsigned long n);

BigInt binomial(unsigned long n, unsigned long k);

inline int sign_of(const BigRat& v) { return sgn(v); }

inline BigRat abs_rat(const BigRat& v) { return v < 0 ? BigRat(-v) : v; }

}  // namespace qgr

#endif
