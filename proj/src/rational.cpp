#include "qgr/rational.hpp"

#include <cctype>

namespace qgr {

BigRat parse_rat(const std::string& text) {
    std::string trimmed;
    trimmed.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed.empty()) throw parse_error("empty rational literal");
    BigRat r;
    if (r.set_str(trimmed, 10) != 0)
        throw parse_error("malformed rational literal: '" + text + "'");
    if (r.get_den() == 0) throw parse_error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

BigRat pow_rat(const BigRat& base, long exp) {
    if (exp == 0) return BigRat(1);
    if (base == 0 && exp < 0) throw input_error("zero raised to a negative power");
    BigRat b = exp < 0 ? BigRat(1 / base) : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    BigRat acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    acc.canonicalize();
    return acc;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace qgr
