#ifndef QGR_UNIVARIATE_HPP
#define QGR_UNIVARIATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgr/rational.hpp"

namespace qgr {

// Dense exact univariate polynomial; coefficient k multiplies x^k, trailing
// zeros trimmed (zero polynomial has empty storage, degree -1).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRat> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const BigRat& c) { return UniPoly({c}); }
    // c * x^k
    static UniPoly monomial(const BigRat& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRat& coeff(int k) const;
    const BigRat& leading() const;
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly&) const;
    UniPoly operator-(const UniPoly&) const;
    UniPoly operator*(const UniPoly&) const;
    UniPoly operator-() const;
    UniPoly scale(const BigRat& c) const;
    bool operator==(const UniPoly&) const = default;

    UniPoly derivative() const;
    BigRat evaluate(const BigRat& x) const;
    Complex evaluate(const Complex& x) const;

    // Quotient and remainder over the rationals.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    // Scales by a positive rational so the coefficients become coprime
    // integers; sign pattern is preserved.
    UniPoly primitive() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<BigRat> coeffs_;

    void trim();
};

// Monic greatest common divisor.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly square_free_part(const UniPoly& p);

// Exact count of distinct real roots by Sturm's theorem; with an interval,
// counts roots in (a, b]. Throws input_error on the zero polynomial.
int sturm_real_roots(const UniPoly& p);
int sturm_real_roots(const UniPoly& p, const BigRat& a, const BigRat& b);

// Disjoint rational intervals, each containing exactly one real root, every
// interval narrower than `width`.
std::vector<std::pair<BigRat, BigRat>> isolate_real_roots(const UniPoly& p, const BigRat& width);

// All complex roots to double precision (Durand-Kerner); intended for
// moderate degrees and validated downstream.
std::vector<Complex> complex_roots_approx(const UniPoly& p);

}  // namespace qgr

#endif
