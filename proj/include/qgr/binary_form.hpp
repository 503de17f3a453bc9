#ifndef QGR_BINARY_FORM_HPP
#define QGR_BINARY_FORM_HPP

#include <string>
#include <vector>

#include "qgr/rational.hpp"

namespace qgr {

// Homogeneous form in two variables (s, t) with exact rational coefficients,
// stored densely: coeff(k) multiplies s^k t^(degree-k). The zero form carries
// nominal degree -1 and is compatible with any degree in homogeneity checks.
class BinaryForm {
  public:
    BinaryForm() = default;

    static BinaryForm zero() { return BinaryForm(); }
    static BinaryForm constant(const BigRat& c);
    // c * s^k t^(d-k)
    static BinaryForm monomial(const BigRat& c, int k, int d);
    static BinaryForm var_s() { return monomial(BigRat(1), 1, 1); }
    static BinaryForm var_t() { return monomial(BigRat(1), 0, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRat& coeff(int k) const;

    BinaryForm operator+(const BinaryForm& other) const;
    BinaryForm operator-(const BinaryForm& other) const;
    BinaryForm operator*(const BinaryForm& other) const;
    BinaryForm operator-() const;
    BinaryForm scale(const BigRat& c) const;

    bool operator==(const BinaryForm& other) const = default;

    // d/dt, degree drops by one.
    BinaryForm derivative_t() const;

    // Substitute (s, t) -> (s^e, t^e).
    BinaryForm compose_power(int e) const;

    BigRat evaluate(const BigRat& s, const BigRat& t) const;

    std::string to_string() const;

  private:
    std::vector<BigRat> coeffs_;

    void trim();
};

}  // namespace qgr

#endif
