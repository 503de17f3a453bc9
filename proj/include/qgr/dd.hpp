#ifndef QGR_DD_HPP
#define QGR_DD_HPP

#include <cmath>

#include "qgr/rational.hpp"

namespace qgr {

// Double-double value: unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Used for endpoint refinement where plain doubles lose too much to the
// conditioning of the reduced systems.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace dd_detail {

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return DD(s, b - (s - a));
}

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return DD(s, (a - (s - bb)) + (b - bb));
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return DD(p, std::fma(a, b, -p));
}

}  // namespace dd_detail

inline DD operator+(const DD& a, const DD& b) {
    DD s = dd_detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(const DD& a) { return DD(-a.hi, -a.lo); }
inline DD operator-(const DD& a, const DD& b) { return a + (-b); }

inline DD operator*(const DD& a, const DD& b) {
    DD p = dd_detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    DD q = dd_detail::quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline double abs_value(const DD& a) { return std::fabs(a.value()); }

// Exact two-limb conversion of a rational.
inline DD dd_from_rat(const BigRat& q) {
    double hi = to_double(q);
    BigRat rest = q;
    if (std::isfinite(hi)) {
        BigRat h;
        // Exact rational from the double hi.
        mpq_set_d(h.get_mpq_t(), hi);
        rest = BigRat(q - h);
        rest.canonicalize();
    } else {
        return DD(hi, 0.0);
    }
    return DD(hi, to_double(rest));
}

// Complex double-double.
struct CDD {
    DD re;
    DD im;

    CDD() = default;
    CDD(const DD& r, const DD& i) : re(r), im(i) {}
    CDD(double r, double i = 0.0) : re(r), im(i) {}
    explicit CDD(const Complex& z) : re(z.real()), im(z.imag()) {}

    Complex value() const { return Complex(re.value(), im.value()); }
};

inline CDD operator+(const CDD& a, const CDD& b) { return CDD(a.re + b.re, a.im + b.im); }
inline CDD operator-(const CDD& a, const CDD& b) { return CDD(a.re - b.re, a.im - b.im); }
inline CDD operator-(const CDD& a) { return CDD(-a.re, -a.im); }
inline CDD operator*(const CDD& a, const CDD& b) {
    return CDD(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline CDD operator/(const CDD& a, const CDD& b) {
    DD denom = b.re * b.re + b.im * b.im;
    return CDD((a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom);
}

inline double abs_value(const CDD& a) { return std::hypot(a.re.value(), a.im.value()); }

}  // namespace qgr

#endif
