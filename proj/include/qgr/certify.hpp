#ifndef QGR_CERTIFY_HPP
#define QGR_CERTIFY_HPP

#include <string>
#include <vector>

#include "qgr/sparse_poly.hpp"
#include "qgr/univariate.hpp"

namespace qgr {

// Exact univariate eliminant of a zero-dimensional reduced system together
// with its Sturm real-root count.
struct Certificate {
    UniPoly eliminant;  // primitive integer coefficients
    int degree = -1;
    int sturm_count = -1;
    std::string variable;          // name of the projection coordinate
    bool numeric_compared = false;
    bool agrees_with_numeric = false;
    int retries = 0;
    std::vector<std::string> notes;
};

// Eliminates all but `keep_var` from the quadrics by iterated Sylvester
// resultants along several routes, intersects the candidates by exact gcd,
// and strips multiplicities. When solution coordinates are supplied the
// candidate is validated against them: the square-free eliminant must have
// exactly one root per distinct projection, each within matching tolerance,
// and extraneous-degree candidates trigger a retry with a random exact
// linear change of the projection coordinate. Throws
// certification_unavailable_error when the retry budget is exhausted.
Certificate certify_eliminant(const std::vector<QPoly>& quadrics, const VarTablePtr& ring, int keep_var,
                              const std::vector<std::vector<Complex>>& solution_coords,
                              int numeric_real_count, uint64_t seed, int max_retries = 4);

// Sylvester resultant of two polynomials with respect to one ring variable;
// the result no longer involves that variable.
QPoly sylvester_resultant(const QPoly& a, const QPoly& b, int var);

}  // namespace qgr

#endif
