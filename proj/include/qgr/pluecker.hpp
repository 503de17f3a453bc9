#ifndef QGR_PLUECKER_HPP
#define QGR_PLUECKER_HPP

#include <map>
#include <string>
#include <vector>

#include "qgr/binary_form.hpp"
#include "qgr/matrix.hpp"
#include "qgr/qposet.hpp"
#include "qgr/sparse_poly.hpp"

namespace qgr {

// Canonical variable name for one Pluecker coordinate, e.g. "z12_0" for
// alpha=(1,2), level 0. Entries >= 10 are dot separated ("z1.10_0") so the
// name stays unambiguous at any n.
std::string zvar_name(const QuantumIndex& x);

// Variable table of all Pluecker coordinates of a shape in canonical order
// (lexicographic on (level, alpha)), optionally followed by extra variables.
VarTablePtr zvar_table(const ProblemShape& shape, const std::vector<std::string>& extra = {});

// A point (or exact vector) of the Pluecker space of a shape, indexed by the
// quantum index set.
template <class Scalar>
struct PlueckerVector {
    ProblemShape shape;
    std::map<QuantumIndex, Scalar> coords;

    const Scalar& at(const QuantumIndex& x) const {
        static const Scalar zero{};
        auto it = coords.find(x);
        return it == coords.end() ? zero : it->second;
    }

    bool is_zero() const {
        for (const auto& [k, v] : coords)
            if (!(v == Scalar{})) return false;
        return true;
    }
};

// Reads the Pluecker coordinates of a matrix of forms: for each increasing
// column subset the maximal minor must be homogeneous of degree q, and the
// coefficient of s^a t^(q-a) is the coordinate at alpha^(a). Throws
// representation_error if a minor has the wrong degree.
PlueckerVector<BigRat> pluecker_extract(const ProblemShape& shape, const Matrix<BinaryForm>& m);

// Same extraction keyed only by (p, n, q); also valid where p or n-p is 1.
std::map<QuantumIndex, BigRat> pluecker_extract_coords(int p, int n, int q, const Matrix<BinaryForm>& m);

}  // namespace qgr

#endif
