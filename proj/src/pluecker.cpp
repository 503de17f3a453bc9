#include "qgr/pluecker.hpp"

#include <algorithm>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

std::string zvar_name(const QuantumIndex& x) {
    bool compact = std::all_of(x.alpha.begin(), x.alpha.end(), [](int v) { return v >= 1 && v <= 9; });
    std::ostringstream os;
    os << 'z';
    for (size_t i = 0; i < x.alpha.size(); ++i) {
        if (i && !compact) os << '.';
        os << x.alpha[i];
    }
    os << '_' << x.level;
    return os.str();
}

VarTablePtr zvar_table(const ProblemShape& shape, const std::vector<std::string>& extra) {
    std::vector<std::string> names;
    for (const auto& x : enumerate_indices(shape)) names.push_back(zvar_name(x));
    names.insert(names.end(), extra.begin(), extra.end());
    return make_vars(std::move(names));
}

std::map<QuantumIndex, BigRat> pluecker_extract_coords(int p, int n, int q, const Matrix<BinaryForm>& m) {
    if (p < 1 || p >= n) throw input_error("extraction requires 1 <= p < n");
    if (q < 0) throw input_error("extraction requires q >= 0");
    if (m.rows() != p || m.cols() != n) throw input_error("matrix must be p x n");

    auto minors = all_maximal_minors(m, BinaryForm::constant(BigRat(1)));
    std::map<QuantumIndex, BigRat> out;
    for (const auto& [cols, minor] : minors) {
        if (!minor.is_zero() && minor.degree() != q) {
            QuantumIndex bad{cols, 0};
            throw representation_error("maximal minor at " + bad.key() +
                                       " has degree " + std::to_string(minor.degree()) +
                                       ", expected " + std::to_string(q));
        }
        for (int a = 0; a <= q; ++a) {
            BigRat c = minor.is_zero() ? BigRat(0) : minor.coeff(a);
            if (c != 0) out[QuantumIndex{cols, a}] = c;
        }
    }
    return out;
}

PlueckerVector<BigRat> pluecker_extract(const ProblemShape& shape, const Matrix<BinaryForm>& m) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    PlueckerVector<BigRat> out;
    out.shape = shape;
    out.coords = pluecker_extract_coords(shape.p, shape.n(), shape.q, m);
    return out;
}

}  // namespace qgr
