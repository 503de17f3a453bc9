#include "qgr/binary_form.hpp"

#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

BinaryForm BinaryForm::constant(const BigRat& c) {
    BinaryForm f;
    if (c != 0) f.coeffs_ = {c};
    return f;
}

BinaryForm BinaryForm::monomial(const BigRat& c, int k, int d) {
    if (k < 0 || d < 0 || k > d) throw input_error("monomial exponents out of range");
    BinaryForm f;
    if (c == 0) return f;
    f.coeffs_.assign(static_cast<size_t>(d) + 1, BigRat(0));
    f.coeffs_[static_cast<size_t>(k)] = c;
    return f;
}

const BigRat& BinaryForm::coeff(int k) const {
    static const BigRat zero(0);
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

void BinaryForm::trim() {
    bool all_zero = true;
    for (const auto& c : coeffs_)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) coeffs_.clear();
}

BinaryForm BinaryForm::operator+(const BinaryForm& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    if (degree() != other.degree())
        throw input_error("sum of binary forms of different degrees (" + std::to_string(degree()) + " vs " +
                          std::to_string(other.degree()) + ") is not homogeneous");
    BinaryForm out = *this;
    for (size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += other.coeffs_[k];
    out.trim();
    return out;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

BinaryForm BinaryForm::operator-(const BinaryForm& other) const { return *this + (-other); }

BinaryForm BinaryForm::operator*(const BinaryForm& other) const {
    if (is_zero() || other.is_zero()) return zero();
    BinaryForm out;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            if (other.coeffs_[j] != 0) out.coeffs_[i + j] += BigRat(coeffs_[i] * other.coeffs_[j]);
    }
    out.trim();
    return out;
}

BinaryForm BinaryForm::scale(const BigRat& c) const {
    if (c == 0) return zero();
    BinaryForm out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

BinaryForm BinaryForm::derivative_t() const {
    if (is_zero() || degree() == 0) return zero();
    BinaryForm out;
    out.coeffs_.assign(coeffs_.size() - 1, BigRat(0));
    const int d = degree();
    for (int k = 0; k < d; ++k)
        out.coeffs_[static_cast<size_t>(k)] = BigRat(coeffs_[static_cast<size_t>(k)] * (d - k));
    out.trim();
    return out;
}

BinaryForm BinaryForm::compose_power(int e) const {
    if (e < 1) throw input_error("power substitution requires a positive exponent");
    if (is_zero()) return zero();
    BinaryForm out;
    const int d = degree();
    out.coeffs_.assign(static_cast<size_t>(d) * static_cast<size_t>(e) + 1, BigRat(0));
    for (int k = 0; k <= d; ++k) out.coeffs_[static_cast<size_t>(k) * static_cast<size_t>(e)] = coeffs_[static_cast<size_t>(k)];
    out.trim();
    return out;
}

BigRat BinaryForm::evaluate(const BigRat& s, const BigRat& t) const {
    BigRat acc(0);
    const int d = degree();
    for (int k = 0; k <= d; ++k) {
        if (coeffs_[static_cast<size_t>(k)] == 0) continue;
        acc += BigRat(coeffs_[static_cast<size_t>(k)] * pow_rat(s, k) * pow_rat(t, d - k));
    }
    acc.canonicalize();
    return acc;
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const int d = degree();
    for (int k = d; k >= 0; --k) {
        const BigRat& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        BigRat a = abs_rat(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && (k > 0 || d - k > 0);
        if (!unit) os << qgr::to_string(a);
        bool need_star = !unit;
        if (k > 0) {
            if (need_star) os << '*';
            os << 's';
            if (k > 1) os << '^' << k;
            need_star = true;
        }
        if (d - k > 0) {
            if (need_star) os << '*';
            os << 't';
            if (d - k > 1) os << '^' << (d - k);
        }
    }
    return os.str();
}

}  // namespace qgr
