#include "qgr/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

UniPoly::UniPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const BigRat& c, int k) {
    if (k < 0) throw input_error("negative exponent");
    std::vector<BigRat> v(static_cast<size_t>(k) + 1, BigRat(0));
    v[static_cast<size_t>(k)] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRat& UniPoly::coeff(int k) const {
    static const BigRat zero(0);
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

const BigRat& UniPoly::leading() const {
    if (is_zero()) throw input_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<BigRat> v(std::max(coeffs_.size(), other.coeffs_.size()), BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) v[i] += other.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly UniPoly::operator-(const UniPoly& other) const { return *this + (-other); }

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<BigRat> v(coeffs_.size() + other.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            if (other.coeffs_[j] != 0) v[i + j] += BigRat(coeffs_[i] * other.coeffs_[j]);
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scale(const BigRat& c) const {
    if (c == 0) return zero();
    UniPoly out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return zero();
    std::vector<BigRat> v(coeffs_.size() - 1, BigRat(0));
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = BigRat(coeffs_[i] * static_cast<long>(i));
    return UniPoly(std::move(v));
}

BigRat UniPoly::evaluate(const BigRat& x) const {
    BigRat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = BigRat(acc * x + coeffs_[i]);
    acc.canonicalize();
    return acc;
}

Complex UniPoly::evaluate(const Complex& x) const {
    Complex acc(0.0, 0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Complex(to_double(coeffs_[i]), 0.0);
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw input_error("division by the zero polynomial");
    UniPoly rem = *this;
    std::vector<BigRat> quot(static_cast<size_t>(std::max(0, degree() - divisor.degree() + 1)), BigRat(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        BigRat factor = BigRat(rem.leading() / divisor.leading());
        quot[static_cast<size_t>(shift)] = factor;
        UniPoly sub = divisor.scale(factor);
        std::vector<BigRat> shifted(static_cast<size_t>(shift), BigRat(0));
        shifted.insert(shifted.end(), sub.coeffs_.begin(), sub.coeffs_.end());
        rem = rem - UniPoly(std::move(shifted));
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return zero();
    // common denominator, then integer content
    BigInt den(1);
    for (const auto& c : coeffs_) {
        BigInt d = c.get_den();
        den = BigInt(den * d / gcd(den, d));
    }
    BigInt content(0);
    std::vector<BigRat> ints(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        ints[i] = BigRat(coeffs_[i] * BigRat(den));
        ints[i].canonicalize();
        content = gcd(content, BigInt(ints[i].get_num()));
    }
    if (content == 0) return zero();
    for (auto& c : ints) {
        c /= BigRat(content);
        c.canonicalize();
    }
    return UniPoly(std::move(ints));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigRat& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        BigRat a = abs_rat(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << qgr::to_string(a);
        if (k > 0) {
            if (a != 1) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive();
    UniPoly y = b.primitive();
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scale(BigRat(1 / x.leading()));
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw input_error("square-free part of the zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(BigRat(1));
    UniPoly g = gcd(p, p.derivative());
    UniPoly out = p.divmod(g).first;
    return out.primitive();
}

namespace {

// Sturm chain of the square-free part.
std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    UniPoly p0 = square_free_part(p);
    chain.push_back(p0);
    if (p0.degree() < 1) return chain;
    chain.push_back(p0.derivative().primitive());
    while (chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

int sign_at(const UniPoly& p, const BigRat& x) { return sign_of(p.evaluate(x)); }

int sign_at_plus_infinity(const UniPoly& p) { return sign_of(p.leading()); }

int sign_at_minus_infinity(const UniPoly& p) {
    int s = sign_of(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int sturm_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw input_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(sign_at_minus_infinity(q));
        hi.push_back(sign_at_plus_infinity(q));
    }
    return variations(lo) - variations(hi);
}

int sturm_real_roots(const UniPoly& p, const BigRat& a, const BigRat& b) {
    if (p.is_zero()) throw input_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    if (a >= b) throw input_error("interval endpoints must satisfy a < b");
    auto chain = sturm_chain(p);
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(sign_at(q, a));
        hi.push_back(sign_at(q, b));
    }
    return variations(lo) - variations(hi);
}

std::vector<std::pair<BigRat, BigRat>> isolate_real_roots(const UniPoly& p, const BigRat& width) {
    if (p.is_zero()) throw input_error("root isolation of the zero polynomial");
    if (width <= 0) throw input_error("isolation width must be positive");
    UniPoly sf = square_free_part(p);
    std::vector<std::pair<BigRat, BigRat>> out;
    if (sf.degree() < 1) return out;

    // Cauchy bound, padded so roots are interior.
    BigRat bound(1);
    for (int k = 0; k < sf.degree(); ++k) {
        BigRat ratio = abs_rat(BigRat(sf.coeff(k) / sf.leading()));
        if (ratio > bound) bound = ratio;
    }
    bound += 2;

    struct Segment {
        BigRat lo, hi;
        int roots;
    };
    std::vector<Segment> work{{BigRat(-bound), bound, sturm_real_roots(sf, BigRat(-bound), bound)}};
    while (!work.empty()) {
        Segment seg = work.back();
        work.pop_back();
        if (seg.roots == 0) continue;
        if (seg.roots == 1 && BigRat(seg.hi - seg.lo) < width) {
            out.emplace_back(seg.lo, seg.hi);
            continue;
        }
        BigRat mid = BigRat((seg.lo + seg.hi) / 2);
        // Nudge off a root so interval endpoints stay sign-definite.
        while (sf.evaluate(mid) == 0) mid += BigRat(BigRat(seg.hi - seg.lo) / 64);
        int right = sturm_real_roots(sf, mid, seg.hi);
        work.push_back({seg.lo, mid, seg.roots - right});
        work.push_back({mid, seg.hi, right});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

double log2_abs(const BigRat& q) {
    long exp_num = 0, exp_den = 0;
    double m_num = mpz_get_d_2exp(&exp_num, BigRat(q).get_num().get_mpz_t());
    double m_den = mpz_get_d_2exp(&exp_den, BigRat(q).get_den().get_mpz_t());
    return std::log2(std::fabs(m_num)) + static_cast<double>(exp_num) -
           (std::log2(std::fabs(m_den)) + static_cast<double>(exp_den));
}

}  // namespace

std::vector<Complex> complex_roots_approx(const UniPoly& p) {
    if (p.is_zero()) throw input_error("roots of the zero polynomial");
    std::vector<Complex> roots;
    if (p.degree() < 1) return roots;

    // zero roots first, then a power-of-two variable scaling so the
    // remaining roots have moderate modulus
    int valuation = 0;
    while (p.coeff(valuation) == 0) ++valuation;
    for (int k = 0; k < valuation; ++k) roots.emplace_back(0.0, 0.0);
    std::vector<BigRat> rest(p.coeffs().begin() + valuation, p.coeffs().end());
    UniPoly q{std::move(rest)};
    const int d = q.degree();
    if (d < 1) return roots;

    long scale_exp = std::lround((log2_abs(q.coeff(0)) - log2_abs(q.leading())) / d);
    BigRat sigma = pow_rat(BigRat(2), scale_exp);

    // scaled coefficients, normalized exactly by the largest one
    std::vector<BigRat> scaled(static_cast<size_t>(d) + 1);
    BigRat largest(0);
    for (int k = 0; k <= d; ++k) {
        scaled[static_cast<size_t>(k)] = BigRat(q.coeff(k) * pow_rat(sigma, k));
        BigRat a = abs_rat(scaled[static_cast<size_t>(k)]);
        if (a > largest) largest = a;
    }
    std::vector<Complex> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = Complex(to_double(BigRat(scaled[static_cast<size_t>(k)] / largest)), 0.0);

    double radius = 0.0;
    for (int k = 0; k <= d; ++k) radius = std::max(radius, std::abs(c[static_cast<size_t>(k)]));
    radius = 1.0 + radius / std::abs(c[static_cast<size_t>(d)]);

    std::vector<Complex> y(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
        y[static_cast<size_t>(k)] = std::polar(std::min(radius, 4.0), 0.37 + 2.0 * M_PI * k / d);

    auto eval = [&](const Complex& x) {
        Complex acc(0.0, 0.0);
        for (int k = d; k >= 0; --k) acc = acc * x + c[static_cast<size_t>(k)];
        return acc;
    };

    for (int iter = 0; iter < 800; ++iter) {
        double move = 0.0;
        for (int k = 0; k < d; ++k) {
            Complex xk = y[static_cast<size_t>(k)];
            Complex denom = c[static_cast<size_t>(d)];
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= (xk - y[static_cast<size_t>(j)]);
            if (denom == Complex(0.0, 0.0)) {
                y[static_cast<size_t>(k)] = xk + Complex(1e-8, 1e-8);
                move = 1.0;
                continue;
            }
            Complex step = eval(xk) / denom;
            y[static_cast<size_t>(k)] = xk - step;
            move = std::max(move, std::abs(step));
        }
        if (move < 1e-15) break;
    }
    double s = to_double(sigma);
    for (const auto& root : y) roots.push_back(root * s);
    return roots;
}

}  // namespace qgr
