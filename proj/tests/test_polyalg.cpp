#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/binary_form.hpp"
#include "qgr/errors.hpp"
#include "qgr/matrix.hpp"
#include "qgr/pluecker.hpp"
#include "qgr/sparse_poly.hpp"

using namespace qgr;

namespace {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

QPoly random_poly(Rng& rng, const VarTablePtr& vars, int max_terms = 4) {
    QPoly p(vars);
    int terms = static_cast<int>(rng.integer(1, max_terms));
    for (int i = 0; i < terms; ++i) {
        Exponents e(static_cast<size_t>(vars->arity()), 0);
        for (int v = 0; v < vars->arity(); ++v) e[static_cast<size_t>(v)] = static_cast<int>(rng.integer(0, 2));
        p.add_term(e, make_rat(rng.integer(-5, 5), rng.integer(1, 3)));
    }
    return p;
}

// Independent first-row cofactor expansion.
BigRat det_cofactor(const Matrix<BigRat>& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    BigRat acc(0);
    for (int c = 0; c < n; ++c) {
        Matrix<BigRat> sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int col = 0; col < n; ++col) {
                if (col == c) continue;
                sub.at(r - 1, cc++) = m.at(r, col);
            }
        }
        BigRat term = BigRat(m.at(0, c) * det_cofactor(sub));
        acc += (c % 2 == 0) ? term : BigRat(-term);
    }
    acc.canonicalize();
    return acc;
}

BinaryForm bf_s() { return BinaryForm::var_s(); }
BinaryForm bf_t() { return BinaryForm::var_t(); }

}  // namespace

TEST_CASE("binary form arithmetic") {
    auto s = bf_s(), t = bf_t();
    CHECK((s + t) * (s - t) == s * s - t * t);
    CHECK((t * t * s).derivative_t() == t * s.scale(BigRat(2)));
    CHECK(BinaryForm::zero().degree() == -1);
    CHECK((BinaryForm::zero() + s) == s);
    CHECK_THROWS_AS(s + s * s, input_error);

    auto f = s * s + s * t + t * t;
    CHECK(f.evaluate(BigRat(2), BigRat(3)) == 19);
    CHECK(f.compose_power(2) == s * s * s * s + s * s * t * t + t * t * t * t);
}

TEST_CASE("sparse polynomial arithmetic and substitution") {
    auto vars = make_vars({"s", "t"});
    auto s = QPoly::variable(vars, 0);
    auto t = QPoly::variable(vars, 1);
    CHECK((s + t) * (s - t) == s * s - t * t);
    CHECK((t * t * s).derivative(1) == s * t.scale(BigRat(2)));

    auto f = s * s + s * t + t * t;
    std::map<int, QPoly> rep;
    rep[1] = QPoly::constant(vars, BigRat(1));
    auto g = f.substitute(rep, vars);
    CHECK(g == s * s + s + QPoly::constant(vars, BigRat(1)));
    CHECK(g.to_string() == "s^2 + s + 1");
}

TEST_CASE("ring axioms on random polynomials") {
    auto vars = make_vars({"a", "b", "c"});
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly x = random_poly(rng, vars);
        QPoly y = random_poly(rng, vars);
        QPoly z = random_poly(rng, vars);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("registry mismatch is an input error") {
    auto a = make_vars({"x"});
    auto b = make_vars({"y"});
    CHECK_THROWS_AS(QPoly::variable(a, 0) + QPoly::variable(b, 0), input_error);
}

TEST_CASE("exact and floating evaluation agree") {
    auto vars = make_vars({"a", "b"});
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QPoly p = random_poly(rng, vars);
        std::vector<BigRat> point{make_rat(rng.integer(-9, 9), rng.integer(1, 4)),
                                  make_rat(rng.integer(-9, 9), rng.integer(1, 4))};
        BigRat exact(0);
        for (const auto& [e, c] : p.terms()) {
            BigRat term = c;
            for (size_t i = 0; i < e.size(); ++i) term *= pow_rat(point[i], e[i]);
            exact += term;
        }
        exact.canonicalize();
        CPoly pc = to_complex(p);
        Complex approx = pc.evaluate({Complex(to_double(point[0]), 0), Complex(to_double(point[1]), 0)});
        double want = to_double(exact);
        CHECK(std::abs(approx.real() - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("rendering round-trips exactly") {
    auto vars = make_vars({"z12_0", "z13_0", "s", "t"});
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly p = random_poly(rng, vars);
        if (p.is_zero()) continue;
        CHECK(parse_poly(p.to_string(), vars) == p);
        CHECK(parse_poly(p.to_string(), vars).to_string() == p.to_string());
    }
    CHECK(parse_poly("0", vars).is_zero());
    CHECK(parse_poly("-3/4*z12_0*t^2 + s", vars).to_string() == "-3/4*z12_0*t^2 + s");
    CHECK_THROWS_AS(parse_poly("2q", vars), parse_error);
    CHECK_THROWS_AS(parse_poly("z12_0 +", vars), parse_error);
}

TEST_CASE("determinants") {
    Matrix<BigRat> id2(2, 2, BigRat(0));
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    CHECK(det(id2, BigRat(1)) == 1);

    Matrix<BinaryForm> m(2, 2);
    m.at(0, 0) = bf_s();
    m.at(0, 1) = bf_t();
    m.at(1, 0) = bf_t();
    m.at(1, 1) = bf_s();
    CHECK(det(m, BinaryForm::constant(BigRat(1))) == bf_s() * bf_s() - bf_t() * bf_t());

    Matrix<BigRat> small(2, 2);
    small.at(0, 0) = 1;
    small.at(0, 1) = 1;
    small.at(1, 0) = 2;
    small.at(1, 1) = 3;
    CHECK(det(small, BigRat(1)) == 1);

    Matrix<BigRat> rect(2, 3);
    CHECK_THROWS_AS(det(rect, BigRat(1)), input_error);

    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<BigRat> r(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.at(i, j) = make_rat(rng.integer(-6, 6), rng.integer(1, 3));
        CHECK(det(r, BigRat(1)) == det_cofactor(r));
    }
}

TEST_CASE("pluecker extraction examples") {
    // constants, q = 0: identity block
    auto shape0 = ProblemShape::create(2, 2, 0);
    Matrix<BinaryForm> id(2, 4);
    id.at(0, 0) = BinaryForm::constant(BigRat(1));
    id.at(1, 1) = BinaryForm::constant(BigRat(1));
    auto v0 = pluecker_extract(shape0, id);
    CHECK(v0.at(QuantumIndex{{1, 2}, 0}) == 1);
    CHECK(v0.coords.size() == 1);

    // p = 1 line: [s t]
    Matrix<BinaryForm> line(1, 2);
    line.at(0, 0) = bf_s();
    line.at(0, 1) = bf_t();
    auto v1 = pluecker_extract_coords(1, 2, 1, line);
    CHECK(v1.at(QuantumIndex{{1}, 1}) == 1);
    CHECK(v1.at(QuantumIndex{{2}, 0}) == 1);
    CHECK(v1.size() == 2);

    // hand-expanded minors
    auto shape1 = ProblemShape::create(2, 2, 1);
    Matrix<BinaryForm> m(2, 4);
    m.at(0, 0) = bf_s();
    m.at(0, 1) = bf_t();
    m.at(1, 2) = BinaryForm::constant(BigRat(1));
    m.at(1, 3) = BinaryForm::constant(BigRat(1));
    auto v = pluecker_extract(shape1, m);
    CHECK(v.at(QuantumIndex{{1, 3}, 1}) == 1);
    CHECK(v.at(QuantumIndex{{1, 4}, 1}) == 1);
    CHECK(v.at(QuantumIndex{{2, 3}, 0}) == 1);
    CHECK(v.at(QuantumIndex{{2, 4}, 0}) == 1);
    CHECK(v.coords.size() == 4);

    // wrong-degree minor
    Matrix<BinaryForm> bad(2, 4);
    bad.at(0, 0) = bf_s();
    bad.at(0, 1) = bf_t();
    bad.at(1, 2) = bf_s();
    bad.at(1, 3) = bf_t();
    CHECK_THROWS_AS(pluecker_extract(shape1, bad), representation_error);
}

TEST_CASE("extraction is covariant under row operations") {
    // equal row degrees so constant row mixing keeps rows homogeneous
    auto shape = ProblemShape::create(2, 2, 2);
    Rng rng(11);
    Matrix<BinaryForm> m(2, 4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c)
            m.at(r, c) =
                bf_s().scale(BigRat(rng.integer(-4, 4))) + bf_t().scale(BigRat(rng.integer(-4, 4)));
    auto base = pluecker_extract(shape, m);

    // left-multiply by a constant invertible matrix
    Matrix<BigRat> c(2, 2);
    c.at(0, 0) = 2;
    c.at(0, 1) = 1;
    c.at(1, 0) = 1;
    c.at(1, 1) = 1;
    Matrix<BinaryForm> cm(2, 4);
    for (int col = 0; col < 4; ++col) {
        cm.at(0, col) = m.at(0, col).scale(c.at(0, 0)) + m.at(1, col).scale(c.at(0, 1));
        cm.at(1, col) = m.at(0, col).scale(c.at(1, 0)) + m.at(1, col).scale(c.at(1, 1));
    }
    auto scaled = pluecker_extract(shape, cm);
    BigRat factor = det(c, BigRat(1));
    for (const auto& [idx, value] : base.coords) CHECK(scaled.at(idx) == BigRat(value * factor));
    CHECK(scaled.coords.size() == base.coords.size());
}
