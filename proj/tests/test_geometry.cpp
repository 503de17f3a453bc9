#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qgr/errors.hpp"
#include "qgr/geometry.hpp"

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

BinaryForm random_form(Rng& rng, int degree) {
    BinaryForm f = BinaryForm::zero();
    for (int k = 0; k <= degree; ++k)
        f = f + BinaryForm::monomial(BigRat(rng.integer(-9, 9)), k, degree);
    if (f.is_zero()) f = BinaryForm::monomial(BigRat(1), 0, degree);
    return f;
}

// p x n matrix with homogeneous rows whose degrees sum to q.
Matrix<BinaryForm> random_form_matrix(Rng& rng, int p, int n, int q) {
    std::vector<int> degrees(static_cast<size_t>(p), 0);
    for (int i = 0; i < q; ++i) ++degrees[static_cast<size_t>(rng.integer(0, p - 1))];
    Matrix<BinaryForm> m(p, n);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = random_form(rng, degrees[static_cast<size_t>(r)]);
    return m;
}

int subset_weight(const std::vector<int>& alpha) {
    int w = 0;
    for (size_t i = 0; i < alpha.size(); ++i) w += alpha[i] - static_cast<int>(i) - 1;
    return w;
}

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long acc = 1;
    for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return static_cast<int>(acc);
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("osculating matrix") {
    CHECK_THROWS_AS(osculating_matrix(4, 4), input_error);

    auto single = osculating_matrix(1, 3);
    CHECK(single.rows.at(0, 0) == BinaryForm::monomial(BigRat(1), 2, 2));
    CHECK(single.rows.at(0, 2) == BinaryForm::monomial(BigRat(1), 0, 2));

    auto plane = osculating_matrix(2, 4);
    auto at11 = plane.evaluate(BigRat(1), BigRat(1));
    int expected[2][4] = {{1, 1, 1, 1}, {0, 1, 2, 3}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) CHECK(at11.at(r, c) == expected[r][c]);

    auto big = osculating_matrix(3, 5);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c)
            if (!big.rows.at(r, c).is_zero()) CHECK(big.rows.at(r, c).degree() == 4 - r);
}

TEST_CASE("signed complementary minors") {
    // flagship table
    std::vector<std::pair<std::vector<int>, int>> expected = {
        {{1, 2}, 1}, {{1, 3}, -2}, {{1, 4}, 1}, {{2, 3}, 3}, {{2, 4}, -2}, {{3, 4}, 1}};
    for (const auto& [alpha, value] : expected) CHECK(l_minor(2, 4, alpha) == value);

    // bottom subset carries sign +1: equals the plain complementary minor
    auto base = osculating_matrix(3, 5).evaluate(BigRat(1), BigRat(1));
    Matrix<BigRat> sub(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) sub.at(r, c) = base.at(r, c + 2);
    CHECK(l_minor(3, 5, {1, 2}) == det(sub, BigRat(1)));
}

TEST_CASE("complementary minor identity is a monomial in s,t") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {2, 5}}) {
        const int p = n - m;
        auto plane = osculating_matrix(m, n);
        for (const auto& alpha : subsets_of(n, p)) {
            std::vector<int> comp;
            {
                std::set<int> in(alpha.begin(), alpha.end());
                for (int v = 1; v <= n; ++v)
                    if (!in.count(v)) comp.push_back(v);
            }
            Matrix<BinaryForm> sub(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) sub.at(r, c) = plane.rows.at(r, comp[static_cast<size_t>(c)] - 1);
            BinaryForm minor = det(sub, BinaryForm::constant(BigRat(1)));
            int w = subset_weight(alpha);
            BigRat l = l_minor(m, n, alpha);
            BigRat signed_l = (w % 2 == 0) ? l : BigRat(-l);
            BinaryForm expected_monomial =
                BinaryForm::monomial(signed_l, binom(m, 2) + w, binom(m, 2) + m * p);
            CHECK(minor == expected_monomial);
        }
    }
}

TEST_CASE("pencil sections") {
    auto shape = ProblemShape::create(2, 2, 1);
    CHECK_THROWS_AS(lambda_form(shape, BigRat(0), BigRat(0)), input_error);

    // coefficients at (1, t) from the frozen minor table and ranks
    const BigRat t = make_rat(7);
    auto section = lambda_form(shape, BigRat(1), t);
    CHECK(section.kind == LinearSection::Kind::Osculating);
    std::vector<std::pair<std::vector<int>, int>> table = {
        {{1, 2}, 1}, {{1, 3}, -2}, {{1, 4}, 1}, {{2, 3}, 3}, {{2, 4}, -2}, {{3, 4}, 1}};
    auto ring = zvar_table(shape);
    int checked = 0;
    for (int level = 0; level <= 1; ++level) {
        for (const auto& [alpha, l] : table) {
            QuantumIndex x{alpha, level};
            int r = rank(shape, x);
            BigRat want = BigRat(BigRat(l) * pow_rat(t, shape.N() - r));
            auto pos = ring->find(zvar_name(x));
            REQUIRE(pos);
            Exponents e(static_cast<size_t>(ring->arity()), 0);
            e[static_cast<size_t>(*pos)] = 1;
            auto it = section.form.terms().find(e);
            REQUIRE(it != section.form.terms().end());
            CHECK(it->second == want);
            ++checked;
        }
    }
    CHECK(checked == 12);

    // at (1,1) the coefficients are exactly the signed minors
    auto at_one = lambda_form(shape, BigRat(1), BigRat(1));
    for (const auto& [alpha, l] : table) {
        for (int level = 0; level <= 1; ++level) {
            auto pos = ring->find(zvar_name(QuantumIndex{alpha, level}));
            Exponents e(static_cast<size_t>(ring->arity()), 0);
            e[static_cast<size_t>(*pos)] = 1;
            CHECK(at_one.form.terms().at(e) == l);
        }
    }
}

TEST_CASE("plane sections via Laplace expansion") {
    auto shape = ProblemShape::create(2, 2, 0);

    // rows e3, e4: only the z12 coordinate survives
    Matrix<BigRat> coords(2, 4);
    coords.at(0, 2) = 1;
    coords.at(1, 3) = 1;
    auto section = section_from_plane(shape, coords, BigRat(1), BigRat(1));
    CHECK(section.form.term_count() == 1);
    auto ring = zvar_table(shape);
    Exponents e(static_cast<size_t>(ring->arity()), 0);
    e[static_cast<size_t>(*ring->find("z12_0"))] = 1;
    CHECK(section.form.terms().count(e) == 1);

    Matrix<BigRat> degenerate(2, 4);
    degenerate.at(0, 0) = 1;
    degenerate.at(1, 0) = 2;
    CHECK_THROWS_AS(section_from_plane(shape, degenerate, BigRat(1), BigRat(1)),
                    degenerate_plane_error);
}

TEST_CASE("plane section equals the determinant expansion") {
    // independent oracle: evaluating the section at extracted coordinates
    // reproduces det[L; M(s,t)] including the overall sign
    Rng rng(17);
    for (auto shape : {ProblemShape::create(2, 2, 1), ProblemShape::create(3, 2, 1)}) {
        const int n = shape.n();
        for (int trial = 0; trial < 5; ++trial) {
            Matrix<BigRat> plane(shape.m, n);
            for (int r = 0; r < shape.m; ++r)
                for (int c = 0; c < n; ++c) plane.at(r, c) = BigRat(rng.integer(-9, 9));
            try {
                auto section = section_from_plane(shape, plane, BigRat(1), make_rat(3, 2));
                auto forms = random_form_matrix(rng, shape.p, n, shape.q);
                auto z = pluecker_extract(shape, forms);

                // section value at the extracted coordinates
                auto ring = zvar_table(shape);
                BigRat value(0);
                int id = 0;
                for (const auto& x : enumerate_indices(shape)) {
                    Exponents e(static_cast<size_t>(ring->arity()), 0);
                    e[static_cast<size_t>(id)] = 1;
                    auto it = section.form.terms().find(e);
                    if (it != section.form.terms().end()) value += BigRat(it->second * z.at(x));
                    ++id;
                }
                value.canonicalize();

                // full determinant
                Matrix<BigRat> stacked(n, n);
                for (int r = 0; r < shape.m; ++r)
                    for (int c = 0; c < n; ++c) stacked.at(r, c) = plane.at(r, c);
                for (int r = 0; r < shape.p; ++r)
                    for (int c = 0; c < n; ++c)
                        stacked.at(shape.m + r, c) = forms.at(r, c).evaluate(BigRat(1), make_rat(3, 2));
                CHECK(value == det(stacked, BigRat(1)));
            } catch (const degenerate_plane_error&) {
                // unlucky random plane; skip
            }
        }
    }
}

TEST_CASE("osculating plane sections match the pencil") {
    // sections through the evaluated osculating plane at (1,u) with curve
    // parameter u^n are proportional to the pencil at (1,u)
    auto shape = ProblemShape::create(2, 2, 1);
    const BigRat u = make_rat(5, 3);
    auto plane = osculating_matrix(2, 4).evaluate(BigRat(1), u);
    auto from_plane = section_from_plane(shape, plane, BigRat(1), pow_rat(u, 4));
    auto pencil = lambda_form(shape, BigRat(1), u);

    BigRat ratio(0);
    for (const auto& [e, c] : pencil.form.terms()) {
        auto it = from_plane.form.terms().find(e);
        REQUIRE(it != from_plane.form.terms().end());
        BigRat r = BigRat(it->second / c);
        r.canonicalize();
        if (ratio == 0)
            ratio = r;
        else
            CHECK(r == ratio);
    }
    CHECK(ratio != 0);
    CHECK(from_plane.form.term_count() == pencil.form.term_count());
}

TEST_CASE("quantum relations") {
    auto shape = ProblemShape::create(2, 2, 1);
    auto flagship = quantum_pluecker_relations(shape);
    REQUIRE(flagship.size() == 3);
    auto ring = flagship[0].vars();
    // the three displayed quadrics, term order free
    std::vector<QPoly> expected = {
        parse_poly("z14_0*z23_0 - z13_0*z24_0 + z12_0*z34_0", ring),
        parse_poly("z12_1*z34_0 - z13_1*z24_0 + z14_1*z23_0 + z23_1*z14_0 - z24_1*z13_0 + z34_1*z12_0",
                   ring),
        parse_poly("z14_1*z23_1 - z13_1*z24_1 + z12_1*z34_1", ring)};
    for (const auto& want : expected) {
        bool found = false;
        for (const auto& got : flagship)
            if (got == want || got == -want) found = true;
        CHECK(found);
    }

    auto classical = quantum_pluecker_relations(ProblemShape::create(2, 2, 0));
    REQUIRE(classical.size() == 1);
    auto cring = classical[0].vars();
    QPoly classic = parse_poly("z14_0*z23_0 - z13_0*z24_0 + z12_0*z34_0", cring);
    CHECK((classical[0] == classic || classical[0] == -classic));

    CHECK(quantum_pluecker_relations(1, 4, 2).empty());
}

TEST_CASE("relations vanish on extracted coordinates") {
    Rng rng(23);
    for (auto shape : {ProblemShape::create(2, 2, 0), ProblemShape::create(2, 2, 1),
                       ProblemShape::create(3, 2, 1), ProblemShape::create(2, 3, 1)}) {
        auto relations = quantum_pluecker_relations(shape);
        for (int trial = 0; trial < 5; ++trial) {
            auto forms = random_form_matrix(rng, shape.p, shape.n(), shape.q);
            auto z = pluecker_extract(shape, forms);
            std::vector<BigRat> point;
            for (const auto& x : enumerate_indices(shape)) point.push_back(z.at(x));
            for (const auto& relation : relations) {
                BigRat value(0);
                for (const auto& [e, c] : relation.terms()) {
                    BigRat term = c;
                    for (size_t i = 0; i < e.size(); ++i)
                        for (int k = 0; k < e[i]; ++k) term *= point[i];
                    value += term;
                }
                value.canonicalize();
                CHECK(value == 0);
            }
        }
    }
}

TEST_CASE("boundary map") {
    auto target = ProblemShape::create(2, 2, 1);
    auto source = ProblemShape::create(2, 2, 0);

    PlueckerVector<BigRat> x;
    x.shape = source;
    for (const auto& idx : enumerate_indices(source))
        x.coords[idx] = BigRat(subset_weight(idx.alpha) + 1);

    auto keep = pi_map(target, BigRat(1), BigRat(0), x);
    for (const auto& idx : enumerate_indices(target)) {
        if (idx.level == 0)
            CHECK(keep.at(idx) == x.at(QuantumIndex{idx.alpha, 0}));
        else
            CHECK(keep.at(idx) == 0);
    }

    auto drop = pi_map(target, BigRat(0), BigRat(1), x);
    for (const auto& idx : enumerate_indices(target)) {
        if (idx.level == 1)
            CHECK(drop.at(idx) == BigRat(-x.at(QuantumIndex{idx.alpha, 0})));
        else
            CHECK(drop.at(idx) == 0);
    }

    CHECK_THROWS_AS(pi_map(source, BigRat(1), BigRat(0), x), input_error);
    CHECK_THROWS_AS(pi_map(target, BigRat(0), BigRat(0), x), input_error);
}

TEST_CASE("boundary pullback identity") {
    // substituting the boundary parameterization into the pencil factors as
    // (A t^n - B s^n) times the lower-degree pencil
    for (int q : {1, 2}) {
        auto shape = ProblemShape::create(2, 2, q);
        auto lower = ProblemShape::create(2, 2, q - 1);
        const int n = shape.n();

        std::vector<std::string> names;
        for (const auto& x : enumerate_indices(lower)) names.push_back("x" + zvar_name(x).substr(1));
        names.push_back("s");
        names.push_back("t");
        names.push_back("A");
        names.push_back("B");
        auto ring = make_vars(names);

        auto xvar = [&](const QuantumIndex& idx) {
            auto pos = ring->find("x" + zvar_name(idx).substr(1));
            REQUIRE(pos);
            return QPoly::variable(ring, *pos);
        };
        auto named = [&](const std::string& name) { return QPoly::variable(ring, *ring->find(name)); };

        std::vector<std::string> znames;
        for (const auto& x : enumerate_indices(shape)) znames.push_back(zvar_name(x));
        znames.push_back("s");
        znames.push_back("t");
        auto zring = make_vars(znames);
        QPoly pencil = lambda_form_symbolic(shape, zring);

        std::map<int, QPoly> replace;
        int id = 0;
        for (const auto& idx : enumerate_indices(shape)) {
            QPoly image(ring);
            if (idx.level <= q - 1) image = image + named("A") * xvar(QuantumIndex{idx.alpha, idx.level});
            if (idx.level >= 1) image = image - named("B") * xvar(QuantumIndex{idx.alpha, idx.level - 1});
            replace[id++] = image;
        }
        QPoly pulled = pencil.substitute(replace, ring);

        QPoly lower_pencil(ring);
        const int lower_total = lower.N();
        for (const auto& idx : enumerate_indices(lower)) {
            int r = rank(lower, idx);
            QPoly term = xvar(idx).scale(l_minor(shape.m, n, idx.alpha));
            for (int k = 0; k < r; ++k) term = term * named("s");
            for (int k = 0; k < lower_total - r; ++k) term = term * named("t");
            lower_pencil = lower_pencil + term;
        }
        QPoly tn = QPoly::constant(ring, BigRat(1));
        QPoly sn = QPoly::constant(ring, BigRat(1));
        for (int k = 0; k < n; ++k) {
            tn = tn * named("t");
            sn = sn * named("s");
        }
        QPoly factor = named("A") * tn - named("B") * sn;
        CHECK(pulled == factor * lower_pencil);
    }
}

TEST_CASE("determinant identity for the pencil") {
    // det[L(s,t); M(s^n,t^n)] = s^binom(m,2) * pencil(s,t) at extracted
    // coordinates, for shapes with even pm
    Rng rng(41);
    for (int q : {0, 1}) {
        auto shape = ProblemShape::create(2, 2, q);
        const int n = shape.n();
        auto plane = osculating_matrix(shape.m, n);
        for (int trial = 0; trial < 3; ++trial) {
            auto forms = random_form_matrix(rng, shape.p, n, q);
            auto z = pluecker_extract(shape, forms);

            Matrix<BinaryForm> stacked(n, n);
            for (int r = 0; r < shape.m; ++r)
                for (int c = 0; c < n; ++c) stacked.at(r, c) = plane.rows.at(r, c);
            for (int r = 0; r < shape.p; ++r)
                for (int c = 0; c < n; ++c) stacked.at(shape.m + r, c) = forms.at(r, c).compose_power(n);
            BinaryForm lhs = det(stacked, BinaryForm::constant(BigRat(1)));

            BinaryForm rhs = BinaryForm::zero();
            const int total = shape.N();
            for (const auto& idx : enumerate_indices(shape)) {
                BigRat coeff = BigRat(z.at(idx) * l_minor(shape.m, n, idx.alpha));
                if (coeff == 0) continue;
                int r = rank(shape, idx);
                rhs = rhs + BinaryForm::monomial(coeff, r, total);
            }
            int shift = binom(shape.m, 2);
            rhs = rhs * BinaryForm::monomial(BigRat(1), shift, shift);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("parameter schedules") {
    auto power1 = t_schedule(8, ScheduleSpec::power(1));
    for (int i = 0; i < 8; ++i) CHECK(power1[static_cast<size_t>(i)] == i + 1);
    auto power6 = t_schedule(8, ScheduleSpec::power(6));
    CHECK(power6[1] == 64);
    CHECK(power6[2] == 729);
    CHECK(power6[7] == 262144);

    auto geom = t_schedule(4, ScheduleSpec::geometric(make_rat(3, 2)));
    CHECK(geom[0] == 1);
    CHECK(geom[3] == make_rat(27, 8));

    CHECK_THROWS_AS(t_schedule(3, ScheduleSpec::explicit_values({BigRat(1), BigRat(1), BigRat(2)})),
                    input_error);
    CHECK_THROWS_AS(t_schedule(2, ScheduleSpec::explicit_values({BigRat(0), BigRat(1)})), input_error);
    CHECK_THROWS_AS(t_schedule(2, ScheduleSpec::geometric(BigRat(1))), input_error);
}

TEST_CASE("system assembly and reduction") {
    auto shape = ProblemShape::create(2, 2, 1);
    auto schedule = t_schedule(shape.N(), ScheduleSpec::power(6));
    auto system = build_system(shape, OsculatingSections{schedule});

    CHECK(system.quadrics.size() == 3);
    CHECK(system.sections.size() == 8);
    CHECK(system.patch == QuantumIndex{{3, 4}, 1});
    REQUIRE(system.reduced.has_value());
    CHECK(system.reduced->linear_rank == 8);
    CHECK(system.reduced->free_vars.size() == 3);
    CHECK(system.reduced->reduced_quadrics.size() == 3);
    for (const auto& q : system.reduced->reduced_quadrics) CHECK(q.degree() <= 2);
    CHECK(system.warnings.empty());

    auto small = build_system(ProblemShape::create(2, 2, 0),
                              OsculatingSections{t_schedule(4, ScheduleSpec::power(1))});
    CHECK(small.reduced->free_vars.size() == 1);
    int live = 0;
    for (const auto& q : small.reduced->reduced_quadrics)
        if (!q.is_zero()) ++live;
    CHECK(live == 1);

    CHECK_THROWS_AS(build_system(shape, OsculatingSections{{BigRat(1), BigRat(1)}}), input_error);
    CHECK_THROWS_AS(build_system(shape, OsculatingSections{t_schedule(9, ScheduleSpec::power(1))}),
                    input_error);
}

TEST_CASE("reduction soundness") {
    // exact points of the reduced linear space satisfy the original sections
    Rng rng(31);
    auto shape = ProblemShape::create(2, 2, 1);
    auto system = build_system(shape, OsculatingSections{t_schedule(8, ScheduleSpec::power(2))});
    const auto& red = *system.reduced;
    auto ring = system.zvars;

    for (int trial = 0; trial < 4; ++trial) {
        std::vector<BigRat> free_point;
        for (size_t i = 0; i < red.free_vars.size(); ++i)
            free_point.push_back(make_rat(rng.integer(-7, 7), rng.integer(1, 4)));

        std::vector<BigRat> full(static_cast<size_t>(ring->arity()), BigRat(0));
        full[static_cast<size_t>(*ring->find(zvar_name(system.patch)))] = 1;
        for (size_t i = 0; i < red.free_vars.size(); ++i)
            full[static_cast<size_t>(red.free_vars[i])] = free_point[i];
        for (const auto& [var, expr] : red.eliminated) {
            BigRat value(0);
            for (const auto& [e, c] : expr.terms()) {
                BigRat term = c;
                for (size_t i = 0; i < e.size(); ++i)
                    for (int k = 0; k < e[i]; ++k) term *= free_point[i];
                value += term;
            }
            value.canonicalize();
            full[static_cast<size_t>(var)] = value;
        }

        for (const auto& section : system.sections) {
            BigRat value(0);
            for (const auto& [e, c] : section.form.terms()) {
                BigRat term = c;
                for (size_t i = 0; i < e.size(); ++i)
                    for (int k = 0; k < e[i]; ++k) term *= full[i];
                value += term;
            }
            value.canonicalize();
            CHECK(value == 0);
        }
    }
}

TEST_CASE("index truncation keeps only dominated coordinates") {
    auto shape = ProblemShape::create(2, 2, 1);
    auto system = build_system(shape, OsculatingSections{t_schedule(8, ScheduleSpec::power(1))});

    auto whole = restrict_to_index(system, QuantumIndex{{3, 4}, 1});
    CHECK(whole.quadrics.size() == system.quadrics.size());
    for (size_t i = 0; i < whole.sections.size(); ++i)
        CHECK(whole.sections[i].form == system.sections[i].form);

    auto bottom = restrict_to_index(system, QuantumIndex{{1, 2}, 0});
    for (const auto& section : bottom.sections) CHECK(section.form.term_count() == 1);
    CHECK(bottom.quadrics.empty());
}

TEST_CASE("valuation of truncated pencils") {
    auto shape = ProblemShape::create(2, 2, 1);
    const int total = shape.N();
    std::vector<std::string> names;
    for (const auto& x : enumerate_indices(shape)) names.push_back(zvar_name(x));
    names.push_back("s");
    names.push_back("t");
    auto ring = make_vars(names);
    QPoly pencil = lambda_form_symbolic(shape, ring);
    std::map<int, QPoly> at_s1{{ring->arity() - 2, QPoly::constant(ring, BigRat(1))}};
    QPoly at_one = pencil.substitute(at_s1, ring);

    int t_pos = ring->arity() - 1;
    for (const auto& cap : enumerate_indices(shape)) {
        QPoly truncated = truncate_to_index(at_one, shape, cap);
        int r = rank(shape, cap);
        int min_exp = total, max_exp = 0;
        for (const auto& [e, c] : truncated.terms()) {
            min_exp = std::min(min_exp, e[static_cast<size_t>(t_pos)]);
            max_exp = std::max(max_exp, e[static_cast<size_t>(t_pos)]);
        }
        CHECK(min_exp >= total - r);  // divisible by t^(N-rank)
        CHECK(max_exp <= total);      // quotient degree at most rank
    }
}

TEST_CASE("text serialization round-trips") {
    auto shape = ProblemShape::create(2, 2, 1);
    auto system = build_system(shape, OsculatingSections{t_schedule(8, ScheduleSpec::power(6))});
    std::string text = system_to_text(system);
    PolySystem parsed = system_from_text(text);
    CHECK(system_to_text(parsed) == text);
    CHECK(parsed.shape == system.shape);
    CHECK(parsed.patch == system.patch);
    CHECK(parsed.quadrics.size() == system.quadrics.size());
    for (size_t i = 0; i < parsed.quadrics.size(); ++i) CHECK(parsed.quadrics[i] == system.quadrics[i]);
    for (size_t i = 0; i < parsed.sections.size(); ++i)
        CHECK(parsed.sections[i].form == system.sections[i].form);

    CHECK_THROWS_AS(system_from_text("quadric: z12_0"), parse_error);
    CHECK_THROWS_AS(system_from_text("shape 2 2 1\nbogus line"), parse_error);
}
