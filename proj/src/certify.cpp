#include "qgr/certify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "qgr/errors.hpp"
#include "qgr/matrix.hpp"

namespace qgr {

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

// Positive-rational rescaling to coprime integer coefficients.
QPoly make_primitive(const QPoly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm(1);
    for (const auto& [e, c] : p.terms()) {
        BigInt d = c.get_den();
        den_lcm = BigInt(den_lcm * d / gcd(den_lcm, d));
    }
    BigInt num_gcd(0);
    for (const auto& [e, c] : p.terms()) {
        BigRat scaled = BigRat(c * BigRat(den_lcm));
        scaled.canonicalize();
        num_gcd = gcd(num_gcd, BigInt(scaled.get_num()));
    }
    if (num_gcd == 0) return p;
    return p.scale(BigRat(den_lcm, num_gcd));
}

std::vector<QPoly> coefficients_in_var(const QPoly& p, int var) {
    int d = p.degree_in(var);
    std::vector<QPoly> out(static_cast<size_t>(std::max(0, d)) + 1, QPoly(p.vars()));
    for (const auto& [e, c] : p.terms()) {
        Exponents stripped = e;
        int k = stripped[static_cast<size_t>(var)];
        stripped[static_cast<size_t>(var)] = 0;
        out[static_cast<size_t>(k)].add_term(stripped, c);
    }
    return out;
}

UniPoly to_unipoly(const QPoly& p, int var) {
    std::vector<BigRat> coeffs(static_cast<size_t>(std::max(0, p.degree_in(var))) + 1, BigRat(0));
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw internal_error("polynomial is not univariate in the projection variable");
        coeffs[static_cast<size_t>(e[static_cast<size_t>(var)])] += c;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace

QPoly sylvester_resultant(const QPoly& a, const QPoly& b, int var) {
    const int da = a.degree_in(var);
    const int db = b.degree_in(var);
    if (da < 0 || db < 0) throw input_error("resultant of a zero polynomial");
    if (da == 0 && db == 0) throw input_error("neither polynomial involves the variable");
    if (da == 0) {
        QPoly acc = QPoly::constant(a.vars(), BigRat(1));
        for (int i = 0; i < db; ++i) acc = acc * a;
        return acc;
    }
    if (db == 0) {
        QPoly acc = QPoly::constant(b.vars(), BigRat(1));
        for (int i = 0; i < da; ++i) acc = acc * b;
        return acc;
    }

    auto ca = coefficients_in_var(a, var);
    auto cb = coefficients_in_var(b, var);
    const int size = da + db;
    Matrix<QPoly> syl(size, size, QPoly(a.vars()));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) syl.at(r, r + j) = ca[static_cast<size_t>(da - j)];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) syl.at(db + r, r + j) = cb[static_cast<size_t>(db - j)];
    return det(syl, QPoly::constant(a.vars(), BigRat(1)));
}

namespace {

// One elimination pass down to a univariate polynomial in keep_var; distinct
// routes rotate the anchor so their extraneous factors differ.
std::optional<UniPoly> eliminate_route(std::vector<QPoly> polys, const VarTablePtr& ring, int keep_var,
                                       int route, std::vector<std::string>& notes) {
    std::vector<int> elim_order;
    for (int v = ring->arity() - 1; v >= 0; --v)
        if (v != keep_var) elim_order.push_back(v);

    int stage = 0;
    for (int v : elim_order) {
        std::vector<QPoly> with_v, without_v;
        for (auto& p : polys) {
            if (p.is_zero()) continue;
            (p.degree_in(v) >= 1 ? with_v : without_v).push_back(p);
        }
        if (with_v.empty()) {
            ++stage;
            continue;
        }
        if (with_v.size() == 1) {
            notes.push_back("route " + std::to_string(route) + ": variable " + ring->name(v) +
                            " appears in a single equation");
            return std::nullopt;
        }
        size_t anchor_id = static_cast<size_t>((route + stage) % static_cast<int>(with_v.size()));
        const QPoly& anchor = with_v[anchor_id];
        std::vector<QPoly> next = without_v;
        std::set<std::string> seen;
        for (auto& p : next) seen.insert(p.to_string());
        for (size_t j = 0; j < with_v.size(); ++j) {
            if (j == anchor_id) continue;
            QPoly res = make_primitive(sylvester_resultant(anchor, with_v[j], v));
            if (res.is_zero()) {
                notes.push_back("route " + std::to_string(route) + ": zero resultant at " + ring->name(v));
                continue;
            }
            if (res.degree() == 0) continue;
            if (seen.insert(res.to_string()).second) next.push_back(std::move(res));
            if (next.size() >= 6) break;
        }
        if (next.empty()) {
            notes.push_back("route " + std::to_string(route) + ": elimination of " + ring->name(v) +
                            " produced nothing");
            return std::nullopt;
        }
        polys = std::move(next);
        ++stage;
    }

    std::optional<UniPoly> acc;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.degree_in(keep_var) < 1) continue;
        UniPoly u = to_unipoly(p, keep_var).primitive();
        acc = acc ? gcd(*acc, u) : u;
    }
    if (acc && acc->degree() < 1) return std::nullopt;
    return acc;
}

double relative_gap(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Certificate certify_eliminant(const std::vector<QPoly>& quadrics, const VarTablePtr& ring, int keep_var,
                              const std::vector<std::vector<Complex>>& solution_coords,
                              int numeric_real_count, uint64_t seed, int max_retries) {
    if (quadrics.empty()) throw certification_unavailable_error("no equations to certify");
    const int nv = ring->arity();
    if (keep_var < 0 || keep_var >= nv) throw input_error("projection variable out of range");

    BigInt bezout(1);
    for (int i = 0; i < std::min<int>(nv, static_cast<int>(quadrics.size())); ++i) bezout *= 2;

    Rng rng(seed ^ 0xc0ffee1234ULL);
    Certificate cert;
    cert.variable = ring->name(keep_var);

    std::vector<QPoly> work = quadrics;
    // projection of every numeric solution onto the (possibly recombined)
    // coordinate; lambda[j] are the mixing weights of the current retry
    std::vector<long> lambda(static_cast<size_t>(nv), 0);

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        cert.retries = attempt;
        std::vector<Complex> projections;
        for (const auto& coords : solution_coords) {
            Complex u = coords[static_cast<size_t>(keep_var)];
            for (int j = 0; j < nv; ++j)
                if (j != keep_var)
                    u += static_cast<double>(lambda[static_cast<size_t>(j)]) * coords[static_cast<size_t>(j)];
            projections.push_back(u);
        }
        std::vector<Complex> distinct_proj;
        for (const auto& u : projections) {
            bool dup = false;
            for (const auto& v : distinct_proj)
                if (relative_gap(u, v) < 1e-9) dup = true;
            if (!dup) distinct_proj.push_back(u);
        }

        std::optional<UniPoly> candidate;
        for (int route = 0; route < 3; ++route) {
            auto u = eliminate_route(work, ring, keep_var, route, cert.notes);
            if (!u) continue;
            candidate = candidate ? gcd(*candidate, *u) : *u;
            if (candidate->degree() >= 1 &&
                !solution_coords.empty() &&
                candidate->degree() == static_cast<int>(distinct_proj.size()))
                break;  // already minimal
        }

        bool ok = candidate.has_value() && candidate->degree() >= 1;
        UniPoly elim;
        if (ok) {
            elim = square_free_part(*candidate).primitive();
            if (BigInt(elim.degree()) > bezout) ok = false;
        }
        if (ok && !solution_coords.empty()) {
            if (elim.degree() != static_cast<int>(distinct_proj.size())) {
                cert.notes.push_back("attempt " + std::to_string(attempt) + ": eliminant degree " +
                                     std::to_string(elim.degree()) + " vs " +
                                     std::to_string(distinct_proj.size()) + " distinct projections");
                ok = false;
            } else {
                // real projections are matched exactly by Sturm interval
                // counts (robust to root pairs the iteration cannot split),
                // complex ones against the approximate root set
                std::vector<Complex> roots;
                for (const auto& u : projections) {
                    double scale = std::max(1.0, std::abs(u));
                    bool matched = false;
                    if (std::fabs(u.imag()) <= 1e-9 * scale) {
                        BigRat center;
                        mpq_set_d(center.get_mpq_t(), u.real());
                        BigRat delta;
                        mpq_set_d(delta.get_mpq_t(), 1e-6 * scale);
                        matched = sturm_real_roots(elim, BigRat(center - delta), BigRat(center + delta)) >= 1;
                    } else {
                        if (roots.empty()) roots = complex_roots_approx(elim);
                        for (const auto& r : roots)
                            if (relative_gap(u, r) <= 1e-6) matched = true;
                    }
                    if (!matched) {
                        cert.notes.push_back("attempt " + std::to_string(attempt) +
                                             ": projection misses the eliminant roots");
                        ok = false;
                        break;
                    }
                }
            }
        }

        if (ok) {
            cert.eliminant = elim;
            cert.degree = elim.degree();
            cert.sturm_count = sturm_real_roots(elim);
            cert.numeric_compared = !solution_coords.empty();
            cert.agrees_with_numeric = cert.numeric_compared && cert.sturm_count == numeric_real_count;
            return cert;
        }

        // Random exact linear change of the projection coordinate.
        if (attempt < max_retries) {
            std::map<int, QPoly> replace;
            QPoly expr = QPoly::variable(ring, keep_var);
            for (int j = 0; j < nv; ++j) {
                if (j == keep_var) continue;
                long l = rng.integer(1, 5);
                lambda[static_cast<size_t>(j)] += l;
                expr = expr - QPoly::variable(ring, j, BigRat(l));
            }
            replace[keep_var] = expr;
            std::vector<QPoly> changed;
            for (const auto& q : work) changed.push_back(q.substitute(replace, ring));
            work = std::move(changed);
        }
    }
    throw certification_unavailable_error("no validated eliminant after " + std::to_string(max_retries) +
                                          " retries");
}

}  // namespace qgr
