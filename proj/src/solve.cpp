#include "qgr/solve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qgr/dd.hpp"
#include "qgr/errors.hpp"

namespace qgr {

namespace {

// Deterministic, platform-stable generator (splitmix64).
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
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    long integer(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

struct NumTerm {
    Complex coeff;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent)
};
struct DDTerm {
    CDD coeff;
    std::vector<std::pair<int, int>> powers;
};

struct NumPoly {
    std::vector<NumTerm> terms;

    Complex eval(const std::vector<Complex>& x) const {
        Complex acc(0.0, 0.0);
        for (const auto& t : terms) {
            Complex v = t.coeff;
            for (auto [var, e] : t.powers)
                for (int k = 0; k < e; ++k) v *= x[static_cast<size_t>(var)];
            acc += v;
        }
        return acc;
    }
};

struct DDPoly {
    std::vector<DDTerm> terms;

    CDD eval(const std::vector<CDD>& x) const {
        CDD acc(0.0, 0.0);
        for (const auto& t : terms) {
            CDD v = t.coeff;
            for (auto [var, e] : t.powers)
                for (int k = 0; k < e; ++k) v = v * x[static_cast<size_t>(var)];
            acc = acc + v;
        }
        return acc;
    }

    // Magnitude of the largest term at x; scale for relative residuals.
    double eval_magnitude(const std::vector<CDD>& x) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            CDD v = t.coeff;
            for (auto [var, e] : t.powers)
                for (int k = 0; k < e; ++k) v = v * x[static_cast<size_t>(var)];
            acc += abs_value(v);
        }
        return acc;
    }
};

BigRat max_abs_coeff(const QPoly& p) {
    BigRat best(0);
    for (const auto& [e, c] : p.terms()) {
        BigRat a = abs_rat(c);
        if (a > best) best = a;
    }
    return best;
}

// Exact normalization by the largest coefficient, then two-limb conversion.
void convert_poly(const QPoly& p, NumPoly& out_d, DDPoly& out_dd) {
    out_d.terms.clear();
    out_dd.terms.clear();
    BigRat scale = max_abs_coeff(p);
    if (scale == 0) return;
    for (const auto& [e, c] : p.terms()) {
        BigRat v = BigRat(c / scale);
        v.canonicalize();
        std::vector<std::pair<int, int>> powers;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) powers.emplace_back(static_cast<int>(i), e[i]);
        DD limb = dd_from_rat(v);
        out_d.terms.push_back({Complex(limb.value(), 0.0), powers});
        out_dd.terms.push_back({CDD(limb, DD(0.0)), powers});
    }
}

// Square tracking system in projective coordinates: the affine equations are
// homogenized with one extra coordinate (last index) and closed with a random
// inhomogeneous patch plane, so paths stay bounded even when affine solutions
// have large modulus.
struct NumSystem {
    int nv = 0;          // tracking variables including the homogenizing one
    int affine_vars = 0;
    std::vector<int> degrees;
    std::vector<NumPoly> f;
    std::vector<std::vector<NumPoly>> jac;
    std::vector<DDPoly> f_dd;
    std::vector<std::vector<DDPoly>> jac_dd;

    static NumSystem build_projective(const std::vector<QPoly>& eqs, int affine_vars,
                                      const std::vector<Complex>& patch) {
        NumSystem sys;
        sys.affine_vars = affine_vars;
        sys.nv = affine_vars + 1;
        const int hom = affine_vars;  // homogenizing coordinate index

        auto push_equation = [&](std::vector<DDTerm> terms, int degree) {
            DDPoly fdd;
            fdd.terms = std::move(terms);
            NumPoly fd;
            for (const auto& t : fdd.terms) fd.terms.push_back({t.coeff.value(), t.powers});
            sys.f.push_back(std::move(fd));
            sys.f_dd.push_back(std::move(fdd));
            sys.degrees.push_back(degree);

            std::vector<NumPoly> row(static_cast<size_t>(sys.nv));
            std::vector<DDPoly> row_dd(static_cast<size_t>(sys.nv));
            const DDPoly& source = sys.f_dd.back();
            for (int v = 0; v < sys.nv; ++v) {
                for (const auto& t : source.terms) {
                    int e_v = 0;
                    for (auto [var, e] : t.powers)
                        if (var == v) e_v = e;
                    if (e_v == 0) continue;
                    DDTerm dt;
                    dt.coeff = t.coeff * CDD(static_cast<double>(e_v), 0.0);
                    for (auto [var, e] : t.powers) {
                        int reduced = (var == v) ? e - 1 : e;
                        if (reduced > 0) dt.powers.emplace_back(var, reduced);
                    }
                    row_dd[static_cast<size_t>(v)].terms.push_back(dt);
                    row[static_cast<size_t>(v)].terms.push_back(
                        {row_dd[static_cast<size_t>(v)].terms.back().coeff.value(),
                         row_dd[static_cast<size_t>(v)].terms.back().powers});
                }
            }
            sys.jac.push_back(std::move(row));
            sys.jac_dd.push_back(std::move(row_dd));
        };

        for (const auto& q : eqs) {
            int d = q.degree();
            if (d < 1) throw input_error("target equation is constant");
            BigRat scale = max_abs_coeff(q);
            std::vector<DDTerm> terms;
            for (const auto& [e, c] : q.terms()) {
                BigRat val = BigRat(c / scale);
                val.canonicalize();
                DDTerm t;
                t.coeff = CDD(dd_from_rat(val), DD(0.0));
                int term_degree = 0;
                for (size_t i = 0; i < e.size(); ++i) {
                    if (e[i] > 0) t.powers.emplace_back(static_cast<int>(i), e[i]);
                    term_degree += e[i];
                }
                if (d - term_degree > 0) t.powers.emplace_back(hom, d - term_degree);
                terms.push_back(std::move(t));
            }
            push_equation(std::move(terms), d);
        }

        // patch plane sum_j a_j X_j = 1
        std::vector<DDTerm> plane;
        for (int v = 0; v < sys.nv; ++v) {
            DDTerm t;
            t.coeff = CDD(patch[static_cast<size_t>(v)]);
            t.powers.emplace_back(v, 1);
            plane.push_back(std::move(t));
        }
        DDTerm minus_one;
        minus_one.coeff = CDD(-1.0, 0.0);
        plane.push_back(std::move(minus_one));
        push_equation(std::move(plane), 1);
        return sys;
    }
};

double inf_norm(const std::vector<Complex>& x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
}

// Power-of-two row/column equilibrated LU solve.
bool solve_linear(Eigen::MatrixXcd a, Eigen::VectorXcd b, Eigen::VectorXcd& out) {
    const int n = static_cast<int>(a.rows());
    Eigen::VectorXd col_scale(n);
    for (int r = 0; r < n; ++r) {
        double m = a.row(r).cwiseAbs().maxCoeff();
        if (!(m > 0.0) || !std::isfinite(m)) return false;
        double s = std::exp2(-std::ilogb(m));
        a.row(r) *= s;
        b(r) *= s;
    }
    for (int c = 0; c < n; ++c) {
        double m = a.col(c).cwiseAbs().maxCoeff();
        double s = (m > 0.0 && std::isfinite(m)) ? std::exp2(-std::ilogb(m)) : 1.0;
        a.col(c) *= s;
        col_scale(c) = s;
    }
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
    Eigen::VectorXcd y = lu.solve(b);
    for (int i = 0; i < n; ++i)
        if (!std::isfinite(y(i).real()) || !std::isfinite(y(i).imag())) return false;
    out = col_scale.asDiagonal() * y;
    return true;
}

bool solve_linear_cdd(std::vector<std::vector<CDD>> a, std::vector<CDD> b, std::vector<CDD>& out) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = abs_value(a[static_cast<size_t>(col)][static_cast<size_t>(col)]);
        for (int r = col + 1; r < n; ++r) {
            double v = abs_value(a[static_cast<size_t>(r)][static_cast<size_t>(col)]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best)) return false;
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
        std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        for (int r = col + 1; r < n; ++r) {
            CDD factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int c = col; c < n; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                    factor * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
            b[static_cast<size_t>(r)] = b[static_cast<size_t>(r)] - factor * b[static_cast<size_t>(col)];
        }
    }
    out.assign(static_cast<size_t>(n), CDD(0.0, 0.0));
    for (int r = n - 1; r >= 0; --r) {
        CDD acc = b[static_cast<size_t>(r)];
        for (int c = r + 1; c < n; ++c)
            acc = acc - a[static_cast<size_t>(r)][static_cast<size_t>(c)] * out[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }
    return true;
}

CDD cdd_pow(const CDD& x, int e) {
    CDD acc(1.0, 0.0);
    for (int i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

struct Homotopy {
    const NumSystem& sys;
    Complex gamma;

    // H(x, tau) = (1-tau) gamma (x_i^{d_i} - 1) + tau F(x)
    void eval(const std::vector<Complex>& x, double tau, Eigen::VectorXcd& h) const {
        const int n = sys.nv;
        h.resize(n);
        for (int i = 0; i < n; ++i) {
            Complex start = std::pow(x[static_cast<size_t>(i)], sys.degrees[static_cast<size_t>(i)]) - 1.0;
            h(i) = (1.0 - tau) * gamma * start + tau * sys.f[static_cast<size_t>(i)].eval(x);
        }
    }

    void eval_dtau(const std::vector<Complex>& x, Eigen::VectorXcd& ht) const {
        const int n = sys.nv;
        ht.resize(n);
        for (int i = 0; i < n; ++i) {
            Complex start = std::pow(x[static_cast<size_t>(i)], sys.degrees[static_cast<size_t>(i)]) - 1.0;
            ht(i) = sys.f[static_cast<size_t>(i)].eval(x) - gamma * start;
        }
    }

    void eval_jac(const std::vector<Complex>& x, double tau, Eigen::MatrixXcd& j) const {
        const int n = sys.nv;
        j.setZero(n, n);
        for (int i = 0; i < n; ++i) {
            int d = sys.degrees[static_cast<size_t>(i)];
            j(i, i) += (1.0 - tau) * gamma * static_cast<double>(d) *
                       std::pow(x[static_cast<size_t>(i)], d - 1);
            for (int v = 0; v < n; ++v)
                j(i, v) += tau * sys.jac[static_cast<size_t>(i)][static_cast<size_t>(v)].eval(x);
        }
    }
};

// Same homotopy in double-double precision for the ill-conditioned endgame.
struct HomotopyDD {
    const NumSystem& sys;
    CDD gamma;

    void eval(const std::vector<CDD>& x, const DD& tau, std::vector<CDD>& h) const {
        const int n = sys.nv;
        h.assign(static_cast<size_t>(n), CDD(0.0, 0.0));
        DD one_minus = DD(1.0) - tau;
        for (int i = 0; i < n; ++i) {
            CDD start = cdd_pow(x[static_cast<size_t>(i)], sys.degrees[static_cast<size_t>(i)]) - CDD(1.0, 0.0);
            CDD mix(one_minus * gamma.re, one_minus * gamma.im);
            h[static_cast<size_t>(i)] =
                mix * start + CDD(tau, DD(0.0)) * sys.f_dd[static_cast<size_t>(i)].eval(x);
        }
    }

    void eval_dtau(const std::vector<CDD>& x, std::vector<CDD>& ht) const {
        const int n = sys.nv;
        ht.assign(static_cast<size_t>(n), CDD(0.0, 0.0));
        for (int i = 0; i < n; ++i) {
            CDD start = cdd_pow(x[static_cast<size_t>(i)], sys.degrees[static_cast<size_t>(i)]) - CDD(1.0, 0.0);
            ht[static_cast<size_t>(i)] = sys.f_dd[static_cast<size_t>(i)].eval(x) - gamma * start;
        }
    }

    void eval_jac(const std::vector<CDD>& x, const DD& tau, std::vector<std::vector<CDD>>& j) const {
        const int n = sys.nv;
        j.assign(static_cast<size_t>(n), std::vector<CDD>(static_cast<size_t>(n), CDD(0.0, 0.0)));
        DD one_minus = DD(1.0) - tau;
        for (int i = 0; i < n; ++i) {
            int d = sys.degrees[static_cast<size_t>(i)];
            CDD diag = CDD(one_minus * gamma.re, one_minus * gamma.im) * CDD(static_cast<double>(d), 0.0) *
                       cdd_pow(x[static_cast<size_t>(i)], d - 1);
            j[static_cast<size_t>(i)][static_cast<size_t>(i)] =
                j[static_cast<size_t>(i)][static_cast<size_t>(i)] + diag;
            for (int v = 0; v < n; ++v)
                j[static_cast<size_t>(i)][static_cast<size_t>(v)] =
                    j[static_cast<size_t>(i)][static_cast<size_t>(v)] +
                    CDD(tau, DD(0.0)) * sys.jac_dd[static_cast<size_t>(i)][static_cast<size_t>(v)].eval(x);
        }
    }
};

double inf_norm_cdd(const std::vector<CDD>& x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, abs_value(v));
    return m;
}

bool davidenko_dd(const HomotopyDD& hom, const std::vector<CDD>& x, const DD& tau,
                  std::vector<CDD>& dx) {
    std::vector<std::vector<CDD>> j;
    std::vector<CDD> ht;
    hom.eval_jac(x, tau, j);
    hom.eval_dtau(x, ht);
    for (auto& v : ht) v = -v;
    return solve_linear_cdd(std::move(j), std::move(ht), dx);
}

// tube: accepted corrector step size relative to the coordinate scale.
bool newton_correct_dd(const HomotopyDD& hom, std::vector<CDD>& x, const DD& tau, double tube) {
    std::vector<std::vector<CDD>> j;
    std::vector<CDD> h, step;
    double norm = 1e300;
    for (int iter = 0; iter < 12; ++iter) {
        hom.eval_jac(x, tau, j);
        hom.eval(x, tau, h);
        for (auto& v : h) v = -v;
        if (!solve_linear_cdd(std::move(j), std::move(h), step)) return false;
        norm = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            x[i] = x[i] + step[i];
            norm = std::max(norm, abs_value(step[i]));
        }
        if (norm <= 1e-24 * std::max(1.0, inf_norm_cdd(x))) return true;
    }
    return norm <= tube * std::max(1.0, inf_norm_cdd(x));
}

// Euler predictor + Newton corrector in double-double from tau0 to 1, with
// geometric steps into the endpoint: the paths settle only when 1 - tau is
// comparable to the endpoint conditioning, so the approach is logarithmic.
bool track_tail_dd(const HomotopyDD& hom, std::vector<CDD>& x, double tau0, double dt0,
                   const TrackSettings& settings) {
    DD tau(tau0);
    double dt = dt0;
    int successes = 0;
    int steps = 0;
    std::vector<CDD> dx;
    while (1.0 - tau.value() > 1e-12) {
        if (++steps > 4000) return false;
        double gap = 1.0 - tau.value();
        dt = std::min(dt, 0.5 * gap);
        std::vector<CDD> candidate = x;
        bool ok = davidenko_dd(hom, x, tau, dx);
        if (ok) {
            for (size_t i = 0; i < x.size(); ++i)
                candidate[i] = candidate[i] + CDD(dx[i].re * DD(dt), dx[i].im * DD(dt));
            ok = newton_correct_dd(hom, candidate, tau + DD(dt), 1e-10);
        }
        if (ok && inf_norm_cdd(candidate) > settings.divergence_bound) return false;
        if (ok) {
            tau = tau + DD(dt);
            x = candidate;
            if (++successes >= 3) {
                dt *= 2.0;
                successes = 0;
            }
        } else {
            dt *= 0.5;
            successes = 0;
            if (dt < 1e-15) return false;
        }
    }
    // snap onto the target system
    return newton_correct_dd(hom, x, DD(1.0), 1e-6);
}

// dx/dtau = -Hx^{-1} Ht
bool davidenko(const Homotopy& hom, const std::vector<Complex>& x, double tau,
               std::vector<Complex>& dx) {
    Eigen::MatrixXcd j;
    Eigen::VectorXcd ht, step;
    hom.eval_jac(x, tau, j);
    hom.eval_dtau(x, ht);
    if (!solve_linear(std::move(j), -ht, step)) return false;
    dx.assign(x.size(), Complex(0, 0));
    for (size_t i = 0; i < x.size(); ++i) dx[i] = step(static_cast<int>(i));
    return true;
}

bool newton_correct(const Homotopy& hom, std::vector<Complex>& x, double tau,
                    const TrackSettings& settings) {
    Eigen::MatrixXcd j;
    Eigen::VectorXcd h, step;
    double prev_norm = 1e300;
    for (int iter = 0; iter < settings.corrector_max_iters; ++iter) {
        hom.eval_jac(x, tau, j);
        hom.eval(x, tau, h);
        if (!solve_linear(std::move(j), -h, step)) return false;
        double norm = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            x[i] += step(static_cast<int>(i));
            norm = std::max(norm, std::abs(step(static_cast<int>(i))));
        }
        double scale = std::max(1.0, inf_norm(x));
        if (norm <= settings.corrector_tol * scale) return true;
        // Ill-conditioned endgame: double precision stalls above the nominal
        // tolerance. Accept a stagnating correction inside a loose safety
        // tube; the endpoint polish recovers the digits.
        if (iter > 0 && norm >= 0.5 * prev_norm) return norm <= 1e-5 * scale;
        prev_norm = norm;
    }
    return prev_norm <= 1e-5 * std::max(1.0, inf_norm(x));
}

// Final double-precision Newton plus double-double polish on F alone.
void refine_endpoint(const NumSystem& sys, std::vector<Complex>& x, const TrackSettings& settings) {
    const int n = sys.nv;
    Eigen::MatrixXcd j(n, n);
    Eigen::VectorXcd f(n), step;
    double prev_norm = 1e300;
    for (int iter = 0; iter < 60; ++iter) {
        for (int i = 0; i < n; ++i) {
            f(i) = sys.f[static_cast<size_t>(i)].eval(x);
            for (int v = 0; v < n; ++v)
                j(i, v) = sys.jac[static_cast<size_t>(i)][static_cast<size_t>(v)].eval(x);
        }
        if (!solve_linear(j, -f, step)) break;
        double norm = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            x[i] += step(static_cast<int>(i));
            norm = std::max(norm, std::abs(step(static_cast<int>(i))));
        }
        if (norm <= settings.endpoint_tol * std::max(1.0, inf_norm(x))) break;
        if (iter > 2 && norm >= 0.5 * prev_norm) break;  // double-precision stall
        prev_norm = norm;
    }

    std::vector<CDD> xd(x.size());
    for (size_t i = 0; i < x.size(); ++i) xd[i] = CDD(x[i]);
    std::vector<std::vector<CDD>> jd(static_cast<size_t>(n), std::vector<CDD>(static_cast<size_t>(n)));
    std::vector<CDD> fd(static_cast<size_t>(n)), stepd;
    for (int iter = 0; iter < 14; ++iter) {
        for (int i = 0; i < n; ++i) {
            fd[static_cast<size_t>(i)] = -(sys.f_dd[static_cast<size_t>(i)].eval(xd));
            for (int v = 0; v < n; ++v)
                jd[static_cast<size_t>(i)][static_cast<size_t>(v)] =
                    sys.jac_dd[static_cast<size_t>(i)][static_cast<size_t>(v)].eval(xd);
        }
        if (!solve_linear_cdd(jd, fd, stepd)) break;
        double norm = 0.0;
        for (size_t i = 0; i < xd.size(); ++i) {
            xd[i] = xd[i] + stepd[i];
            norm = std::max(norm, abs_value(stepd[i]));
        }
        if (norm == 0.0) break;
    }
    for (size_t i = 0; i < x.size(); ++i) x[i] = xd[i].value();
}

TrackedPoint track_one_path(const NumSystem& sys, const Homotopy& hom, const HomotopyDD& hom_dd,
                            const std::vector<Complex>& start, const TrackSettings& settings) {
    TrackedPoint result;
    // Double precision carries the path to tau_switch; the remaining stretch
    // is tracked in double-double where the section geometry turns the
    // corrector ill-conditioned.
    const double tau_switch = 0.995;
    std::vector<Complex> x = start;
    double tau = 0.0;
    double dt = settings.initial_step;
    int successes = 0;
    bool double_ok = true;
    std::vector<Complex> dx, mid, k1, k2, k3, k4;

    while (tau < tau_switch) {
        dt = std::min(dt, tau_switch - tau);
        // RK4 predictor on the Davidenko equation
        bool ok = davidenko(hom, x, tau, k1);
        if (ok) {
            mid = x;
            for (size_t i = 0; i < x.size(); ++i) mid[i] += 0.5 * dt * k1[i];
            ok = davidenko(hom, mid, tau + 0.5 * dt, k2);
        }
        if (ok) {
            mid = x;
            for (size_t i = 0; i < x.size(); ++i) mid[i] += 0.5 * dt * k2[i];
            ok = davidenko(hom, mid, tau + 0.5 * dt, k3);
        }
        if (ok) {
            mid = x;
            for (size_t i = 0; i < x.size(); ++i) mid[i] += dt * k3[i];
            ok = davidenko(hom, mid, tau + dt, k4);
        }
        std::vector<Complex> candidate = x;
        if (ok)
            for (size_t i = 0; i < x.size(); ++i)
                candidate[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        if (ok) ok = newton_correct(hom, candidate, tau + dt, settings);

        if (ok && inf_norm(candidate) > settings.divergence_bound) {
            result.coords = candidate;
            result.status = PathStatus::Diverged;
            return result;
        }

        if (ok) {
            tau += dt;
            x = candidate;
            if (++successes >= 4) {
                dt = std::min(dt * 2.0, settings.initial_step);
                successes = 0;
            }
        } else {
            dt *= 0.5;
            successes = 0;
            if (dt < settings.min_step) {
                double_ok = false;
                break;
            }
        }
    }

    std::vector<CDD> xd;
    double tail_from = 0.0;
    double tail_dt = settings.initial_step;
    if (double_ok) {
        xd.reserve(x.size());
        for (const auto& c : x) xd.emplace_back(c);
        tail_from = tau_switch;
        tail_dt = 0.25 * (1.0 - tau_switch);
    } else {
        // retry the whole path at extended precision
        xd.reserve(start.size());
        for (const auto& c : start) xd.emplace_back(c);
    }
    if (!track_tail_dd(hom_dd, xd, tail_from, tail_dt, settings)) {
        result.coords.clear();
        for (const auto& c : xd) result.coords.push_back(c.value());
        result.status = inf_norm(result.coords) > settings.divergence_bound ? PathStatus::Diverged
                                                                            : PathStatus::Failed;
        return result;
    }

    x.clear();
    for (const auto& c : xd) x.push_back(c.value());
    refine_endpoint(sys, x, settings);

    // Dehomogenize; a vanishing last coordinate is a solution at infinity.
    std::vector<CDD> proj(x.size());
    for (size_t i = 0; i < x.size(); ++i) proj[i] = CDD(x[i]);
    const CDD& denom = proj[static_cast<size_t>(sys.affine_vars)];
    result.coords.assign(static_cast<size_t>(sys.affine_vars), Complex(0, 0));
    if (abs_value(denom) < 1e-14 * std::max(1.0, inf_norm(x))) {
        for (int i = 0; i < sys.affine_vars; ++i) result.coords[static_cast<size_t>(i)] = x[static_cast<size_t>(i)];
        result.status = PathStatus::Diverged;
        return result;
    }
    for (int i = 0; i < sys.affine_vars; ++i)
        result.coords[static_cast<size_t>(i)] = (proj[static_cast<size_t>(i)] / denom).value();
    if (inf_norm(result.coords) > settings.divergence_bound) {
        result.status = PathStatus::Diverged;
        return result;
    }
    result.status = PathStatus::Converged;
    return result;
}

std::string render_coords(const std::vector<Complex>& coords) {
    std::ostringstream os;
    char buf[64];
    for (const auto& c : coords) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g;", c.real(), c.imag());
        os << buf;
    }
    return os.str();
}

double relative_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double denom = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
        d = std::max(d, std::abs(a[i] - b[i]) / denom);
    }
    return d;
}

}  // namespace

void TrackSettings::validate() const {
    if (!(initial_step > 0) || !(min_step > 0) || !(corrector_tol > 0) || !(divergence_bound > 0) ||
        !(endpoint_tol > 0) || !(residual_tol > 0) || !(reality_tol > 0) || !(dedup_tol > 0))
        throw input_error("all tracking tolerances must be positive");
    if (min_step >= initial_step) throw input_error("min step must be below the initial step");
    if (corrector_max_iters < 1) throw input_error("corrector needs at least one iteration");
    if (max_attempts < 1) throw input_error("at least one attempt required");
    if (threads < 1) throw input_error("thread count must be positive");
}

std::vector<TrackedPoint> track_total_degree(const std::vector<QPoly>& equations, const VarTablePtr& ring,
                                             const TrackSettings& settings, AttemptStats* stats) {
    settings.validate();
    const int nv = ring->arity();
    if (static_cast<int>(equations.size()) != nv)
        throw input_error("tracker requires a square system");
    if (nv < 1) throw input_error("tracker requires at least one variable");

    Rng rng(settings.seed);
    double angle = 2.0 * M_PI * rng.unit();
    Complex gamma(std::cos(angle), std::sin(angle));
    std::vector<Complex> patch;
    for (int i = 0; i <= nv; ++i) {
        double a = 2.0 * M_PI * rng.unit();
        patch.emplace_back(std::cos(a), std::sin(a));
    }

    NumSystem sys = NumSystem::build_projective(equations, nv, patch);

    long total_paths = 1;
    for (int d : sys.degrees) {
        total_paths *= d;
        if (total_paths > 200000) throw input_error("total-degree path count too large");
    }

    Homotopy hom{sys, gamma};
    HomotopyDD hom_dd{sys, CDD(gamma)};

    std::vector<TrackedPoint> out(static_cast<size_t>(total_paths));
    std::atomic<long> next_path{0};
    auto worker = [&]() {
        while (true) {
            long k = next_path.fetch_add(1);
            if (k >= total_paths) break;
            // mixed-radix digits pick one root of unity per tracking variable
            std::vector<Complex> start(static_cast<size_t>(sys.nv));
            long rest = k;
            for (int i = 0; i < sys.nv; ++i) {
                int d = sys.degrees[static_cast<size_t>(i)];
                long digit = rest % d;
                rest /= d;
                double a = 2.0 * M_PI * static_cast<double>(digit) / d;
                start[static_cast<size_t>(i)] = Complex(std::cos(a), std::sin(a));
            }
            out[static_cast<size_t>(k)] = track_one_path(sys, hom, hom_dd, start, settings);
        }
    };
    int workers = std::max(1, std::min<int>(settings.threads, static_cast<int>(total_paths)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (stats) {
        stats->paths = static_cast<int>(total_paths);
        for (const auto& pt : out) {
            if (pt.status == PathStatus::Converged) ++stats->converged;
            if (pt.status == PathStatus::Diverged) ++stats->diverged;
            if (pt.status == PathStatus::Failed) ++stats->failed;
        }
    }
    return out;
}

namespace {

// Balances section coefficients with power-of-two per-variable scales via an
// alternating least-squares fit of log2|coeff| ~ row + column offsets.
std::map<int, BigRat> equilibration_scales(const PolySystem& system) {
    std::map<int, BigRat> scales;
    const int arity = system.zvars->arity();
    auto patch_pos = system.zvars->find(zvar_name(system.patch));

    struct Obs {
        int section;
        int var;
        double log_mag;
    };
    std::vector<Obs> observations;
    for (size_t s = 0; s < system.sections.size(); ++s) {
        for (const auto& [e, c] : system.sections[s].form.terms()) {
            for (int v = 0; v < arity; ++v) {
                if (e[static_cast<size_t>(v)] != 1) continue;
                double mag = std::fabs(to_double(c));
                if (mag > 0 && std::isfinite(mag))
                    observations.push_back({static_cast<int>(s), v, std::log2(mag)});
            }
        }
    }
    if (observations.empty()) return scales;

    // Fit log2|coeff| ~ row offset - column offset with the patch column
    // frozen at 0; freezing anchors the fit to the chart where the patch
    // coordinate stays 1, which keeps the rewritten quadrics balanced.
    std::vector<double> row(system.sections.size(), 0.0);
    std::vector<double> col(static_cast<size_t>(arity), 0.0);
    std::vector<int> row_n(system.sections.size(), 0);
    std::vector<int> col_n(static_cast<size_t>(arity), 0);
    for (const auto& o : observations) {
        ++row_n[static_cast<size_t>(o.section)];
        ++col_n[static_cast<size_t>(o.var)];
    }
    for (int sweep = 0; sweep < 200; ++sweep) {
        std::vector<double> racc(row.size(), 0.0);
        for (const auto& o : observations)
            racc[static_cast<size_t>(o.section)] += o.log_mag + col[static_cast<size_t>(o.var)];
        for (size_t r = 0; r < row.size(); ++r)
            if (row_n[r]) row[r] = racc[r] / row_n[r];
        std::vector<double> cacc(col.size(), 0.0);
        for (const auto& o : observations)
            cacc[static_cast<size_t>(o.var)] += row[static_cast<size_t>(o.section)] - o.log_mag;
        for (size_t c = 0; c < col.size(); ++c) {
            if (patch_pos && static_cast<int>(c) == static_cast<size_t>(*patch_pos)) continue;
            if (col_n[c]) col[c] = cacc[c] / col_n[c];
        }
        if (patch_pos) col[static_cast<size_t>(*patch_pos)] = 0.0;
    }
    for (int v = 0; v < arity; ++v) {
        if (!col_n[static_cast<size_t>(v)]) continue;
        if (patch_pos && v == *patch_pos) continue;
        long e = std::lround(col[static_cast<size_t>(v)]);
        if (e == 0) continue;
        scales[v] = pow_rat(BigRat(2), e);
    }
    return scales;
}

}  // namespace

PreparedSystem prepare_system(const PolySystem& system, uint64_t seed) {
    PreparedSystem prep;
    prep.scales = equilibration_scales(system);
    prep.scaled = apply_variable_scaling(system, prep.scales);
    reduce_system(prep.scaled);

    const auto& red = *prep.scaled.reduced;
    const int nv = static_cast<int>(red.free_vars.size());
    if (nv < 1) throw input_error("reduced system has no free variables");

    std::vector<QPoly> live;
    for (const auto& q : red.reduced_quadrics) {
        if (q.is_zero()) continue;
        if (q.degree() == 0)
            throw input_error("reduced system is inconsistent (nonzero constant equation)");
        live.push_back(q);
    }
    const int ne = static_cast<int>(live.size());
    if (ne < nv) throw input_error("reduced system is underdetermined: " + std::to_string(ne) +
                                   " equations in " + std::to_string(nv) + " variables");

    if (ne == nv) {
        prep.targets = live;
    } else {
        // Square by exact random combinations; endpoints are later filtered
        // against the full equation set.
        Rng rng(seed ^ 0xa5a5a5a5ULL);
        for (int tries = 0; tries < 16; ++tries) {
            Matrix<BigRat> combo(nv, ne);
            for (int i = 0; i < nv; ++i)
                for (int j = 0; j < ne; ++j) combo.at(i, j) = BigRat(rng.integer(1, 9));
            // full rank needed so no solutions are lost
            Matrix<BigRat> probe = combo;
            bool ok = true;
            {
                int rank = 0;
                int rows = nv, cols = ne, row = 0;
                for (int c = 0; c < cols && row < rows; ++c) {
                    int piv = -1;
                    for (int r = row; r < rows; ++r)
                        if (probe.at(r, c) != 0) {
                            piv = r;
                            break;
                        }
                    if (piv < 0) continue;
                    for (int cc = 0; cc < cols; ++cc) std::swap(probe.at(row, cc), probe.at(piv, cc));
                    for (int r = row + 1; r < rows; ++r) {
                        if (probe.at(r, c) == 0) continue;
                        BigRat f = BigRat(probe.at(r, c) / probe.at(row, c));
                        for (int cc = c; cc < cols; ++cc)
                            probe.at(r, cc) -= BigRat(f * probe.at(row, cc));
                    }
                    ++row;
                    ++rank;
                }
                ok = (rank == nv);
            }
            if (!ok) continue;
            prep.targets.clear();
            for (int i = 0; i < nv; ++i) {
                QPoly acc(red.free_ring);
                for (int j = 0; j < ne; ++j) acc = acc + live[static_cast<size_t>(j)].scale(combo.at(i, j));
                prep.targets.push_back(std::move(acc));
            }
            break;
        }
        if (prep.targets.empty()) throw internal_error("failed to draw a full-rank squaring matrix");
        prep.notes.push_back("squared " + std::to_string(ne) + " equations to " + std::to_string(nv) +
                             " random exact combinations");
    }

    prep.bezout = 1;
    for (const auto& t : prep.targets) prep.bezout *= std::max(1, t.degree());
    return prep;
}

namespace {

// Residual and lifting machinery over a prepared system.
struct Lifter {
    const PreparedSystem& prep;
    int arity;
    int patch_id = -1;
    std::vector<int> free_ids;
    // affine expression per eliminated variable: constant + coeffs over free
    struct Affine {
        CDD constant;
        std::vector<std::pair<int, CDD>> coeffs;  // (free position, coeff)
    };
    std::map<int, Affine> affine;
    std::vector<DDPoly> full_equations;  // quadrics + sections over full arity
    std::vector<CDD> unscale;            // w -> z factors per variable

    explicit Lifter(const PreparedSystem& p) : prep(p) {
        const auto& sys = prep.scaled;
        const auto& red = *sys.reduced;
        arity = sys.zvars->arity();
        patch_id = *sys.zvars->find(zvar_name(sys.patch));
        free_ids = red.free_vars;
        std::map<int, int> free_pos;
        for (size_t i = 0; i < free_ids.size(); ++i) free_pos[free_ids[i]] = static_cast<int>(i);

        for (const auto& [var, expr] : red.eliminated) {
            Affine aff;
            aff.constant = CDD(0.0, 0.0);
            for (const auto& [e, c] : expr.terms()) {
                DD limb = dd_from_rat(c);
                int pos = -1;
                for (size_t i = 0; i < e.size(); ++i)
                    if (e[i] == 1) pos = static_cast<int>(i);
                if (total_degree(e) == 0)
                    aff.constant = CDD(limb, DD(0.0));
                else
                    aff.coeffs.emplace_back(pos, CDD(limb, DD(0.0)));
            }
            affine[var] = std::move(aff);
        }

        auto add_full = [&](const QPoly& q) {
            NumPoly unused;
            DDPoly dd;
            convert_poly(q, unused, dd);
            if (!dd.terms.empty()) full_equations.push_back(std::move(dd));
        };
        for (const auto& q : sys.quadrics) add_full(q);
        for (const auto& s : sys.sections) add_full(s.form);

        unscale.assign(static_cast<size_t>(arity), CDD(1.0, 0.0));
        for (const auto& [id, scale] : prep.scales)
            unscale[static_cast<size_t>(id)] = CDD(dd_from_rat(scale), DD(0.0));
    }

    // Full scaled-chart vector from free coordinates.
    std::vector<CDD> full_point(const std::vector<Complex>& coords) const {
        std::vector<CDD> full(static_cast<size_t>(arity), CDD(0.0, 0.0));
        full[static_cast<size_t>(patch_id)] = CDD(1.0, 0.0);
        for (size_t i = 0; i < free_ids.size(); ++i)
            full[static_cast<size_t>(free_ids[i])] = CDD(coords[i]);
        for (const auto& [var, aff] : affine) {
            CDD acc = aff.constant;
            for (const auto& [pos, c] : aff.coeffs)
                acc = acc + c * CDD(coords[static_cast<size_t>(pos)]);
            full[static_cast<size_t>(var)] = acc;
        }
        return full;
    }

    double residual(const std::vector<CDD>& full) const {
        double worst = 0.0;
        for (const auto& eq : full_equations) {
            double num = abs_value(eq.eval(full));
            double den = eq.eval_magnitude(full);
            worst = std::max(worst, num / std::max(den, 1e-300));
        }
        return worst;
    }

    // Original-chart coordinates z = scale * w.
    std::vector<Complex> lift(const std::vector<CDD>& full) const {
        std::vector<Complex> out(static_cast<size_t>(arity));
        for (int v = 0; v < arity; ++v)
            out[static_cast<size_t>(v)] = (full[static_cast<size_t>(v)] * unscale[static_cast<size_t>(v)]).value();
        return out;
    }
};

}  // namespace

RealityCounts classify_real(std::vector<Solution>& solutions, double reality_tol) {
    RealityCounts counts;
    for (auto& sol : solutions) {
        double worst = 0.0;
        for (const auto& c : sol.coords) worst = std::max(worst, std::fabs(c.imag()));
        sol.is_real = worst < reality_tol;
        sol.conjugate_partner = -1;
        if (sol.is_real) ++counts.real;
    }
    const double pair_tol = 1e-6;
    for (size_t i = 0; i < solutions.size(); ++i) {
        if (solutions[i].is_real || solutions[i].conjugate_partner >= 0) continue;
        std::vector<Complex> conj(solutions[i].coords);
        for (auto& c : conj) c = std::conj(c);
        int best = -1;
        double best_dist = pair_tol;
        for (size_t j = 0; j < solutions.size(); ++j) {
            if (j == i || solutions[j].is_real || solutions[j].conjugate_partner >= 0) continue;
            double d = relative_distance(conj, solutions[j].coords);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(j);
            }
        }
        if (best >= 0) {
            solutions[i].conjugate_partner = best;
            solutions[static_cast<size_t>(best)].conjugate_partner = static_cast<int>(i);
            ++counts.conjugate_pairs;
        } else {
            ++counts.suspicious;
        }
    }
    return counts;
}

SolveReport verify_solutions(const PreparedSystem& prepared, std::vector<Solution>& solutions,
                             const TrackSettings& settings) {
    SolveReport report;
    report.shape = prepared.scaled.shape;
    report.settings = settings;
    report.delta = delta_chains(prepared.scaled.shape);
    report.bezout = prepared.bezout;

    Lifter lifter(prepared);
    std::vector<double> residuals;
    for (auto& sol : solutions) {
        auto full = lifter.full_point(sol.coords);
        sol.residual = lifter.residual(full);
        sol.lifted = lifter.lift(full);
        residuals.push_back(sol.residual);
    }

    // pairwise distinctness of the full (scaled-chart) vectors
    for (size_t i = 0; i < solutions.size(); ++i) {
        auto fi = lifter.full_point(solutions[i].coords);
        std::vector<Complex> vi(fi.size());
        for (size_t k = 0; k < fi.size(); ++k) vi[k] = fi[k].value();
        for (size_t j = i + 1; j < solutions.size(); ++j) {
            auto fj = lifter.full_point(solutions[j].coords);
            std::vector<Complex> vj(fj.size());
            for (size_t k = 0; k < fj.size(); ++k) vj[k] = fj[k].value();
            if (relative_distance(vi, vj) <= settings.dedup_tol)
                report.warnings.push_back("solutions " + std::to_string(i) + " and " + std::to_string(j) +
                                          " coincide after lifting");
        }
    }

    auto counts = classify_real(solutions, settings.reality_tol);
    report.distinct = 0;
    report.real_count = 0;
    for (const auto& sol : solutions) {
        if (sol.status != PathStatus::Converged || sol.residual > settings.residual_tol) continue;
        ++report.distinct;
        if (sol.is_real) ++report.real_count;
    }
    report.conjugate_pairs = counts.conjugate_pairs;
    report.suspicious_unpaired = counts.suspicious;
    report.conjugation_closed = counts.suspicious == 0;
    report.counts_agree_with_delta = BigInt(report.distinct) == report.delta;

    if (!residuals.empty()) {
        std::sort(residuals.begin(), residuals.end());
        report.residual_max = residuals.back();
        report.residual_median = residuals[residuals.size() / 2];
    }
    for (const auto& w : prepared.scaled.warnings) report.warnings.push_back(w);
    for (const auto& n : prepared.notes) report.warnings.push_back(n);
    return report;
}

SolveOutcome solve_system(const PolySystem& system, const TrackSettings& settings) {
    settings.validate();
    auto t0 = std::chrono::steady_clock::now();

    SolveOutcome outcome{prepare_system(system, settings.seed), {}, {}};
    auto& prep = outcome.prepared;
    const auto& red = *prep.scaled.reduced;
    BigInt delta = delta_chains(system.shape);

    Lifter lifter(prep);
    std::vector<Solution> distinct;
    std::vector<AttemptStats> attempts;
    int converged_paths = 0;

    for (int attempt = 0; attempt < settings.max_attempts; ++attempt) {
        TrackSettings attempt_settings = settings;
        attempt_settings.seed = settings.seed + 1000003ULL * static_cast<uint64_t>(attempt);
        AttemptStats stats;
        auto endpoints = track_total_degree(prep.targets, red.free_ring, attempt_settings, &stats);
        attempts.push_back(stats);
        converged_paths += stats.converged;

        for (auto& pt : endpoints) {
            if (pt.status != PathStatus::Converged) continue;
            auto full = lifter.full_point(pt.coords);
            double res = lifter.residual(full);
            if (res > settings.residual_tol) continue;
            bool duplicate = false;
            for (const auto& known : distinct)
                if (relative_distance(known.coords, pt.coords) <= settings.dedup_tol) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            Solution sol;
            sol.coords = pt.coords;
            sol.status = PathStatus::Converged;
            distinct.push_back(std::move(sol));
        }
        if (BigInt(static_cast<long>(distinct.size())) >= delta) break;
    }

    std::sort(distinct.begin(), distinct.end(), [](const Solution& a, const Solution& b) {
        return render_coords(a.coords) < render_coords(b.coords);
    });

    outcome.solutions = std::move(distinct);
    outcome.report = verify_solutions(prep, outcome.solutions, settings);
    outcome.report.attempts = attempts;
    outcome.report.converged_paths = converged_paths;
    if (!(BigInt(outcome.report.distinct) == delta))
        outcome.report.warnings.push_back("distinct solution count " + std::to_string(outcome.report.distinct) +
                                          " differs from expected degree " + delta.get_str());
    if (BigInt(outcome.report.distinct) > delta)
        outcome.report.warnings.push_back("count exceeds the degree bound; endpoints may be duplicated");
    outcome.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return outcome;
}

std::pair<std::vector<Solution>, SolveReport> solve_homotopy(const PolySystem& system,
                                                             const TrackSettings& settings) {
    auto outcome = solve_system(system, settings);
    return {std::move(outcome.solutions), std::move(outcome.report)};
}

Certificate certify_prepared(const PreparedSystem& prepared, const std::vector<Solution>& solutions,
                             const TrackSettings& settings, int keep_var) {
    const auto& red = *prepared.scaled.reduced;
    const int nv = static_cast<int>(red.free_vars.size());
    if (keep_var < 0) keep_var = nv - 1;
    if (keep_var >= nv) throw input_error("projection variable out of range");

    std::vector<QPoly> quadrics;
    for (const auto& q : red.reduced_quadrics)
        if (!q.is_zero()) quadrics.push_back(q);

    std::vector<std::vector<Complex>> coords;
    int real_count = 0;
    for (const auto& sol : solutions) {
        coords.push_back(sol.coords);
        if (sol.is_real) ++real_count;
    }
    return certify_eliminant(quadrics, red.free_ring, keep_var, coords, real_count, settings.seed);
}

namespace {

nlohmann::ordered_json complex_json(const Complex& c) {
    return nlohmann::ordered_json::array({c.real(), c.imag()});
}

}  // namespace

std::string report_to_json(const SolveReport& report, const std::vector<Solution>& solutions,
                           bool include_timing) {
    nlohmann::ordered_json root;
    root["shape"] = {{"m", report.shape.m}, {"p", report.shape.p}, {"q", report.shape.q}};
    root["delta"] = report.delta.get_str();
    root["bezout"] = report.bezout.get_str();
    root["schedule"] = report.schedule;

    nlohmann::ordered_json settings;
    settings["initial_step"] = report.settings.initial_step;
    settings["min_step"] = report.settings.min_step;
    settings["corrector_tol"] = report.settings.corrector_tol;
    settings["corrector_max_iters"] = report.settings.corrector_max_iters;
    settings["divergence_bound"] = report.settings.divergence_bound;
    settings["endpoint_tol"] = report.settings.endpoint_tol;
    settings["seed"] = report.settings.seed;
    settings["residual_tol"] = report.settings.residual_tol;
    settings["reality_tol"] = report.settings.reality_tol;
    settings["dedup_tol"] = report.settings.dedup_tol;
    settings["max_attempts"] = report.settings.max_attempts;
    settings["threads"] = report.settings.threads;
    root["settings"] = settings;

    nlohmann::ordered_json attempts = nlohmann::ordered_json::array();
    for (const auto& a : report.attempts)
        attempts.push_back({{"paths", a.paths},
                            {"converged", a.converged},
                            {"diverged", a.diverged},
                            {"failed", a.failed}});
    root["attempts"] = attempts;

    root["counts"] = {{"converged_paths", report.converged_paths},
                      {"distinct", report.distinct},
                      {"real", report.real_count},
                      {"conjugate_pairs", report.conjugate_pairs},
                      {"suspicious_unpaired", report.suspicious_unpaired}};
    root["residuals"] = {{"max", report.residual_max}, {"median", report.residual_median}};
    root["checks"] = {{"counts_agree_with_delta", report.counts_agree_with_delta},
                      {"conjugation_closed", report.conjugation_closed},
                      {"certificate_agrees", report.certificate_agrees}};

    nlohmann::ordered_json sols = nlohmann::ordered_json::array();
    for (const auto& sol : solutions) {
        nlohmann::ordered_json s;
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (const auto& c : sol.coords) coords.push_back(complex_json(c));
        s["coords"] = coords;
        nlohmann::ordered_json lifted = nlohmann::ordered_json::array();
        for (const auto& c : sol.lifted) lifted.push_back(complex_json(c));
        s["lifted"] = lifted;
        s["residual"] = sol.residual;
        s["status"] = sol.status == PathStatus::Converged
                          ? "converged"
                          : (sol.status == PathStatus::Diverged ? "diverged" : "failed");
        s["is_real"] = sol.is_real;
        s["conjugate_partner"] = sol.conjugate_partner;
        sols.push_back(s);
    }
    root["solutions"] = sols;

    if (report.certificate) {
        const auto& cert = *report.certificate;
        nlohmann::ordered_json c;
        c["variable"] = cert.variable;
        c["degree"] = cert.degree;
        c["sturm_real_count"] = cert.sturm_count;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int k = 0; k <= cert.eliminant.degree(); ++k) coeffs.push_back(to_string(cert.eliminant.coeff(k)));
        c["eliminant_coefficients"] = coeffs;
        c["numeric_compared"] = cert.numeric_compared;
        c["agrees_with_numeric"] = cert.agrees_with_numeric;
        c["retries"] = cert.retries;
        c["notes"] = cert.notes;
        root["certificate"] = c;
    } else {
        root["certificate"] = nullptr;
    }

    root["warnings"] = report.warnings;
    if (include_timing) root["elapsed_seconds"] = report.elapsed_seconds;
    return root.dump(2);
}

}  // namespace qgr
