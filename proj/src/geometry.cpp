#include "qgr/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

namespace {

int subset_weight(const std::vector<int>& alpha) {
    int w = 0;
    for (size_t i = 0; i < alpha.size(); ++i) w += alpha[i] - static_cast<int>(i) - 1;
    return w;
}

std::vector<int> complement_of(const std::vector<int>& alpha, int n) {
    std::vector<int> comp;
    size_t j = 0;
    for (int v = 1; v <= n; ++v) {
        if (j < alpha.size() && alpha[j] == v) {
            ++j;
            continue;
        }
        comp.push_back(v);
    }
    return comp;
}

int rank_of_exact(const Matrix<BigRat>& m) {
    Matrix<BigRat> a = m;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < a.rows(); ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(pivot, c));
        for (int r = row + 1; r < a.rows(); ++r) {
            if (a.at(r, col) == 0) continue;
            BigRat factor = BigRat(a.at(r, col) / a.at(row, col));
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= BigRat(factor * a.at(row, c));
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

Matrix<BigRat> OsculatingPlane::evaluate(const BigRat& s, const BigRat& t) const {
    Matrix<BigRat> out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = rows.at(r, c).evaluate(s, t);
    return out;
}

OsculatingPlane osculating_matrix(int m, int n) {
    if (m < 1 || m >= n) throw input_error("osculating plane requires 1 <= m < n");
    OsculatingPlane plane;
    plane.m = m;
    plane.n = n;
    plane.rows = Matrix<BinaryForm>(m, n);
    for (int c = 0; c < n; ++c) plane.rows.at(0, c) = BinaryForm::monomial(BigRat(1), n - 1 - c, n - 1);
    for (int r = 1; r < m; ++r)
        for (int c = 0; c < n; ++c) plane.rows.at(r, c) = plane.rows.at(r - 1, c).derivative_t();
    return plane;
}

BigRat l_minor(int m, int n, const std::vector<int>& alpha) {
    const int p = n - m;
    if (static_cast<int>(alpha.size()) != p) throw input_error("alpha must be a (n-m)-subset");
    int prev = 0;
    for (int v : alpha) {
        if (v <= prev || v > n) throw input_error("alpha must increase strictly within 1..n");
        prev = v;
    }
    auto base = osculating_matrix(m, n).evaluate(BigRat(1), BigRat(1));
    auto comp = complement_of(alpha, n);
    Matrix<BigRat> sub(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sub.at(r, c) = base.at(r, comp[static_cast<size_t>(c)] - 1);
    BigRat minor = det(sub, BigRat(1));
    return subset_weight(alpha) % 2 == 0 ? minor : BigRat(-minor);
}

namespace {

// l(alpha) for every p-subset at once.
std::map<std::vector<int>, BigRat> all_l_minors(int m, int n) {
    auto base = osculating_matrix(m, n).evaluate(BigRat(1), BigRat(1));
    auto minors = all_maximal_minors(base, BigRat(1));
    std::map<std::vector<int>, BigRat> out;
    for (auto& [cols, minor] : minors) {
        // cols is the m-subset of columns used by the minor; key by complement.
        std::vector<int> alpha = complement_of(cols, n);
        int w = subset_weight(alpha);
        out[alpha] = (w % 2 == 0) ? minor : BigRat(-minor);
    }
    return out;
}

}  // namespace

LinearSection lambda_form(const ProblemShape& shape, const BigRat& s, const BigRat& t) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    if (s == 0 && t == 0) throw input_error("pencil point (0,0) is not a point of the line");
    auto ring = zvar_table(shape);
    auto lvals = all_l_minors(shape.m, shape.n());
    const int N = shape.N();

    LinearSection section;
    section.kind = LinearSection::Kind::Osculating;
    section.s = s;
    section.t = t;
    QPoly form(ring);
    int id = 0;
    for (const auto& x : enumerate_indices(shape)) {
        int r = rank(shape, x);
        BigRat coeff = BigRat(lvals.at(x.alpha) * pow_rat(s, r) * pow_rat(t, N - r));
        if (coeff != 0) {
            Exponents e(static_cast<size_t>(ring->arity()), 0);
            e[static_cast<size_t>(id)] = 1;
            form.add_term(e, coeff);
        }
        ++id;
    }
    section.form = form;
    return section;
}

QPoly lambda_form_symbolic(const ProblemShape& shape, const VarTablePtr& ring) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    auto lvals = all_l_minors(shape.m, shape.n());
    auto s_pos = ring->find("s");
    auto t_pos = ring->find("t");
    if (!s_pos || !t_pos) throw input_error("ring must contain s and t");
    const int N = shape.N();
    QPoly form(ring);
    for (const auto& x : enumerate_indices(shape)) {
        auto z_pos = ring->find(zvar_name(x));
        if (!z_pos) throw input_error("ring is missing variable " + zvar_name(x));
        int r = rank(shape, x);
        Exponents e(static_cast<size_t>(ring->arity()), 0);
        e[static_cast<size_t>(*z_pos)] = 1;
        e[static_cast<size_t>(*s_pos)] = r;
        e[static_cast<size_t>(*t_pos)] = N - r;
        form.add_term(e, lvals.at(x.alpha));
    }
    return form;
}

LinearSection section_from_plane(const ProblemShape& shape, const Matrix<BigRat>& plane, const BigRat& s,
                                 const BigRat& t) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    if (plane.rows() != shape.m || plane.cols() != shape.n())
        throw input_error("plane matrix must be m x n");
    if (s == 0 && t == 0) throw input_error("section point (0,0) is not a point of the line");
    if (rank_of_exact(plane) != shape.m)
        throw degenerate_plane_error("plane matrix is rank deficient");

    auto minors = all_maximal_minors(plane, BigRat(1));
    auto ring = zvar_table(shape);
    const int pm = shape.p * shape.m;

    LinearSection section;
    section.kind = LinearSection::Kind::General;
    section.s = s;
    section.t = t;
    QPoly form(ring);
    int id = 0;
    for (const auto& x : enumerate_indices(shape)) {
        auto comp = complement_of(x.alpha, shape.n());
        const BigRat& minor = minors.at(comp);
        BigRat coeff = BigRat(minor * pow_rat(s, x.level) * pow_rat(t, shape.q - x.level));
        if ((pm + subset_weight(x.alpha)) % 2 != 0) coeff = -coeff;
        if (coeff != 0) {
            Exponents e(static_cast<size_t>(ring->arity()), 0);
            e[static_cast<size_t>(id)] = 1;
            form.add_term(e, coeff);
        }
        ++id;
    }
    section.form = form;
    return section;
}

namespace {

std::vector<std::vector<int>> subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
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

std::vector<QuantumIndex> enumerate_pnq(int p, int n, int q) {
    std::vector<QuantumIndex> out;
    for (int a = 0; a <= q; ++a)
        for (auto& s : subsets_of(n, p)) out.push_back(QuantumIndex{s, a});
    return out;
}

// Positive-leading-coefficient normalization for canonical comparison.
void normalize_sign(QPoly& poly) {
    if (poly.is_zero()) return;
    if (poly.terms().begin()->second < 0) poly = -poly;
}

}  // namespace

std::vector<QPoly> quantum_pluecker_relations(int p, int n, int q) {
    if (p < 1 || n <= p) throw input_error("relations require 1 <= p < n");
    if (q < 0) throw input_error("relations require q >= 0");
    if (p == 1) return {};

    std::vector<std::string> names;
    auto indices = enumerate_pnq(p, n, q);
    names.reserve(indices.size());
    for (const auto& x : indices) names.push_back(zvar_name(x));
    auto ring = make_vars(names);

    std::map<std::vector<int>, int> subset_pos;
    {
        int pos = 0;
        for (auto& s : subsets_of(n, p)) subset_pos[s] = pos++;
    }
    const int nsub = static_cast<int>(subset_pos.size());
    auto var_id = [&](int subset, int level) { return level * nsub + subset; };

    std::set<std::string> seen;
    std::vector<QPoly> out;
    for (const auto& gamma : subsets_of(n, p - 1)) {
        for (const auto& beta : subsets_of(n, p + 1)) {
            // One syzygy: sum_k (-1)^(k-1) [gamma, beta_k][beta \ beta_k],
            // expanded over quantum levels; coefficient of s^w t^(2q-w)
            // is one quadric.
            std::vector<QPoly> quadrics(static_cast<size_t>(2 * q + 1), QPoly(ring));
            for (size_t k = 0; k < beta.size(); ++k) {
                int bk = beta[k];
                if (std::binary_search(gamma.begin(), gamma.end(), bk)) continue;
                std::vector<int> first = gamma;
                first.insert(std::lower_bound(first.begin(), first.end(), bk), bk);
                int inversions = static_cast<int>(gamma.end() -
                                                  std::upper_bound(gamma.begin(), gamma.end(), bk));
                std::vector<int> second;
                for (size_t j = 0; j < beta.size(); ++j)
                    if (j != k) second.push_back(beta[j]);
                int sign = ((static_cast<int>(k) + inversions) % 2 == 0) ? 1 : -1;
                int fid = subset_pos.at(first);
                int sid = subset_pos.at(second);
                for (int a = 0; a <= q; ++a) {
                    for (int b = 0; b <= q; ++b) {
                        Exponents e(static_cast<size_t>(ring->arity()), 0);
                        e[static_cast<size_t>(var_id(fid, a))] += 1;
                        e[static_cast<size_t>(var_id(sid, b))] += 1;
                        quadrics[static_cast<size_t>(a + b)].add_term(e, BigRat(sign));
                    }
                }
            }
            for (auto& quadric : quadrics) {
                if (quadric.is_zero()) continue;
                normalize_sign(quadric);
                if (seen.insert(quadric.to_string()).second) out.push_back(quadric);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const QPoly& a, const QPoly& b) { return a.to_string() < b.to_string(); });
    return out;
}

std::vector<QPoly> quantum_pluecker_relations(const ProblemShape& shape) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    return quantum_pluecker_relations(shape.p, shape.n(), shape.q);
}

PlueckerVector<BigRat> pi_map(const ProblemShape& shape, const BigRat& A, const BigRat& B,
                              const PlueckerVector<BigRat>& x) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    if (shape.q < 1) throw input_error("boundary map requires q >= 1");
    if (A == 0 && B == 0) throw input_error("boundary map requires (A,B) != (0,0)");
    ProblemShape lower = ProblemShape::create(shape.m, shape.p, shape.q - 1);
    if (!(x.shape == lower)) throw input_error("input vector must have quantum degree q-1");
    if (x.is_zero()) throw input_error("input vector must be nonzero");

    PlueckerVector<BigRat> out;
    out.shape = shape;
    for (const auto& idx : enumerate_indices(shape)) {
        BigRat value(0);
        if (idx.level <= shape.q - 1) value += BigRat(A * x.at(QuantumIndex{idx.alpha, idx.level}));
        if (idx.level >= 1) value -= BigRat(B * x.at(QuantumIndex{idx.alpha, idx.level - 1}));
        value.canonicalize();
        if (value != 0) out.coords[idx] = value;
    }
    return out;
}

std::vector<BigRat> t_schedule(int count, const ScheduleSpec& spec) {
    if (count < 1) throw input_error("schedule length must be positive");
    std::vector<BigRat> out;
    switch (spec.kind) {
        case ScheduleSpec::Kind::Power: {
            if (spec.exponent < 1) throw input_error("power schedule requires exponent >= 1");
            for (int i = 1; i <= count; ++i)
                out.push_back(pow_rat(BigRat(i), spec.exponent));
            break;
        }
        case ScheduleSpec::Kind::Geometric: {
            if (spec.ratio <= 1) throw input_error("geometric schedule requires ratio > 1");
            BigRat v(1);
            for (int i = 0; i < count; ++i) {
                out.push_back(v);
                v *= spec.ratio;
            }
            break;
        }
        case ScheduleSpec::Kind::Explicit: {
            out = spec.values;
            if (static_cast<int>(out.size()) != count)
                throw input_error("explicit schedule has " + std::to_string(out.size()) + " values, need " +
                                  std::to_string(count));
            break;
        }
    }
    std::set<std::string> distinct;
    for (const auto& v : out) {
        if (v <= 0) throw input_error("schedule values must be positive");
        if (!distinct.insert(to_string(v)).second) throw input_error("schedule values must be distinct");
    }
    return out;
}

namespace {

QuantumIndex top_index(const ProblemShape& shape) {
    QuantumIndex top;
    top.level = shape.q;
    for (int v = shape.m + 1; v <= shape.n(); ++v) top.alpha.push_back(v);
    return top;
}

}  // namespace

PolySystem build_system(const ProblemShape& shape, const SectionsSpec& sections,
                        std::optional<QuantumIndex> patch) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    PolySystem system;
    system.shape = shape;
    system.zvars = zvar_table(shape);
    system.patch = patch.value_or(top_index(shape));
    validate_index(shape, system.patch);

    system.quadrics = quantum_pluecker_relations(shape);

    if (const auto* osc = std::get_if<OsculatingSections>(&sections)) {
        std::set<std::string> distinct;
        for (const auto& t : osc->schedule) {
            if (t <= 0) throw input_error("osculating parameters must be positive");
            if (!distinct.insert(to_string(t)).second)
                throw input_error("osculating parameters must be distinct, repeated " + to_string(t));
        }
        for (const auto& t : osc->schedule) system.sections.push_back(lambda_form(shape, BigRat(1), t));
    } else {
        const auto& gen = std::get<GeneralSections>(sections);
        for (const auto& entry : gen.entries)
            system.sections.push_back(section_from_plane(shape, entry.plane, entry.s, entry.t));
    }
    if (static_cast<int>(system.sections.size()) > shape.N())
        throw input_error("more sections than the dimension " + std::to_string(shape.N()) +
                          " of the map space");

    reduce_system(system);
    return system;
}

void reduce_system(PolySystem& system) {
    const auto& ring = system.zvars;
    const int arity = ring->arity();
    const int patch_id = static_cast<int>(
        std::distance(ring->names().begin(),
                      std::find(ring->names().begin(), ring->names().end(), zvar_name(system.patch))));
    if (patch_id == arity) throw internal_error("patch variable missing from ring");

    // Affine columns: every coordinate except the patch, canonical order.
    std::vector<int> columns;
    for (int i = 0; i < arity; ++i)
        if (i != patch_id) columns.push_back(i);
    std::map<int, int> column_of;
    for (size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = static_cast<int>(c);

    const int ns = static_cast<int>(system.sections.size());
    const int nc = static_cast<int>(columns.size());
    // Row layout: coefficients on affine columns, then the constant term
    // contributed by the patch coordinate.
    std::vector<std::vector<BigRat>> rows(static_cast<size_t>(ns),
                                          std::vector<BigRat>(static_cast<size_t>(nc) + 1, BigRat(0)));
    for (int r = 0; r < ns; ++r) {
        for (const auto& [e, c] : system.sections[static_cast<size_t>(r)].form.terms()) {
            int var = -1;
            for (int i = 0; i < arity; ++i)
                if (e[static_cast<size_t>(i)] == 1) {
                    var = i;
                    break;
                }
            if (var < 0 || total_degree(e) != 1)
                throw internal_error("section form is not linear");
            if (var == patch_id)
                rows[static_cast<size_t>(r)][static_cast<size_t>(nc)] += c;
            else
                rows[static_cast<size_t>(r)][static_cast<size_t>(column_of.at(var))] += c;
        }
    }

    // Gauss-Jordan with the largest-absolute-value exact pivot; ties broken
    // by smaller column then smaller row for reproducibility.
    std::vector<bool> row_used(static_cast<size_t>(ns), false);
    std::vector<bool> col_used(static_cast<size_t>(nc), false);
    std::vector<std::pair<int, int>> pivots;
    while (true) {
        int best_r = -1, best_c = -1;
        BigRat best_abs(0);
        for (int c = 0; c < nc; ++c) {
            if (col_used[static_cast<size_t>(c)]) continue;
            for (int r = 0; r < ns; ++r) {
                if (row_used[static_cast<size_t>(r)]) continue;
                BigRat a = abs_rat(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
                if (a > best_abs) {
                    best_abs = a;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (best_r < 0) break;
        row_used[static_cast<size_t>(best_r)] = true;
        col_used[static_cast<size_t>(best_c)] = true;
        pivots.emplace_back(best_r, best_c);
        auto& prow = rows[static_cast<size_t>(best_r)];
        BigRat inv = BigRat(1 / prow[static_cast<size_t>(best_c)]);
        for (auto& v : prow) v = BigRat(v * inv);
        for (int r = 0; r < ns; ++r) {
            if (r == best_r) continue;
            BigRat factor = rows[static_cast<size_t>(r)][static_cast<size_t>(best_c)];
            if (factor == 0) continue;
            for (int c = 0; c <= nc; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    BigRat(factor * prow[static_cast<size_t>(c)]);
        }
    }

    Reduction red;
    red.linear_rank = static_cast<int>(pivots.size());
    if (red.linear_rank < ns)
        system.warnings.push_back("degenerate configuration: section system has rank " +
                                  std::to_string(red.linear_rank) + " < " + std::to_string(ns));

    std::vector<bool> is_pivot_col(static_cast<size_t>(nc), false);
    for (auto& [r, c] : pivots) is_pivot_col[static_cast<size_t>(c)] = true;
    std::vector<std::string> free_names;
    for (int c = 0; c < nc; ++c)
        if (!is_pivot_col[static_cast<size_t>(c)]) {
            red.free_vars.push_back(columns[static_cast<size_t>(c)]);
            free_names.push_back(ring->name(columns[static_cast<size_t>(c)]));
        }
    red.free_ring = make_vars(free_names);
    std::map<int, int> free_pos;
    for (size_t i = 0; i < red.free_vars.size(); ++i) free_pos[red.free_vars[i]] = static_cast<int>(i);

    for (auto& [r, c] : pivots) {
        // pivot column variable = -(constant + sum over free columns)
        QPoly expr(red.free_ring);
        const auto& row = rows[static_cast<size_t>(r)];
        if (row[static_cast<size_t>(nc)] != 0)
            expr.add_term(Exponents(free_names.size(), 0), BigRat(-row[static_cast<size_t>(nc)]));
        for (int j = 0; j < nc; ++j) {
            if (j == c || row[static_cast<size_t>(j)] == 0) continue;
            if (is_pivot_col[static_cast<size_t>(j)] && row[static_cast<size_t>(j)] != 0)
                throw internal_error("Gauss-Jordan left a pivot column entry");
            Exponents e(free_names.size(), 0);
            e[static_cast<size_t>(free_pos.at(columns[static_cast<size_t>(j)]))] = 1;
            expr.add_term(e, BigRat(-row[static_cast<size_t>(j)]));
        }
        red.eliminated[columns[static_cast<size_t>(c)]] = expr;
    }

    // Rewrite the quadrics over the free ring.
    std::map<int, QPoly> replace;
    replace[patch_id] = QPoly::constant(red.free_ring, BigRat(1));
    for (const auto& [var, expr] : red.eliminated) replace[var] = expr;
    for (const auto& quadric : system.quadrics)
        red.reduced_quadrics.push_back(quadric.substitute(replace, red.free_ring));

    system.reduced = std::move(red);
}

PolySystem apply_variable_scaling(const PolySystem& system, const std::map<int, BigRat>& scales) {
    const int arity = system.zvars->arity();
    std::vector<BigRat> scale(static_cast<size_t>(arity), BigRat(1));
    for (const auto& [id, v] : scales) {
        if (id < 0 || id >= arity) throw input_error("scale index out of range");
        if (v <= 0) throw input_error("variable scales must be positive");
        scale[static_cast<size_t>(id)] = v;
    }
    auto patch_pos = system.zvars->find(zvar_name(system.patch));
    if (patch_pos && scale[static_cast<size_t>(*patch_pos)] != 1)
        throw input_error("patch variable must keep scale 1");

    auto rescale = [&](const QPoly& poly) {
        QPoly out(poly.vars());
        for (const auto& [e, c] : poly.terms()) {
            BigRat factor(1);
            for (size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) factor *= scale[i];
            out.add_term(e, BigRat(c * factor));
        }
        return out;
    };

    PolySystem out;
    out.shape = system.shape;
    out.zvars = system.zvars;
    out.patch = system.patch;
    out.warnings = system.warnings;
    for (const auto& quadric : system.quadrics) out.quadrics.push_back(rescale(quadric));
    for (const auto& section : system.sections) {
        LinearSection s = section;
        s.form = rescale(section.form);
        out.sections.push_back(std::move(s));
    }
    return out;
}

QPoly truncate_to_index(const QPoly& form, const ProblemShape& shape, const QuantumIndex& cap) {
    validate_index(shape, cap);
    auto ring = form.vars();
    std::vector<bool> keep(static_cast<size_t>(ring->arity()), true);
    for (const auto& x : enumerate_indices(shape)) {
        auto pos = ring->find(zvar_name(x));
        if (pos) keep[static_cast<size_t>(*pos)] = leq(shape, x, cap);
    }
    QPoly out(ring);
    for (const auto& [e, c] : form.terms()) {
        bool drop = false;
        for (size_t i = 0; i < e.size() && !drop; ++i)
            if (e[i] > 0 && !keep[i]) drop = true;
        if (!drop) out.add_term(e, c);
    }
    return out;
}

PolySystem restrict_to_index(const PolySystem& system, const QuantumIndex& cap) {
    PolySystem out;
    out.shape = system.shape;
    out.zvars = system.zvars;
    out.patch = system.patch;
    out.warnings = system.warnings;
    for (const auto& quadric : system.quadrics) {
        QPoly t = truncate_to_index(quadric, system.shape, cap);
        if (!t.is_zero()) out.quadrics.push_back(std::move(t));
    }
    for (const auto& section : system.sections) {
        LinearSection s = section;
        s.form = truncate_to_index(section.form, system.shape, cap);
        out.sections.push_back(std::move(s));
    }
    return out;
}

std::string system_to_text(const PolySystem& system) {
    std::ostringstream os;
    os << "shape " << system.shape.m << ' ' << system.shape.p << ' ' << system.shape.q << '\n';
    os << "patch " << system.patch.key() << '\n';
    for (const auto& quadric : system.quadrics) os << "quadric: " << quadric.to_string() << '\n';
    for (const auto& section : system.sections) os << "section: " << section.form.to_string() << '\n';
    return os.str();
}

PolySystem system_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    PolySystem system;
    bool have_shape = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("shape ", 0) == 0) {
            std::istringstream ls(line.substr(6));
            int m = 0, p = 0, q = 0;
            if (!(ls >> m >> p >> q)) throw parse_error("malformed shape line: '" + line + "'");
            system.shape = ProblemShape::create(m, p, q);
            system.zvars = zvar_table(system.shape);
            have_shape = true;
        } else if (line.rfind("patch ", 0) == 0) {
            if (!have_shape) throw parse_error("patch line before shape line");
            system.patch = QuantumIndex::from_key(line.substr(6));
            validate_index(system.shape, system.patch);
        } else if (line.rfind("quadric: ", 0) == 0) {
            if (!have_shape) throw parse_error("quadric line before shape line");
            system.quadrics.push_back(parse_poly(line.substr(9), system.zvars));
        } else if (line.rfind("section: ", 0) == 0) {
            if (!have_shape) throw parse_error("section line before shape line");
            LinearSection s;
            s.form = parse_poly(line.substr(9), system.zvars);
            system.sections.push_back(std::move(s));
        } else {
            throw parse_error("unrecognized line: '" + line + "'");
        }
    }
    if (!have_shape) throw parse_error("system text missing shape line");
    return system;
}

}  // namespace qgr
