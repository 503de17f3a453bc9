#ifndef QGR_GEOMETRY_HPP
#define QGR_GEOMETRY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgr/binary_form.hpp"
#include "qgr/matrix.hpp"
#include "qgr/pluecker.hpp"
#include "qgr/qposet.hpp"
#include "qgr/sparse_poly.hpp"

namespace qgr {

// The m-plane osculating the rational normal curve in (n-1)-space: row i of
// the matrix is the i-th t-derivative of (s^(n-1), t s^(n-2), ..., t^(n-1)),
// homogeneous of degree n-1-i.
struct OsculatingPlane {
    int m = 0;
    int n = 0;
    Matrix<BinaryForm> rows;

    Matrix<BigRat> evaluate(const BigRat& s, const BigRat& t) const;
};

OsculatingPlane osculating_matrix(int m, int n);

// Signed complementary minor of the osculating matrix at (1,1):
// l(alpha) = (-1)^|alpha| * minor on the columns outside alpha, where
// |alpha| = sum(alpha_i - i).
BigRat l_minor(int m, int n, const std::vector<int>& alpha);

// One hyperplane section of the Pluecker space, linear in the z variables.
struct LinearSection {
    enum class Kind { Osculating, General };
    Kind kind = Kind::General;
    BigRat s{0};
    BigRat t{0};
    QPoly form;  // over the z-variable ring of the shape
};

// The pencil section at an exact point (s,t): coefficient of z at alpha^(a)
// is l(alpha) s^rank t^(N-rank).
LinearSection lambda_form(const ProblemShape& shape, const BigRat& s, const BigRat& t);

// Same pencil with (s,t) symbolic, over the ring {z..., s, t}.
QPoly lambda_form_symbolic(const ProblemShape& shape, const VarTablePtr& ring);

// Section cut by an explicit m-plane (full-rank m x n matrix) at an exact
// point: the linear form whose vanishing is det[L; M(s,t)] = 0, with the
// coefficient of z at alpha^(a) equal to
// (-1)^(pm+|alpha|) det(L[complement of alpha]) s^a t^(q-a).
LinearSection section_from_plane(const ProblemShape& shape, const Matrix<BigRat>& plane, const BigRat& s,
                                 const BigRat& t);

// Quadratic relations cutting out the degree-q Pluecker image: classical
// two-row syzygies of the Grassmannian with each coordinate replaced by a
// degree-q form, one quadric per (s,t)-coefficient. Zero and duplicate
// quadrics are removed and the output is canonically ordered, each quadric
// normalized to a positive leading coefficient.
std::vector<QPoly> quantum_pluecker_relations(int p, int n, int q);
std::vector<QPoly> quantum_pluecker_relations(const ProblemShape& shape);

// Boundary parameterization: maps a level-(q-1) vector to level q by
// z(alpha^(a)) = A x(alpha^(a)) - B x(alpha^(a-1)), out-of-range terms zero.
PlueckerVector<BigRat> pi_map(const ProblemShape& shape, const BigRat& A, const BigRat& B,
                              const PlueckerVector<BigRat>& x);

// Section parameter schedules.
struct ScheduleSpec {
    enum class Kind { Power, Geometric, Explicit };
    Kind kind = Kind::Power;
    long exponent = 1;          // Power: t_i = i^exponent
    BigRat ratio{2};            // Geometric: t_i = ratio^(i-1)
    std::vector<BigRat> values; // Explicit

    static ScheduleSpec power(long k) { return {Kind::Power, k, BigRat(2), {}}; }
    static ScheduleSpec geometric(const BigRat& r) { return {Kind::Geometric, 1, r, {}}; }
    static ScheduleSpec explicit_values(std::vector<BigRat> v) {
        return {Kind::Explicit, 1, BigRat(2), std::move(v)};
    }
};

std::vector<BigRat> t_schedule(int count, const ScheduleSpec& spec);

// Exact linear reduction of a system: patch coordinate fixed to 1, as many
// coordinates as possible eliminated through the sections, quadrics rewritten
// over the remaining free variables.
struct Reduction {
    VarTablePtr free_ring;                  // ring of the free variables
    std::vector<int> free_vars;             // z-ring ids of the free variables
    std::map<int, QPoly> eliminated;        // z-ring id -> affine expression over free_ring
    std::vector<QPoly> reduced_quadrics;    // over free_ring
    int linear_rank = 0;
};

struct PolySystem {
    ProblemShape shape;
    VarTablePtr zvars;                   // canonical Pluecker ring
    std::vector<QPoly> quadrics;         // over zvars
    std::vector<LinearSection> sections; // forms over zvars
    QuantumIndex patch;                  // coordinate set to 1
    std::optional<Reduction> reduced;
    std::vector<std::string> warnings;
};

struct OsculatingSections {
    std::vector<BigRat> schedule;
};
struct GeneralSections {
    struct Entry {
        Matrix<BigRat> plane;
        BigRat s;
        BigRat t;
    };
    std::vector<Entry> entries;
};
using SectionsSpec = std::variant<OsculatingSections, GeneralSections>;

// Assembles quadrics and sections, applies the patch, and performs the exact
// linear reduction. Repeated osculating parameters are an input error; a
// rank-deficient section system records a warning on the returned value.
PolySystem build_system(const ProblemShape& shape, const SectionsSpec& sections,
                        std::optional<QuantumIndex> patch = std::nullopt);

// Recomputes the reduction of an assembled system in place.
void reduce_system(PolySystem& system);

// Exact diagonal change of coordinates z_v = scale_v * w_v. Scales must be
// positive; the patch variable keeps scale 1. Reduction is recomputed by the
// caller when needed.
PolySystem apply_variable_scaling(const PolySystem& system, const std::map<int, BigRat>& scales);

// Restriction onto a quantum Schubert locus: every coordinate whose index is
// not below `cap` is replaced by zero in all quadrics and sections.
PolySystem restrict_to_index(const PolySystem& system, const QuantumIndex& cap);

// Zeroes all z variables not below `cap` in a single form.
QPoly truncate_to_index(const QPoly& form, const ProblemShape& shape, const QuantumIndex& cap);

// Line-based text serialization; round-trips exactly.
std::string system_to_text(const PolySystem& system);
PolySystem system_from_text(const std::string& text);

}  // namespace qgr

#endif
