#ifndef QGR_SOLVE_HPP
#define QGR_SOLVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/certify.hpp"
#include "qgr/geometry.hpp"
#include "qgr/sparse_poly.hpp"

namespace qgr {

struct TrackSettings {
    double initial_step = 0.05;
    double min_step = 1e-7;
    double corrector_tol = 1e-10;
    int corrector_max_iters = 3;
    double divergence_bound = 1e8;
    double endpoint_tol = 1e-13;
    uint64_t seed = 0;

    double residual_tol = 1e-8;  // verification threshold on relative residuals
    double reality_tol = 1e-8;   // max |Im| for a solution to count as real
    double dedup_tol = 1e-9;     // per-coordinate relative endpoint clustering
    int max_attempts = 3;        // full reruns with a fresh homotopy constant
    int threads = 1;

    void validate() const;
};

enum class PathStatus { Converged, Diverged, Failed };

struct Solution {
    std::vector<Complex> coords;  // free variables, solver chart
    std::vector<Complex> lifted;  // full coordinate vector, original chart
    double residual = 0.0;        // max relative residual over the full system
    PathStatus status = PathStatus::Failed;
    bool is_real = false;
    int conjugate_partner = -1;
};

struct AttemptStats {
    int paths = 0;
    int converged = 0;
    int diverged = 0;
    int failed = 0;
};

// Exactly rescaled and squared copy of a system, ready for numeric work.
// The chart change is z_v = scale_v * w_v with power-of-two scales chosen to
// balance the section coefficients; the zero set corresponds bijectively.
struct PreparedSystem {
    PolySystem scaled;             // with reduction over the free ring
    std::map<int, BigRat> scales;  // zvar id -> scale
    std::vector<QPoly> targets;    // square system over the free ring
    BigInt bezout{0};
    std::vector<std::string> notes;
};

PreparedSystem prepare_system(const PolySystem& system, uint64_t seed);

struct SolveReport {
    ProblemShape shape;
    TrackSettings settings;
    std::vector<std::string> schedule;  // exact parameter strings when known
    BigInt delta{0};
    BigInt bezout{0};
    std::vector<AttemptStats> attempts;
    int converged_paths = 0;
    int distinct = 0;
    int real_count = 0;
    int conjugate_pairs = 0;
    int suspicious_unpaired = 0;
    double residual_max = 0.0;
    double residual_median = 0.0;
    bool counts_agree_with_delta = false;
    bool conjugation_closed = true;
    bool certificate_agrees = true;  // true when absent
    std::optional<Certificate> certificate;
    std::vector<std::string> warnings;
    double elapsed_seconds = 0.0;  // not part of the canonical JSON
};

struct SolveOutcome {
    PreparedSystem prepared;
    std::vector<Solution> solutions;
    SolveReport report;
};

// Full pipeline: prepare, track all total-degree paths, refine endpoints,
// deduplicate, classify reality, verify against the full system and the
// expected count. Path failures are recorded, never fatal.
SolveOutcome solve_system(const PolySystem& system, const TrackSettings& settings);

// Spec-shaped wrapper around solve_system.
std::pair<std::vector<Solution>, SolveReport> solve_homotopy(const PolySystem& system,
                                                             const TrackSettings& settings);

struct RealityCounts {
    int real = 0;
    int conjugate_pairs = 0;
    int suspicious = 0;
};

// Flags real solutions and pairs the rest into conjugate pairs.
RealityCounts classify_real(std::vector<Solution>& solutions, double reality_tol);

// Recomputes residuals and distinctness, compares against the chain-count
// degree and the certificate when present; all findings are report fields.
SolveReport verify_solutions(const PreparedSystem& prepared, std::vector<Solution>& solutions,
                             const TrackSettings& settings);

// Runs exact certification over the prepared system's free ring, projecting
// onto the given free variable (default: the last one).
Certificate certify_prepared(const PreparedSystem& prepared, const std::vector<Solution>& solutions,
                             const TrackSettings& settings, int keep_var = -1);

// Canonical JSON serialization (timing excluded so equal-seed runs are
// byte-identical; pass include_timing for human inspection).
std::string report_to_json(const SolveReport& report, const std::vector<Solution>& solutions,
                           bool include_timing = false);

// Low-level total-degree tracker over an explicit square system; exposed for
// direct tests of the path machinery.
struct TrackedPoint {
    std::vector<Complex> coords;
    PathStatus status = PathStatus::Failed;
};
std::vector<TrackedPoint> track_total_degree(const std::vector<QPoly>& equations, const VarTablePtr& ring,
                                             const TrackSettings& settings, AttemptStats* stats = nullptr);

}  // namespace qgr

#endif
