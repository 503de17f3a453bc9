#ifndef QGR_QPOSET_HPP
#define QGR_QPOSET_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgr/rational.hpp"

namespace qgr {

// Problem dimensions for degree-q maps from the line to the Grassmannian
// of p-planes in (m+p)-space. m and p must both exceed 1; q may be 0.
struct ProblemShape {
    int m = 0;
    int p = 0;
    int q = 0;

    int n() const { return m + p; }
    int N() const { return p * m + q * n(); }

    // Validates and constructs; throws input_error on bad dimensions.
    static ProblemShape create(int m, int p, int q);

    bool operator==(const ProblemShape&) const = default;
    std::string to_string() const;
};

// One Pluecker index: a strictly increasing p-subset of 1..n together with
// a quantum level in 0..q.
struct QuantumIndex {
    std::vector<int> alpha;
    int level = 0;

    bool operator==(const QuantumIndex&) const = default;
    // Lexicographic on (level, alpha); fixes the canonical iteration order.
    std::strong_ordering operator<=>(const QuantumIndex& other) const;

    // "a:alpha_1,...,alpha_p", e.g. "1:3,4".
    std::string key() const;
    static QuantumIndex from_key(const std::string& key);

    // Compact display form, e.g. "34^(1)"; entries >= 10 are comma separated.
    std::string label() const;
};

void validate_index(const ProblemShape& shape, const QuantumIndex& x);

// All of C_q in canonical order (lexicographic on (level, alpha)).
std::vector<QuantumIndex> enumerate_indices(const ProblemShape& shape);

int rank(const ProblemShape& shape, const QuantumIndex& x);
bool leq(const ProblemShape& shape, const QuantumIndex& x, const QuantumIndex& y);

// The index set C_q with its partial order, cover structure and chain counts.
// Construction precomputes the order relation; covers are derived from the
// rank criterion and cross-checked against the no-intermediate-element
// definition (small posets only, where the check is affordable).
class QuantumPoset {
  public:
    explicit QuantumPoset(const ProblemShape& shape);

    const ProblemShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<QuantumIndex>& elements() const { return elements_; }
    const QuantumIndex& element(int id) const { return elements_[static_cast<size_t>(id)]; }

    // Position of x in the canonical enumeration; throws input_error if x
    // is not a valid index for the shape.
    int id_of(const QuantumIndex& x) const;

    int rank_of(int id) const { return ranks_[static_cast<size_t>(id)]; }
    bool leq_ids(int x, int y) const;

    const std::vector<int>& lower_covers(int id) const { return lower_covers_[static_cast<size_t>(id)]; }
    const std::vector<int>& upper_covers(int id) const { return upper_covers_[static_cast<size_t>(id)]; }

    int bottom_id() const { return bottom_; }
    int top_id() const { return top_; }

    // Greatest lower bound; throws lattice_violation_error if the common
    // lower bounds have no unique maximum.
    int glb_ids(int x, int y) const;

    // Number of maximal chains from the bottom up to each element.
    const std::vector<BigInt>& chain_counts() const;

    // Exhaustive no-intermediate validation of the cover lists.
    bool validate_covers_exhaustively() const;

  private:
    ProblemShape shape_;
    std::vector<QuantumIndex> elements_;
    std::vector<int> ranks_;
    std::map<QuantumIndex, int> position_;
    // Row-major bitset: down_[y] has bit x set iff x <= y.
    size_t words_ = 0;
    std::vector<uint64_t> down_;
    std::vector<std::vector<int>> lower_covers_;
    std::vector<std::vector<int>> upper_covers_;
    int bottom_ = -1;
    int top_ = -1;
    mutable std::vector<BigInt> chain_counts_;

    const uint64_t* down_row(int id) const { return down_.data() + static_cast<size_t>(id) * words_; }
};

// Per-operation entry points (each builds the poset for the shape).
std::pair<std::vector<QuantumIndex>, std::vector<QuantumIndex>> covers(const ProblemShape& shape,
                                                                       const QuantumIndex& x);
QuantumIndex glb(const ProblemShape& shape, const QuantumIndex& x, const QuantumIndex& y);
BigInt chain_count(const ProblemShape& shape, const QuantumIndex& x);
BigInt delta_chains(const ProblemShape& shape);

// Closed-form degree of the compactified map space, evaluated with exact
// rationals; cross-validated against delta_chains in the test suite.
BigInt delta_formula(const ProblemShape& shape);

// Standard Young tableaux of a p x m rectangle (hook length formula);
// independent oracle for the q = 0 degree.
BigInt syt_rectangle(int p, int m);

// Hasse diagram in DOT format, nodes labeled "alpha^(a)|rank".
std::string hasse_dot(const QuantumPoset& poset);

// Chain-count table as a JSON object keyed by canonical index strings.
std::string chain_counts_json(const QuantumPoset& poset);

// Full poset dump (elements, ranks, covers, chain counts) as JSON.
std::string poset_json(const QuantumPoset& poset);

}  // namespace qgr

#endif
